#pragma once

#include <array>
#include <cstdint>

#include "bookfree/spectral.hpp"

namespace bookfree {

/// f(s,t,r,x) = x^5 - (2r+st)x^3 - 2r^2 x^2 + (2str - sr^2 - tr^2)x, the
/// characteristic polynomial of the five-block quotient of K^{r,r}_{s,t}.
/// coeff[k] is the coefficient of x^k.
struct QuinticPoly {
  int s = 0;
  int t = 0;
  int r = 0;
  std::array<std::int64_t, 6> coeff{};

  long double operator()(long double x) const;
};

QuinticPoly book_quintic(int s, int t, int r);

/// Largest real root located by bisection on [sqrt(st), s+t+1] with a
/// certified sign change f(lo) < 0 < f(hi).
struct RootCertificate {
  double root = 0.0;
  long double lo = 0.0L;
  long double hi = 0.0L;
  long double f_lo = 0.0L;
  long double f_hi = 0.0L;
  int iterations = 0;

  double error_bound() const { return static_cast<double>((hi - lo) / 2.0L); }
};

/// Throws std::logic_error when the initial bracket has no sign change.
RootCertificate largest_root(const QuinticPoly& p, double tol = 1e-15);

/// Sign of f(p/q) computed exactly in 128-bit integers (q > 0).
int exact_sign_at(const QuinticPoly& f, std::int64_t num, std::int64_t den);

/// Check of the lower bounds on rho(K^{r,r}_{⌊(n-1)/2⌋,⌈(n-1)/2⌉}) for
/// r >= 1 and n >= 8(r^2 + r + 4).
struct LowerBoundReport {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  RootCertificate quintic;
  PerronCertificate power;
  /// (n-1)/2 - 1/(4(n-1)).
  double half_bound = 0.0;
  /// 4(r^2 + r + 2).
  std::int64_t degree_bound = 0;
  /// ⌊(n-1)^2/4⌋.
  std::int64_t square_bound = 0;
  double margin_half = 0.0;
  double margin_chain = 0.0;
  double margin_square = 0.0;
  Strict rho_vs_half = Strict::Inconclusive;
  bool half_vs_degree = false;
  Strict square_vs_floor = Strict::Inconclusive;
  /// f evaluated exactly at the rational half bound is negative, so the
  /// largest root lies strictly above it.
  bool exact_sign_negative = false;
  double route_difference = 0.0;

  bool holds() const;
};

/// Throws InvalidParameter when r < 1 or n < 8(r^2 + r + 4).
LowerBoundReport check_lower_bounds(int n, int r);

/// rho(K^{r,r}_{s-1,t+1}) - rho(K^{r,r}_{s,t}) from the two quintic roots.
struct BalanceReport {
  int s = 0;
  int t = 0;
  int r = 0;
  RootCertificate before;
  RootCertificate after;
  double difference = 0.0;
  Strict increase = Strict::Inconclusive;
};

/// Requires s >= t + 2 and 1 <= r <= min(s - 1, t).
BalanceReport balance_compare(int s, int t, int r);

}  // namespace bookfree
