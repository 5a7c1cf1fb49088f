#include "bookfree/quintic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"

namespace bookfree {

namespace {

__extension__ typedef __int128 Int128;

}  // namespace

long double QuinticPoly::operator()(long double x) const {
  long double acc = 0.0L;
  for (int k = 5; k >= 0; --k) acc = acc * x + static_cast<long double>(coeff[k]);
  return acc;
}

QuinticPoly book_quintic(int s, int t, int r) {
  if (s < 1 || t < 1) throw InvalidParameter("book quintic needs s >= 1 and t >= 1");
  if (r < 1 || r > s || r > t) throw InvalidParameter("book quintic needs 1 <= r <= min(s, t)");
  QuinticPoly p{s, t, r, {}};
  const std::int64_t S = s;
  const std::int64_t T = t;
  const std::int64_t R = r;
  p.coeff[5] = 1;
  p.coeff[4] = 0;
  p.coeff[3] = -(2 * R + S * T);
  p.coeff[2] = -2 * R * R;
  p.coeff[1] = 2 * S * T * R - S * R * R - T * R * R;
  p.coeff[0] = 0;
  return p;
}

RootCertificate largest_root(const QuinticPoly& p, double tol) {
  RootCertificate c;
  c.lo = std::sqrt(static_cast<long double>(p.s) * p.t);
  c.hi = static_cast<long double>(p.s + p.t + 1);
  c.f_lo = p(c.lo);
  c.f_hi = p(c.hi);
  if (!(c.f_lo < 0.0L && c.f_hi > 0.0L)) {
    throw std::logic_error("no sign change of the book quintic on [sqrt(st), s+t+1] for (s,t,r) = (" +
                           std::to_string(p.s) + "," + std::to_string(p.t) + "," + std::to_string(p.r) + ")");
  }
  while (c.hi - c.lo > static_cast<long double>(tol) * c.hi) {
    const long double mid = (c.lo + c.hi) / 2.0L;
    if (mid <= c.lo || mid >= c.hi) break;
    const long double fm = p(mid);
    if (fm < 0.0L) {
      c.lo = mid;
      c.f_lo = fm;
    } else if (fm > 0.0L) {
      c.hi = mid;
      c.f_hi = fm;
    } else {
      c.lo = c.hi = mid;
      c.f_lo = c.f_hi = 0.0L;
      break;
    }
    ++c.iterations;
  }
  c.root = static_cast<double>((c.lo + c.hi) / 2.0L);
  return c;
}

int exact_sign_at(const QuinticPoly& f, std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidParameter("denominator must be positive");
  // q^5 f(p/q) = sum_k c_k p^k q^(5-k)
  Int128 total = 0;
  Int128 pk = 1;
  for (int k = 0; k <= 5; ++k) {
    Int128 qk = 1;
    for (int j = 0; j < 5 - k; ++j) qk *= den;
    total += static_cast<Int128>(f.coeff[k]) * pk * qk;
    pk *= num;
  }
  return total > 0 ? 1 : (total < 0 ? -1 : 0);
}

bool LowerBoundReport::holds() const {
  return rho_vs_half == Strict::Holds && half_vs_degree && square_vs_floor == Strict::Holds &&
         exact_sign_negative;
}

LowerBoundReport check_lower_bounds(int n, int r) {
  if (r < 1) throw InvalidParameter("lower-bound check needs r >= 1");
  const std::int64_t threshold = 8LL * (static_cast<std::int64_t>(r) * r + r + 4);
  if (n < threshold) {
    throw InvalidParameter("lower-bound check needs n >= 8(r^2+r+4) = " + std::to_string(threshold) + ", got n = " +
                           std::to_string(n));
  }
  LowerBoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.s = (n - 1) / 2;
  rep.t = n - 1 - rep.s;

  const QuinticPoly f = book_quintic(rep.s, rep.t, r);
  rep.quintic = largest_root(f);
  rep.power = perron(make_kst_pendant(rep.s, rep.t, r, r));
  rep.route_difference = rep.quintic.root - rep.power.rho;

  const std::int64_t m1 = n - 1;
  rep.half_bound = static_cast<double>(m1) / 2.0 - 1.0 / (4.0 * static_cast<double>(m1));
  rep.degree_bound = 4LL * (static_cast<std::int64_t>(r) * r + r + 2);
  rep.square_bound = m1 * m1 / 4;

  // Use the tighter of the two certified routes for the strict comparisons.
  const bool quintic_tighter = rep.quintic.error_bound() <= rep.power.error_bound();
  const double rho = quintic_tighter ? rep.quintic.root : rep.power.rho;
  const double err = quintic_tighter ? rep.quintic.error_bound() : rep.power.error_bound();

  rep.margin_half = rho - rep.half_bound;
  rep.rho_vs_half = strictly_greater(rho, err, rep.half_bound, 0.0);

  // (2(n-1)^2 - 1) / (4(n-1)) > 4(r^2+r+2), exactly.
  const std::int64_t half_num = 2 * m1 * m1 - 1;
  const std::int64_t half_den = 4 * m1;
  rep.half_vs_degree = half_num > rep.degree_bound * half_den;
  rep.margin_chain = rep.half_bound - static_cast<double>(rep.degree_bound);

  rep.margin_square = rho * rho - static_cast<double>(rep.square_bound);
  rep.square_vs_floor = strictly_greater(rho * rho, 2.0 * rho * err + 1e-12 * rho * rho,
                                         static_cast<double>(rep.square_bound), 0.0);

  rep.exact_sign_negative = exact_sign_at(f, half_num, half_den) < 0;
  return rep;
}

BalanceReport balance_compare(int s, int t, int r) {
  if (s < t + 2) {
    throw InvalidParameter("balance comparison needs s >= t + 2 (got s = " + std::to_string(s) +
                           ", t = " + std::to_string(t) + ")");
  }
  if (r < 1 || r > s - 1 || r > t) throw InvalidParameter("balance comparison needs 1 <= r <= min(s - 1, t)");
  BalanceReport rep;
  rep.s = s;
  rep.t = t;
  rep.r = r;
  rep.before = largest_root(book_quintic(s, t, r));
  rep.after = largest_root(book_quintic(s - 1, t + 1, r));
  rep.difference = rep.after.root - rep.before.root;
  rep.increase = strictly_greater(rep.after.root, rep.after.error_bound(), rep.before.root, rep.before.error_bound());
  return rep;
}

}  // namespace bookfree
