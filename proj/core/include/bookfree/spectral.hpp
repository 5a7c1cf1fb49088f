#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bookfree/graph.hpp"

namespace bookfree {

inline constexpr double kDefaultTolerance = 1e-12;

/// Result of a power iteration: the spectral radius, its Perron vector
/// (scaled to max entry 1) and the evidence that they are accurate.
struct PerronCertificate {
  double rho = 0.0;
  std::vector<double> x;
  /// max_v |(A x)_v - rho x_v|.
  double residual = 0.0;
  /// Collatz–Wielandt bracket min/max of (A x)_v / x_v over the support of x.
  double lower = 0.0;
  double upper = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;

  /// Certified distance from rho to the true spectral radius: the width of
  /// the Collatz–Wielandt bracket around rho, never below the residual.
  double error_bound() const;
};

struct PerronOptions {
  double tol = kDefaultTolerance;
  /// 0 selects the default 200 n + 10^4.
  std::int64_t max_iter = 0;
  /// Optional starting vector (length n, nonnegative); all-ones otherwise.
  std::span<const double> start = {};
};

/// Power iteration on A + cI (c > 0 keeps the iteration from oscillating on
/// bipartite graphs). Disconnected graphs are handled per component and the
/// certificate of the component with the largest rho is returned, embedded
/// at full length with zeros elsewhere.
PerronCertificate perron(const Graph& g, const PerronOptions& options = {});
PerronCertificate perron(const Graph& g, double tol, std::int64_t max_iter = 0);

std::int64_t default_max_iter(int n);

/// Verdict of a strict floating-point comparison a > b.
enum class Strict { Holds, Violated, Inconclusive };

/// a > b holds when a - b exceeds err_a + err_b + 1e-12, is violated when
/// b - a exceeds the same slack, and is inconclusive in between.
Strict strictly_greater(double a, double err_a, double b, double err_b);

/// G' = G - {vj v : v in S} + {vi v : v in S}. Requires S ⊆ N(vj) \ N(vi),
/// vi, vj not in S and vi != vj; violations throw DomainError naming the
/// offending vertex.
Graph rotate(const Graph& g, int vi, int vj, std::span<const int> moved);

}  // namespace bookfree
