#pragma once

#include <cstdint>
#include <vector>

#include "bookfree/graph.hpp"

namespace bookfree {

/// Vertex partition together with its quotient matrix. `counts` holds the
/// exact b_{i,j} and is meaningful only when `equitable`; `average` always
/// holds the mean row sums of each adjacency block.
struct QuotientSystem {
  std::vector<std::vector<int>> blocks;
  std::vector<std::int64_t> counts;
  std::vector<double> average;
  bool equitable = false;

  int size() const { return static_cast<int>(blocks.size()); }
  std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * size() + j]; }
};

/// Blocks must be nonempty, disjoint and cover V(G); DomainError otherwise.
QuotientSystem check_equitable(const Graph& g, std::vector<std::vector<int>> blocks);

/// Largest eigenvalue of an equitable, irreducible quotient matrix.
/// DomainError for non-equitable or reducible input.
double quotient_rho(const QuotientSystem& qs);

/// The five-block partition {v0} ∪ N_S(v0) ∪ N_T(v0) ∪ (S \ N_S) ∪ (T \ N_T)
/// of make_kst_pendant(s, t, r1, r2).
std::vector<std::vector<int>> pendant_partition(int s, int t, int r1, int r2);

}  // namespace bookfree
