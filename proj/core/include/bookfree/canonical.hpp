#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bookfree/graph.hpp"

namespace bookfree {

/// Compact graph on at most 16 vertices used by the enumerator. Row v holds
/// the neighbourhood of v as a bit mask.
struct SmallGraph {
  static constexpr int kMaxOrder = 16;

  int n = 0;
  std::array<std::uint16_t, kMaxOrder> rows{};

  bool has_edge(int u, int v) const { return (rows[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  void remove_edge(int u, int v) {
    rows[u] &= static_cast<std::uint16_t>(~(1U << v));
    rows[v] &= static_cast<std::uint16_t>(~(1U << u));
  }
  int degree(int v) const { return __builtin_popcount(rows[v]); }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// Throws CapacityError when g has more than 16 vertices.
SmallGraph to_small(const Graph& g);
Graph to_graph(const SmallGraph& g);

/// Column j of the adjacency string: bit (15 - i) set iff {i, j} is an edge,
/// for i < j. Strings compare column by column, so a larger column value at
/// the first difference means a lexicographically larger string.
std::array<std::uint16_t, SmallGraph::kMaxOrder> adjacency_columns(const SmallGraph& g);

/// True iff no relabelling of g yields a lexicographically larger
/// column-major upper-triangle string.
bool is_canonical(const SmallGraph& g);

/// The relabelling of g with the largest column-major adjacency string.
/// Isomorphic graphs map to identical results.
SmallGraph canonical_form(const SmallGraph& g);
Graph canonical_form(const Graph& g);

/// graph6 of canonical_form(g).
std::string canonical_graph6(const Graph& g);

}  // namespace bookfree
