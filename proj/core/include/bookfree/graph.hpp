#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bookfree {

/// Dense vertex subset over {0, ..., n-1}, stored with the same word stride
/// as a Graph row so membership counts reduce to popcounts.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const noexcept { return n_; }
  void insert(int v);
  void erase(int v);
  bool contains(int v) const;
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Symmetric, loop-free; n is capped at kMaxOrder.
class Graph {
 public:
  static constexpr int kMaxOrder = 512;

  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  int max_degree() const;
  std::int64_t edge_count() const;

  /// |N(u) ∩ N(v)|.
  int common_neighbors(int u, int v) const;
  /// |N(v) ∩ set|.
  int degree_in(int v, const VertexSet& set) const;

  std::vector<int> neighbors(int v) const;
  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  std::span<const std::uint64_t> row(int v) const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;
  Graph induced(const VertexSet& set) const;

  /// Edges with both endpoints in `set`.
  std::int64_t edges_within(const VertexSet& set) const;
  /// Edges with one endpoint in `a` and the other in `b` (a, b disjoint).
  std::int64_t edges_between(const VertexSet& a, const VertexSet& b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct BipartitionResult {
  bool bipartite = true;
  /// Vertices of one odd cycle in cyclic order; empty when bipartite.
  std::vector<int> odd_cycle;
  /// 2-coloring (0/1) when bipartite; empty otherwise.
  std::vector<int> coloring;
};

BipartitionResult check_bipartite(const Graph& g);
inline bool is_bipartite(const Graph& g) { return check_bipartite(g).bipartite; }

bool is_connected(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// Isolated vertices removed; remaining vertices keep their relative order.
Graph without_isolated(const Graph& g);

/// True when g (isolated vertices ignored) is K_{s,t} for some s, t >= 1.
bool is_complete_bipartite(const Graph& g);

}  // namespace bookfree
