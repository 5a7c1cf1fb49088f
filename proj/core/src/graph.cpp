#include "bookfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "bookfree/errors.hpp"

namespace bookfree {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw InvalidParameter("vertex set universe must be nonnegative");
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= n_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw InvalidParameter("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxOrder) + "]");
  }
  n_ = n;
  stride_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidParameter("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * stride_, static_cast<std::size_t>(stride_)};
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

int Graph::common_neighbors(int u, int v) const {
  auto a = row(u);
  auto b = row(v);
  int c = 0;
  for (int i = 0; i < stride_; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

int Graph::degree_in(int v, const VertexSet& set) const {
  if (set.universe() != n_) throw InvalidParameter("vertex set universe does not match graph order");
  auto a = row(v);
  auto b = set.words();
  int c = 0;
  for (int i = 0; i < stride_; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int i = 0; i < stride_; ++i) {
    std::uint64_t w = r[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph Graph::induced(const VertexSet& set) const {
  auto m = set.members();
  return induced(m);
}

std::int64_t Graph::edges_within(const VertexSet& set) const {
  std::int64_t twice = 0;
  for (int v : set.members()) twice += degree_in(v, set);
  return twice / 2;
}

std::int64_t Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  std::int64_t total = 0;
  for (int v : a.members()) total += degree_in(v, b);
  return total;
}

BipartitionResult check_bipartite(const Graph& g) {
  const int n = g.order();
  BipartitionResult result;
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // BFS levels of u and v coincide; close the cycle through their
          // lowest common ancestor in the BFS tree.
          std::vector<int> left{u};
          std::vector<int> right{v};
          int a = u;
          int b = v;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            if (a != b) right.push_back(b);
          }
          result.bipartite = false;
          result.odd_cycle = left;
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          return result;
        }
      }
    }
  }
  result.coloring = std::move(color);
  return result;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int v : g.neighbors(comp[i])) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph without_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return g.induced(keep);
}

bool is_complete_bipartite(const Graph& g) {
  Graph h = without_isolated(g);
  if (h.order() < 2 || !is_connected(h)) return false;
  auto bp = check_bipartite(h);
  if (!bp.bipartite) return false;
  std::int64_t left = std::count(bp.coloring.begin(), bp.coloring.end(), 0);
  std::int64_t right = h.order() - left;
  return h.edge_count() == left * right;
}

}  // namespace bookfree
