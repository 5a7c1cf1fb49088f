#include "bookfree/canonical.hpp"

#include <string>

#include "bookfree/errors.hpp"
#include "bookfree/graph6.hpp"

namespace bookfree {

namespace {

constexpr int kTop = SmallGraph::kMaxOrder - 1;

// Same neighbourhood outside {u, w}. On a graph this relation is the union
// of the true-twin and false-twin relations and is an equivalence; swapping
// two such vertices is an automorphism.
bool twins(const SmallGraph& g, int u, int w) {
  const auto mask = static_cast<std::uint16_t>(~((1U << u) | (1U << w)));
  return (g.rows[u] & mask) == (g.rows[w] & mask);
}

// Depth-first search over labellings sigma(0), sigma(1), ... compared column
// by column against `best`. In check mode `best` is fixed to the identity
// columns and the search stops as soon as a larger string appears. In
// canonical mode `best` is raised whenever a larger prefix appears.
class LabelSearch {
 public:
  LabelSearch(const SmallGraph& g, bool check_only) : g_(g), check_only_(check_only) {
    if (check_only_) best_ = adjacency_columns(g);
  }

  bool run() {
    if (g_.n <= 1) {
      for (int v = 0; v < g_.n; ++v) best_perm_[v] = v;
      return true;
    }
    if (!check_only_) best_valid_ = 0;
    descend(0, 0);
    return !larger_found_;
  }

  const std::array<int, SmallGraph::kMaxOrder>& best_perm() const { return best_perm_; }

 private:
  void descend(int depth, std::uint16_t used) {
    if (larger_found_) return;
    if (depth == g_.n) {
      if (!check_only_) best_perm_ = perm_;
      return;
    }
    std::uint16_t tried = 0;
    for (int v = 0; v < g_.n; ++v) {
      if ((used >> v) & 1U) continue;
      bool redundant = false;
      for (std::uint16_t t = tried; t != 0; t &= static_cast<std::uint16_t>(t - 1)) {
        if (twins(g_, __builtin_ctz(t), v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried |= static_cast<std::uint16_t>(1U << v);

      std::uint16_t column = 0;
      for (int i = 0; i < depth; ++i) {
        if (g_.has_edge(perm_[i], v)) column |= static_cast<std::uint16_t>(1U << (kTop - i));
      }
      perm_[depth] = v;
      if (check_only_) {
        if (column > best_[depth]) {
          larger_found_ = true;
          return;
        }
        if (column < best_[depth]) continue;
      } else {
        if (depth < best_valid_ && column < best_[depth]) continue;
        if (depth >= best_valid_ || column > best_[depth]) {
          best_[depth] = column;
          best_valid_ = depth + 1;
        }
      }
      descend(depth + 1, static_cast<std::uint16_t>(used | (1U << v)));
      if (larger_found_) return;
    }
  }

  const SmallGraph& g_;
  bool check_only_;
  bool larger_found_ = false;
  // Number of leading entries of best_ that belong to the current best
  // prefix (canonical mode only).
  int best_valid_ = 0;
  std::array<std::uint16_t, SmallGraph::kMaxOrder> best_{};
  std::array<int, SmallGraph::kMaxOrder> perm_{};
  std::array<int, SmallGraph::kMaxOrder> best_perm_{};
};

}  // namespace

SmallGraph to_small(const Graph& g) {
  if (g.order() > SmallGraph::kMaxOrder) {
    throw CapacityError("compact graphs hold at most 16 vertices, got " + std::to_string(g.order()));
  }
  SmallGraph s;
  s.n = g.order();
  for (const auto& [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

Graph to_graph(const SmallGraph& g) {
  Graph out(g.n);
  for (int v = 0; v < g.n; ++v) {
    for (int u = v + 1; u < g.n; ++u) {
      if (g.has_edge(u, v)) out.add_edge(v, u);
    }
  }
  return out;
}

std::array<std::uint16_t, SmallGraph::kMaxOrder> adjacency_columns(const SmallGraph& g) {
  std::array<std::uint16_t, SmallGraph::kMaxOrder> cols{};
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cols[j] |= static_cast<std::uint16_t>(1U << (kTop - i));
    }
  }
  return cols;
}

bool is_canonical(const SmallGraph& g) {
  LabelSearch search(g, true);
  return search.run();
}

SmallGraph canonical_form(const SmallGraph& g) {
  LabelSearch search(g, false);
  search.run();
  const auto& perm = search.best_perm();
  SmallGraph out;
  out.n = g.n;
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(perm[i], perm[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph canonical_form(const Graph& g) { return to_graph(canonical_form(to_small(g))); }

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

}  // namespace bookfree
