#include <deque>
#include <vector>

#include "bookfree/invariants.hpp"

namespace bookfree {

namespace {

// Edmonds' blossom algorithm, one BFS per free vertex, O(n^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : n_(g.order()), adj_(n_), match_(n_, -1) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  int run() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_augmenting_path(v);
      while (u != -1) {
        const int pu = parent_[u];
        const int next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    int size = 0;
    for (int v = 0; v < n_; ++v) size += (match_[v] > v);
    return size;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_ancestor(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

int matching_number(const Graph& g) { return BlossomMatcher(g).run(); }

}  // namespace bookfree
