#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "bookfree/canonical.hpp"
#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/search.hpp"
#include "bookfree/spectral.hpp"
#include "rng.hpp"

namespace bookfree {

namespace {

using detail::Rng;

// A move is accepted only when rho grows by more than this.
constexpr double kAcceptMargin = 1e-10;

struct RestartResult {
  Graph best;
  double rho = 0.0;
  double error = 0.0;
  std::int64_t evaluated = 0;
  std::int64_t accepted = 0;
};

class Climber {
 public:
  explicit Climber(const Constraint& c) : c_(c) {}

  // Adding {u, v} to g keeps bk <= r.
  bool books_ok_after_add(const Graph& g, int u, int v) const {
    if (!c_.book_bound) return true;
    const int r = *c_.book_bound;
    if (g.common_neighbors(u, v) > r) return false;
    for (int k : g.neighbors(u)) {
      if (!g.has_edge(v, k)) continue;
      // After adding {u, v}, vertex v (resp. u) joins N(u) ∩ N(k) (resp. N(v) ∩ N(k)).
      if (g.common_neighbors(u, k) + 1 > r) return false;
      if (g.common_neighbors(v, k) + 1 > r) return false;
    }
    return true;
  }

  bool degree_ok_after_add(const Graph& g, int u, int v) const {
    if (!c_.max_degree) return true;
    return g.degree(u) < *c_.max_degree && g.degree(v) < *c_.max_degree;
  }

  bool can_add(const Graph& g, int u, int v) const {
    if (c_.max_edges && g.edge_count() >= *c_.max_edges) return false;
    return degree_ok_after_add(g, u, v) && books_ok_after_add(g, u, v);
  }

  // Structural checks that an edge deletion can break.
  bool global_ok(const Graph& g) const {
    if (c_.non_bipartite && is_bipartite(g)) return false;
    if (c_.connected && !is_connected(g)) return false;
    return true;
  }

  bool random_non_edge(const Graph& g, Rng& rng, int& u, int& v) const {
    const int n = g.order();
    for (int tries = 0; tries < 64; ++tries) {
      u = rng.below(n);
      v = rng.below(n);
      if (u != v && !g.has_edge(u, v)) return true;
    }
    return false;
  }

  Graph random_start(Rng& rng) const {
    const int n = c_.order;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::int64_t target = static_cast<std::int64_t>(pairs.size());
    if (c_.max_edges) target = std::min(target, *c_.max_edges);
    if (c_.edge_count) target = std::min(target, *c_.edge_count);
    for (int attempt = 0; attempt < 100; ++attempt) {
      Graph g(n);
      if (c_.non_bipartite) {
        const int len = (c_.book_bound && *c_.book_bound == 0) ? 5 : 3;
        if (n < len) break;
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        rng.shuffle(perm);
        for (int k = 0; k < len; ++k) g.add_edge(perm[k], perm[(k + 1) % len]);
      }
      rng.shuffle(pairs);
      for (const auto& [u, v] : pairs) {
        if (g.edge_count() >= target) break;
        if (!g.has_edge(u, v) && can_add(g, u, v)) g.add_edge(u, v);
      }
      if (satisfies(g, c_)) return g;
    }
    throw DomainError("local search found no admissible starting state for order " + std::to_string(n));
  }

  Graph perturb(const Graph& base, Rng& rng) const {
    Graph g = base;
    if (c_.edge_count) return g;
    const int drops = 1 + rng.below(std::max(1, base.order() / 4));
    for (int k = 0; k < drops; ++k) {
      const auto edges = g.edges();
      if (edges.empty()) break;
      const auto [a, b] = edges[rng.below(static_cast<int>(edges.size()))];
      g.remove_edge(a, b);
      if (!global_ok(g)) g.add_edge(a, b);
    }
    return g;
  }

  RestartResult climb(Graph g, const LocalSearchOptions& opt, Rng& rng) const {
    RestartResult res;
    PerronCertificate cert = perron(g);
    res.evaluated = 1;
    const bool swaps_only = c_.edge_count.has_value();
    for (std::int64_t step = 0; step < opt.steps; ++step) {
      const int kind = swaps_only ? 2 : rng.below(3);
      int u = 0;
      int v = 0;
      Graph next = g;
      if (kind == 1) {
        // Deleting an edge never increases rho, so the move cannot be
        // accepted under strict improvement.
        continue;
      }
      if (!random_non_edge(g, rng, u, v)) continue;
      if (kind == 2) {
        // Half of the swaps drop an edge at u or v, which is where a book
        // created by the new edge would have to be broken.
        std::vector<std::pair<int, int>> pool;
        if (rng.below(2) == 0) {
          for (int w : g.neighbors(u)) pool.emplace_back(u, w);
          for (int w : g.neighbors(v)) pool.emplace_back(v, w);
        }
        if (pool.empty()) pool = g.edges();
        if (pool.empty()) continue;
        const auto [a, b] = pool[rng.below(static_cast<int>(pool.size()))];
        next.remove_edge(a, b);
      }
      if (!can_add(next, u, v)) continue;
      next.add_edge(u, v);
      if (kind == 2 && !global_ok(next)) continue;
      PerronOptions po;
      po.start = cert.x;
      PerronCertificate trial = perron(next, po);
      ++res.evaluated;
      if (trial.rho > cert.rho + kAcceptMargin) {
        g = std::move(next);
        cert = std::move(trial);
        ++res.accepted;
      }
    }
    res.rho = cert.rho;
    res.error = cert.error_bound();
    res.best = std::move(g);
    return res;
  }

 private:
  Constraint c_;
};

}  // namespace

ExtremalRecord local_search(const Constraint& c, const LocalSearchOptions& options) {
  validate(c);
  if (options.restarts < 1) throw InvalidParameter("local search needs at least one restart");
  if (options.steps < 0) throw InvalidParameter("local search step budget must be >= 0");
  if (!(options.tie_tol > 0.0)) throw InvalidParameter("tie tolerance must be positive");
  if (options.start && !satisfies(*options.start, c)) {
    throw DomainError("local search start graph does not satisfy the constraint");
  }
  const Climber climber(c);
  const int n = c.order;

  std::optional<Graph> reference;
  if (c.book_bound && *c.book_bound >= 1 && (n - 1) / 2 >= *c.book_bound) {
    Graph ref = make_book_extremal(n, *c.book_bound);
    if (satisfies(ref, c)) reference = std::move(ref);
  }

  std::vector<RestartResult> results(static_cast<std::size_t>(options.restarts));
  std::vector<std::string> failures(results.size());
  std::atomic<int> cursor{0};
  auto work = [&] {
    for (int k = cursor++; k < options.restarts; k = cursor++) {
      try {
        Rng rng(detail::splitmix64(options.seed + 0x632BE59BD9B4E019ULL * static_cast<std::uint64_t>(k + 1)));
        Graph start;
        if (k == 0 && options.start) {
          start = *options.start;
        } else if (k == 0 && reference) {
          start = *reference;
        } else if (reference && k % 2 == 1) {
          start = climber.perturb(*reference, rng);
        } else {
          start = climber.random_start(rng);
        }
        results[k] = climber.climb(std::move(start), options, rng);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  int workers = options.workers > 0 ? options.workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min(workers, options.restarts);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw DomainError(f);
  }

  ExtremalRecord rec;
  rec.mode = SearchMode::LocalSearch;
  rec.constraint = c;
  rec.tie_tol = options.tie_tol;
  rec.seed = options.seed;
  rec.restarts = options.restarts;
  rec.steps = options.steps;
  if (reference) rec.reference_rho = perron(*reference).rho;

  double best = results.front().rho;
  for (const auto& res : results) {
    best = std::max(best, res.rho);
    rec.examined += res.evaluated;
    rec.accepted_moves += res.accepted;
  }
  rec.best_rho = best;
  std::vector<std::pair<std::string, double>> found;
  for (const auto& res : results) {
    if (res.rho < best - options.tie_tol) continue;
    std::string g6 = n <= SmallGraph::kMaxOrder ? canonical_graph6(res.best) : emit_graph6(res.best);
    found.emplace_back(std::move(g6), res.rho);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              found.end());
  for (auto& [g6, rho] : found) {
    rec.maximizers.push_back(std::move(g6));
    rec.maximizer_rho.push_back(rho);
  }
  if (rec.reference_rho) rec.exceeded_reference = best > *rec.reference_rho + options.tie_tol;
  return rec;
}

}  // namespace bookfree
