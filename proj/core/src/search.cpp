#include "bookfree/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "bookfree/canonical.hpp"
#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/spectral.hpp"

namespace bookfree {

namespace {

constexpr int kMaxPairs = SmallGraph::kMaxOrder * (SmallGraph::kMaxOrder - 1) / 2;

struct Node {
  SmallGraph g;
  int last = -1;
  int edges = 0;
};

bool small_connected(const SmallGraph& g) {
  if (g.n <= 1) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= g.rows[__builtin_ctz(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << g.n) - 1;
}

bool small_bipartite(const SmallGraph& g) {
  std::uint32_t colored = 0;
  std::uint32_t side = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((colored >> s) & 1U) continue;
    colored |= 1U << s;
    std::uint32_t frontier = 1U << s;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        const int v = __builtin_ctz(f);
        const bool v_side = (side >> v) & 1U;
        const std::uint32_t nb = g.rows[v];
        const std::uint32_t same = v_side ? side : ~side;
        if ((nb & colored & same) != 0) return false;
        const std::uint32_t fresh = nb & ~colored;
        if (!v_side) side |= fresh;
        colored |= fresh;
        next |= fresh;
      }
      frontier = next;
    }
  }
  return true;
}

class Generator {
 public:
  explicit Generator(const Constraint& c) : c_(c) {
    const int n = c.order;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
    cap_ = static_cast<int>(pairs_.size());
    if (c.max_edges) cap_ = static_cast<int>(std::min<std::int64_t>(cap_, *c.max_edges));
    if (c.edge_count) cap_ = static_cast<int>(std::min<std::int64_t>(cap_, *c.edge_count));
  }

  Node root() const {
    Node node;
    node.g.n = c_.order;
    return node;
  }

  bool accept(const Node& node) const {
    if (c_.edge_count && node.edges != *c_.edge_count) return false;
    if (c_.non_bipartite && small_bipartite(node.g)) return false;
    if (c_.connected && !small_connected(node.g)) return false;
    return true;
  }

  template <class Fn>
  void for_each_child(const Node& node, Fn&& fn) const {
    if (node.edges >= cap_) return;
    for (int pos = node.last + 1; pos < static_cast<int>(pairs_.size()); ++pos) {
      const auto [i, j] = pairs_[pos];
      if (c_.max_degree && (node.g.degree(i) >= *c_.max_degree || node.g.degree(j) >= *c_.max_degree)) continue;
      Node child = node;
      child.g.add_edge(i, j);
      if (c_.book_bound && !books_ok(child.g, i, j, *c_.book_bound)) continue;
      if (!is_canonical(child.g)) continue;
      child.last = pos;
      child.edges = node.edges + 1;
      fn(child);
    }
  }

  template <class Visit>
  void dfs(const Node& node, Visit& visit) const {
    if (accept(node)) visit(node.g);
    for_each_child(node, [&](const Node& child) { dfs(child, visit); });
  }

 private:
  // Pages on the new edge {i, j} and on the edges it adds a page to.
  static bool books_ok(const SmallGraph& g, int i, int j, int r) {
    const std::uint32_t common = g.rows[i] & g.rows[j];
    if (__builtin_popcount(common) > r) return false;
    for (std::uint32_t f = common; f != 0; f &= f - 1) {
      const int k = __builtin_ctz(f);
      if (__builtin_popcount(static_cast<std::uint32_t>(g.rows[i] & g.rows[k])) > r) return false;
      if (__builtin_popcount(static_cast<std::uint32_t>(g.rows[j] & g.rows[k])) > r) return false;
    }
    return true;
  }

  Constraint c_;
  std::vector<std::pair<int, int>> pairs_;
  int cap_ = 0;
};

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits the generation tree into a serial prefix and independent subtrees.
// partials[0] receives the prefix, partials[k + 1] subtree k. The split is a
// function of the worker count only through the frontier size, and every
// class lands in exactly one partial.
template <class Partial, class OnVisit>
std::vector<Partial> run_partitioned(const Constraint& c, int workers, OnVisit on_visit) {
  const Generator gen(c);
  workers = resolve_workers(workers);
  std::vector<Node> frontier{gen.root()};
  Partial prefix{};
  if (workers > 1) {
    const std::size_t target = 32 * static_cast<std::size_t>(workers);
    while (!frontier.empty() && frontier.size() < target) {
      std::vector<Node> next;
      for (const Node& node : frontier) {
        if (gen.accept(node)) on_visit(prefix, node.g);
        gen.for_each_child(node, [&](const Node& child) { next.push_back(child); });
      }
      frontier = std::move(next);
    }
  }
  std::vector<Partial> partials(frontier.size() + 1);
  partials[0] = std::move(prefix);
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k = cursor++; k < frontier.size(); k = cursor++) {
      Partial& part = partials[k + 1];
      auto visit = [&](const SmallGraph& g) { on_visit(part, g); };
      gen.dfs(frontier[k], visit);
    }
  };
  if (workers <= 1 || frontier.size() <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    const int count = std::min<int>(workers, static_cast<int>(frontier.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(work);
  }
  return partials;
}

// Entries within tie_tol of the best rho seen so far.
template <class Payload>
struct TopSet {
  double best = 0.0;
  bool any = false;
  std::vector<std::pair<double, Payload>> entries;

  void offer(double rho, Payload payload, double tie_tol) {
    if (!any || rho > best) {
      best = rho;
      any = true;
      std::erase_if(entries, [&](const auto& e) { return e.first < best - tie_tol; });
    }
    if (rho >= best - tie_tol) entries.emplace_back(rho, std::move(payload));
  }

  void merge(TopSet&& other, double tie_tol) {
    for (auto& [rho, payload] : other.entries) offer(rho, std::move(payload), tie_tol);
  }
};

struct ExtremalPartial {
  std::int64_t examined = 0;
  TopSet<SmallGraph> top;
};

}  // namespace

void validate(const Constraint& c) {
  if (c.order < 1 || c.order > Graph::kMaxOrder) {
    throw InvalidParameter("constraint order must lie in [1, 512], got " + std::to_string(c.order));
  }
  if (c.book_bound && *c.book_bound < 0) throw InvalidParameter("book bound r must be >= 0");
  if (c.edge_count && *c.edge_count < 0) throw InvalidParameter("edge count must be >= 0");
  if (c.max_edges && *c.max_edges < 0) throw InvalidParameter("edge cap must be >= 0");
  if (c.max_degree && *c.max_degree < 0) throw InvalidParameter("degree cap must be >= 0");
}

bool satisfies(const Graph& g, const Constraint& c) {
  if (g.order() != c.order) return false;
  if (c.edge_count && g.edge_count() != *c.edge_count) return false;
  if (c.max_edges && g.edge_count() > *c.max_edges) return false;
  if (c.max_degree && g.max_degree() > *c.max_degree) return false;
  if (c.book_bound && !is_book_free(g, *c.book_bound)) return false;
  if (c.non_bipartite && is_bipartite(g)) return false;
  if (c.connected && !is_connected(g)) return false;
  return true;
}

std::string_view mode_name(SearchMode m) {
  return m == SearchMode::Exhaustive ? "exhaustive" : "local_search";
}

std::string_view conjecture_status_name(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Supported: return "SUPPORTED";
    case ConjectureStatus::Counterexample: return "COUNTEREXAMPLE";
    case ConjectureStatus::Inconclusive: return "INCONCLUSIVE";
    case ConjectureStatus::Vacuous: return "VACUOUS";
  }
  return "VACUOUS";
}

namespace detail {

std::int64_t orderly_enumerate(const Constraint& c, const GraphVisitor& visit, const EnumOptions& options) {
  validate(c);
  if (c.order > SmallGraph::kMaxOrder) {
    throw CapacityError("orderly generation supports at most 16 vertices");
  }
  std::mutex guard;
  const bool lock = options.serialized && resolve_workers(options.workers) > 1;
  auto partials = run_partitioned<std::int64_t>(c, options.workers, [&](std::int64_t& count, const SmallGraph& g) {
    ++count;
    if (!visit) return;
    const Graph graph = to_graph(g);
    if (lock) {
      std::scoped_lock hold(guard);
      visit(graph);
    } else {
      visit(graph);
    }
  });
  std::int64_t total = 0;
  for (auto v : partials) total += v;
  return total;
}

}  // namespace detail

std::int64_t enumerate(const Constraint& c, const GraphVisitor& visit, const EnumOptions& options) {
  validate(c);
  if (c.order > kMaxEnumerationOrder) {
    throw CapacityError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) + ", got n = " +
                        std::to_string(c.order) + "; use local_search for larger orders");
  }
  return detail::orderly_enumerate(c, visit, options);
}

ExtremalRecord extremal_exhaustive(const Constraint& c, double tie_tol, const EnumOptions& options) {
  validate(c);
  if (c.order > kMaxEnumerationOrder) {
    throw CapacityError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) + ", got n = " +
                        std::to_string(c.order) + "; use local_search for larger orders");
  }
  if (!(tie_tol > 0.0)) throw InvalidParameter("tie tolerance must be positive");
  auto partials = run_partitioned<ExtremalPartial>(c, options.workers, [&](ExtremalPartial& part, const SmallGraph& g) {
    ++part.examined;
    part.top.offer(perron(to_graph(g)).rho, g, tie_tol);
  });

  ExtremalRecord rec;
  rec.mode = SearchMode::Exhaustive;
  rec.constraint = c;
  rec.tie_tol = tie_tol;
  TopSet<SmallGraph> top;
  for (auto& part : partials) {
    rec.examined += part.examined;
    top.merge(std::move(part.top), tie_tol);
  }
  if (top.any) {
    rec.best_rho = top.best;
    std::vector<std::pair<std::string, double>> found;
    for (const auto& [rho, g] : top.entries) found.emplace_back(emit_graph6(to_graph(g)), rho);
    std::sort(found.begin(), found.end());
    for (auto& [g6, rho] : found) {
      rec.maximizers.push_back(std::move(g6));
      rec.maximizer_rho.push_back(rho);
    }
  }
  return rec;
}

namespace {

struct ComponentCandidate {
  Graph h;
  bool non_bipartite = false;
};

// H plus filler components bringing the total to m edges with the
// non-bipartite requirement met: an odd cycle (triangle when r >= 1, C5
// when r = 0) if H is bipartite, then disjoint edges.
Graph assemble_candidate(const Graph& h, bool h_non_bipartite, int m, int r) {
  std::vector<std::pair<int, int>> edges = h.edges();
  int order = h.order();
  int remaining = m - static_cast<int>(h.edge_count());
  if (!h_non_bipartite) {
    const int len = r >= 1 ? 3 : 5;
    for (int k = 0; k < len; ++k) edges.emplace_back(order + k, order + (k + 1) % len);
    order += len;
    remaining -= len;
  }
  for (; remaining > 0; --remaining) {
    edges.emplace_back(order, order + 1);
    order += 2;
  }
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

SplusScan splus_scan(int m, int r, const EnumOptions& options) {
  if (r < 0) throw InvalidParameter("book bound r must be >= 0");
  if (m > SmallGraph::kMaxOrder - 1) {
    throw CapacityError("conjecture scan supports m <= 15, got m = " + std::to_string(m));
  }
  SplusScan scan;
  scan.m = m;
  scan.r = r;
  scan.record.mode = SearchMode::Exhaustive;
  scan.record.constraint.order = std::max(1, 2 * m);
  scan.record.constraint.non_bipartite = true;
  scan.record.constraint.book_bound = r;
  scan.record.constraint.edge_count = m;
  if (m < 3) {
    scan.status = ConjectureStatus::Vacuous;
    return scan;
  }
  const PerronCertificate splus = perron(make_splus(m));
  scan.splus_rho = splus.rho;
  scan.splus_error = splus.error_bound();

  const int filler_min = r >= 1 ? 3 : 5;
  Constraint c;
  c.order = m + 1;
  c.book_bound = r;
  c.max_edges = m;

  struct Partial {
    std::int64_t connected = 0;
    std::int64_t component = 0;
    TopSet<ComponentCandidate> top;
  };
  const double tie_tol = scan.record.tie_tol;
  auto partials = run_partitioned<Partial>(c, options.workers, [&](Partial& part, const SmallGraph& sg) {
    const Graph h = without_isolated(to_graph(sg));
    const std::int64_t mh = h.edge_count();
    if (mh == 0 || !is_connected(h)) return;
    const bool non_bip = !is_bipartite(h);
    if (mh == m) {
      if (!non_bip) return;
      ++part.connected;
    } else if (non_bip || m - mh >= filler_min) {
      ++part.component;
    } else {
      return;
    }
    part.top.offer(perron(h).rho, ComponentCandidate{h, non_bip}, tie_tol);
  });

  TopSet<ComponentCandidate> top;
  for (auto& part : partials) {
    scan.connected_candidates += part.connected;
    scan.component_candidates += part.component;
    top.merge(std::move(part.top), tie_tol);
  }
  scan.record.examined = scan.connected_candidates + scan.component_candidates;
  if (!top.any) {
    scan.status = ConjectureStatus::Vacuous;
    return scan;
  }
  scan.record.best_rho = top.best;

  const std::string splus_canonical = canonical_graph6(make_splus(m));
  bool exceeds = false;
  bool unresolved = false;
  std::vector<std::pair<std::string, double>> found;
  for (const auto& [rho, cand] : top.entries) {
    std::string g6;
    if (cand.h.edge_count() == m) {
      g6 = canonical_graph6(cand.h);
    } else {
      const Graph g = assemble_candidate(canonical_form(cand.h), cand.non_bipartite, m, r);
      g6 = g.order() <= SmallGraph::kMaxOrder ? canonical_graph6(g) : emit_graph6(g);
    }
    if (g6 != splus_canonical) {
      const PerronCertificate pc = perron(parse_graph6(g6));
      const Strict cmp = strictly_greater(pc.rho, pc.error_bound(), scan.splus_rho, scan.splus_error);
      if (cmp == Strict::Holds) exceeds = true;
      if (cmp == Strict::Inconclusive) unresolved = true;
    }
    found.emplace_back(std::move(g6), rho);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              found.end());
  for (auto& [g6, rho] : found) {
    scan.record.maximizers.push_back(std::move(g6));
    scan.record.maximizer_rho.push_back(rho);
  }
  if (exceeds) {
    scan.status = ConjectureStatus::Counterexample;
  } else if (unresolved) {
    scan.status = ConjectureStatus::Inconclusive;
  } else {
    scan.status = ConjectureStatus::Supported;
  }
  return scan;
}

OnsetScan book_extremal_onset(int r, int n_max, const EnumOptions& options) {
  if (r < 1) throw InvalidParameter("onset scan needs r >= 1");
  if (n_max < 2 * r + 1) throw InvalidParameter("onset scan needs n_max >= 2r + 1");
  if (n_max > 10) throw CapacityError("onset scan is exhaustive and limited to n <= 10");
  OnsetScan scan;
  scan.r = r;
  scan.n_max = n_max;
  for (int n = 2 * r + 1; n <= n_max; ++n) {
    Constraint c;
    c.order = n;
    c.book_bound = r;
    c.non_bipartite = true;
    const ExtremalRecord rec = extremal_exhaustive(c, 1e-9, options);
    const Graph ref = make_book_extremal(n, r);
    OnsetRow row;
    row.n = n;
    row.best_rho = rec.best_rho;
    row.reference_rho = perron(ref).rho;
    row.maximizers = rec.maximizers;
    row.reference_unique = rec.maximizers.size() == 1 && rec.maximizers.front() == canonical_graph6(ref);
    scan.rows.push_back(std::move(row));
  }
  for (auto it = scan.rows.rbegin(); it != scan.rows.rend() && it->reference_unique; ++it) scan.onset = it->n;
  return scan;
}

}  // namespace bookfree
