#include "bookfree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <string>

#include "bookfree/canonical.hpp"
#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree/spectral.hpp"
#include "rng.hpp"

namespace bookfree {

namespace {

constexpr double kTieTol = 1e-9;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Verdict make_verdict(std::string claim, Status status) {
  Verdict v;
  v.claim = std::move(claim);
  v.status = status;
  return v;
}

// Best rho over the constrained classes, whether `target` (canonical graph6)
// is the unique maximiser, and the best rho among all other classes.
struct UniquenessRun {
  std::int64_t examined = 0;
  double best = 0.0;
  bool any = false;
  double runner_up = 0.0;
  bool any_other = false;
  std::string best_other;
  std::vector<std::string> maximizers;
};

UniquenessRun run_uniqueness(const Constraint& c, const std::string& target, double target_rho,
                             const EnumOptions& options) {
  UniquenessRun run;
  std::vector<std::pair<double, std::string>> near;
  // Classes far below target_rho never need a canonical label.
  const double watch = target_rho - 1e-6;
  const std::int64_t count = enumerate(
      c,
      [&](const Graph& g) {
        const double rho = perron(g).rho;
        std::string g6;
        if (rho >= watch) g6 = canonical_graph6(g);
        // enumerate serialises visitor calls, so plain updates are safe.
        if (!run.any || rho > run.best) run.best = rho;
        run.any = true;
        if (g6 != target && (!run.any_other || rho > run.runner_up)) {
          run.runner_up = rho;
          run.any_other = true;
          run.best_other = g6.empty() ? canonical_graph6(g) : g6;
        }
        if (!g6.empty()) near.emplace_back(rho, std::move(g6));
      },
      EnumOptions{options.workers, true});
  run.examined = count;
  for (const auto& [rho, g6] : near) {
    if (rho >= run.best - kTieTol) run.maximizers.push_back(g6);
  }
  std::sort(run.maximizers.begin(), run.maximizers.end());
  return run;
}

Verdict uniqueness_verdict(std::string claim, const Constraint& c, const Graph& target_graph,
                           const EnumOptions& options) {
  const std::string target = canonical_graph6(target_graph);
  const PerronCertificate tc = perron(target_graph);
  const UniquenessRun run = run_uniqueness(c, target, tc.rho, options);
  Verdict v = make_verdict(std::move(claim), Status::Pass);
  v.semantics = "exhaustive over isomorphism classes";
  std::ostringstream notes;
  notes << "examined " << run.examined << " classes; rho(target) = " << fmt(tc.rho) << "; best = " << fmt(run.best);
  if (run.any_other) notes << "; runner-up = " << fmt(run.runner_up);
  v.margin = run.any_other ? tc.rho - run.runner_up : tc.rho;
  const bool unique = run.maximizers.size() == 1 && run.maximizers.front() == target;
  const bool value_ok = std::abs(run.best - tc.rho) <= kTieTol;
  if (!unique || !value_ok) {
    v.status = Status::Fail;
    std::string witness = run.best_other;
    for (const auto& g6 : run.maximizers) {
      if (g6 != target) {
        witness = g6;
        break;
      }
    }
    v.witness = Witness{witness, {{"rho", perron(parse_graph6(witness)).rho}, {"rho_target", tc.rho}}};
    notes << "; maximizers:";
    for (const auto& g6 : run.maximizers) notes << ' ' << g6;
  }
  v.notes = notes.str();
  return v;
}

Graph random_connected(detail::Rng& rng, int n) {
  Graph g(n);
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  for (int k = 1; k < n; ++k) g.add_edge(perm[k], perm[rng.below(k)]);
  const double p = 0.1 + 0.5 * rng.unit();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!g.has_edge(i, j) && rng.unit() < p) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::OutOfHypothesis: return "OUT_OF_HYPOTHESIS";
  }
  return "OUT_OF_HYPOTHESIS";
}

Verdict check_turan_maximality(int n, int r, const EnumOptions& options) {
  if (r < 0) throw InvalidParameter("book bound r must be >= 0");
  if (n < 1) throw InvalidParameter("order must be >= 1");
  const std::string claim = "turan-maximality";
  if (2 * static_cast<std::int64_t>(n) < 13 * static_cast<std::int64_t>(r) || n < 2) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.notes = "needs n >= 13r/2 and n >= 2 (n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")";
    return v;
  }
  Constraint c;
  c.order = n;
  c.book_bound = r;
  return uniqueness_verdict(claim, c, make_turan(n, 2), options);
}

Verdict check_sk_maximality(int n, const EnumOptions& options) {
  const std::string claim = "sk-maximality";
  if (n < 5) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.notes = "every triangle-free graph on fewer than 5 vertices is bipartite";
    return v;
  }
  Constraint c;
  c.order = n;
  c.book_bound = 0;
  c.non_bipartite = true;
  return uniqueness_verdict(claim, c, make_sk(n), options);
}

Verdict check_book_extremal(int n, int r, const SearchBudget& budget) {
  if (r < 1) throw InvalidParameter("book-extremal check needs r >= 1");
  const std::string claim = "book-extremal";
  if (n < structural_threshold(r)) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.notes = "needs n >= 8(r^2+r+4) = " + std::to_string(structural_threshold(r)) +
              "; use exhaustive search for small orders";
    return v;
  }
  const Graph candidate = make_book_extremal(n, r);
  const std::string g6 = emit_graph6(candidate);
  std::ostringstream budget_text;
  budget_text << "budget: restarts=" << budget.restarts << " steps=" << budget.steps << " seed=" << budget.seed;
  Verdict v = make_verdict(claim, Status::Pass);
  v.semantics = "no refutation within budget";

  // (a) admissibility, exact.
  const bool non_bip = !is_bipartite(candidate);
  const int bk = booksize(candidate);
  if (!non_bip || bk > r) {
    v.status = Status::Fail;
    v.witness = Witness{g6, {{"bipartite", non_bip ? 0.0 : 1.0}, {"booksize", static_cast<double>(bk)}}};
    v.notes = "candidate is not admissible; " + budget_text.str();
    return v;
  }

  // (b) structural profile.
  const StructuralProfile prof = structural_profile(candidate, r);
  if (prof.count(Status::Fail) > 0) {
    v.status = Status::Fail;
    for (const auto& pv : prof.verdicts) {
      if (pv.status == Status::Fail) {
        v.witness = pv.witness;
        v.notes = "structural row " + pv.claim + " failed on the candidate; " + budget_text.str();
        break;
      }
    }
    return v;
  }

  // (c) local search.
  Constraint c;
  c.order = n;
  c.non_bipartite = true;
  c.book_bound = r;
  LocalSearchOptions opt;
  opt.restarts = budget.restarts;
  opt.steps = budget.steps;
  opt.seed = budget.seed;
  opt.workers = budget.workers;
  const ExtremalRecord rec = local_search(c, opt);
  const double ref = rec.reference_rho.value_or(perron(candidate).rho);
  v.margin = ref - rec.best_rho;
  std::ostringstream notes;
  notes << "rho(candidate) = " << fmt(ref) << "; best found = " << fmt(rec.best_rho) << "; states evaluated "
        << rec.examined << "; structural INCONCLUSIVE rows " << prof.count(Status::Inconclusive) << "; "
        << budget_text.str();
  if (rec.exceeded_reference) {
    v.status = Status::Fail;
    v.witness = Witness{rec.maximizers.front(), {{"rho", rec.best_rho}, {"rho_candidate", ref}}};
  } else if (prof.count(Status::Inconclusive) > 0) {
    v.status = Status::Inconclusive;
  }
  v.notes = notes.str();
  return v;
}

Verdict check_booksize_bound(const Graph& g) {
  const std::string claim = "booksize-bound";
  const std::int64_t m = g.edge_count();
  if (m == 0) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.notes = "graph has no edges";
    return v;
  }
  const Graph h = without_isolated(g);
  const PerronCertificate cert = perron(h);
  const double root_m = std::sqrt(static_cast<double>(m));
  const Strict below = strictly_greater(root_m, 0.0, cert.rho, cert.error_bound());
  if (below == Strict::Holds) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.margin = cert.rho - root_m;
    v.notes = "rho < sqrt(m)";
    return v;
  }
  const int bk = booksize(h);
  const double bound = std::pow(static_cast<double>(m), 0.25) / 12.0;
  Verdict v = make_verdict(claim, Status::Pass);
  v.margin = static_cast<double>(bk) - bound;
  if (is_complete_bipartite(h)) {
    v.margin.reset();
    v.notes = "complete bipartite exception";
    return v;
  }
  // bk > m^{1/4} / 12  <=>  (12 bk)^4 > m, exactly.
  const std::int64_t t = 12 * static_cast<std::int64_t>(bk);
  const bool holds = bk > 0 && t * t * t * t > m;
  if (!holds) {
    v.status = below == Strict::Inconclusive ? Status::Inconclusive : Status::Fail;
    v.notes = below == Strict::Inconclusive ? "rho is within certification error of sqrt(m)" : "";
    if (v.status == Status::Fail) {
      v.witness = Witness{emit_graph6(g), {{"booksize", static_cast<double>(bk)}, {"m", static_cast<double>(m)},
                                           {"rho", cert.rho}}};
    }
  }
  return v;
}

Verdict booksize_bound_sweep(int n_max, const EnumOptions& options) {
  if (n_max < 1) throw InvalidParameter("sweep needs n_max >= 1");
  Verdict v = make_verdict("booksize-bound", Status::Pass);
  v.semantics = "exhaustive over isomorphism classes";
  std::int64_t classes = 0;
  std::int64_t applicable = 0;
  std::int64_t inconclusive = 0;
  std::int64_t failures = 0;
  std::optional<double> margin;
  for (int n = 1; n <= n_max; ++n) {
    Constraint c;
    c.order = n;
    enumerate(
        c,
        [&](const Graph& g) {
          ++classes;
          const Verdict one = check_booksize_bound(g);
          if (one.status == Status::OutOfHypothesis) return;
          ++applicable;
          if (one.margin && (!margin || *one.margin < *margin)) margin = one.margin;
          if (one.status == Status::Inconclusive) ++inconclusive;
          if (one.status == Status::Fail) {
            if (failures++ == 0) v.witness = one.witness;
          }
        },
        EnumOptions{options.workers, true});
  }
  if (failures > 0) {
    v.status = Status::Fail;
  } else if (inconclusive > 0) {
    v.status = Status::Inconclusive;
  }
  v.margin = margin;
  std::ostringstream notes;
  notes << "classes " << classes << ", with rho >= sqrt(m) " << applicable << ", inconclusive " << inconclusive
        << ", failures " << failures;
  v.notes = notes.str();
  return v;
}

Verdict check_lower_bound_verdict(int n, int r) {
  const std::string claim = "pendant-lower-bounds";
  if (r < 1 || n < structural_threshold(r)) {
    Verdict v = make_verdict(claim, Status::OutOfHypothesis);
    v.notes = "needs r >= 1 and n >= 8(r^2+r+4)";
    return v;
  }
  const LowerBoundReport rep = check_lower_bounds(n, r);
  Verdict v = make_verdict(claim, Status::Pass);
  v.margin = std::min({rep.margin_half, rep.margin_chain, rep.margin_square});
  std::ostringstream notes;
  notes << "rho(quintic) = " << fmt(rep.quintic.root) << "; rho(power) = " << fmt(rep.power.rho)
        << "; margins half/chain/square = " << fmt(rep.margin_half) << " / " << fmt(rep.margin_chain) << " / "
        << fmt(rep.margin_square) << "; exact sign at half bound " << (rep.exact_sign_negative ? "negative" : "nonnegative");
  v.notes = notes.str();
  if (rep.holds()) return v;
  const bool violated = rep.rho_vs_half == Strict::Violated || !rep.half_vs_degree ||
                        rep.square_vs_floor == Strict::Violated;
  v.status = violated ? Status::Fail : Status::Inconclusive;
  if (violated) {
    v.witness = Witness{emit_graph6(make_book_extremal(n, r)),
                        {{"rho", rep.quintic.root}, {"half_bound", rep.half_bound},
                         {"degree_bound", static_cast<double>(rep.degree_bound)},
                         {"square_bound", static_cast<double>(rep.square_bound)}}};
  }
  return v;
}

Verdict check_splus(int m, int r, const EnumOptions& options) {
  const SplusScan scan = splus_scan(m, r, options);
  Verdict v = make_verdict("splus-maximality", Status::Pass);
  v.semantics = "exhaustive over graphs with m edges";
  std::ostringstream notes;
  notes << conjecture_status_name(scan.status) << "; rho(S+) = " << fmt(scan.splus_rho) << "; best = " << fmt(scan.record.best_rho)
        << "; candidates " << scan.record.examined;
  if (!scan.record.maximizers.empty()) notes << "; maximizer " << scan.record.maximizers.front();
  switch (scan.status) {
    case ConjectureStatus::Supported: break;
    case ConjectureStatus::Vacuous: v.status = Status::OutOfHypothesis; break;
    case ConjectureStatus::Inconclusive: v.status = Status::Inconclusive; break;
    case ConjectureStatus::Counterexample:
      v.status = Status::Fail;
      v.witness = Witness{scan.record.maximizers.front(), {{"rho", scan.record.best_rho}, {"rho_splus", scan.splus_rho}}};
      break;
  }
  if (scan.status != ConjectureStatus::Vacuous) v.margin = scan.splus_rho - scan.record.best_rho;
  v.notes = notes.str();
  return v;
}

RotationReport rotation_property_suite(int trials, int n_max, std::uint64_t seed) {
  if (trials < 1) throw InvalidParameter("rotation suite needs trials >= 1");
  if (n_max < 3 || n_max > 30) throw InvalidParameter("rotation suite needs 3 <= n_max <= 30");
  RotationReport rep;
  detail::Rng rng(detail::splitmix64(seed));
  bool first = true;
  while (rep.trials < trials) {
    const int n = 3 + rng.below(n_max - 2);
    const Graph g = random_connected(rng, n);
    const PerronCertificate cert = perron(g);
    const int vi = rng.below(n);
    const int vj = rng.below(n);
    if (vi == vj) continue;
    std::vector<int> pool;
    for (int v : g.neighbors(vj)) {
      if (v != vi && !g.has_edge(vi, v)) pool.push_back(v);
    }
    if (pool.empty()) continue;
    std::vector<int> moved;
    for (int v : pool) {
      if (rng.unit() < 0.5) moved.push_back(v);
    }
    if (moved.empty()) moved.push_back(pool[rng.below(static_cast<int>(pool.size()))]);
    const Graph rotated = rotate(g, vi, vj, moved);
    const PerronCertificate after = perron(rotated);
    const Strict cmp = strictly_greater(after.rho, after.error_bound(), cert.rho, cert.error_bound());
    if (cert.x[vi] < cert.x[vj]) {
      ++rep.inverted;
      if (cmp == Strict::Holds) ++rep.inverted_increase;
      continue;
    }
    ++rep.trials;
    const double inc = after.rho - cert.rho;
    if (first || inc < rep.min_increase) rep.min_increase = inc;
    first = false;
    if (cmp == Strict::Holds) {
      ++rep.holds;
    } else if (cmp == Strict::Inconclusive) {
      ++rep.inconclusive;
    } else {
      ++rep.violated;
      if (!rep.verdict.witness) {
        rep.verdict.witness = Witness{emit_graph6(g), {{"vi", vi}, {"vj", vj}, {"rho", cert.rho}, {"rho_rotated", after.rho}}};
        for (std::size_t k = 0; k < moved.size(); ++k) rep.verdict.witness->data.emplace_back("S" + std::to_string(k), moved[k]);
      }
    }
  }
  rep.verdict.claim = "rotation-increase";
  rep.verdict.status = rep.violated == 0 ? Status::Pass : Status::Fail;
  rep.verdict.margin = rep.min_increase;
  std::ostringstream notes;
  notes << "trials " << rep.trials << ", certified " << rep.holds << ", inconclusive " << rep.inconclusive
        << ", violated " << rep.violated << "; inverted draws logged " << rep.inverted << " (increase in "
        << rep.inverted_increase << ")";
  rep.verdict.notes = notes.str();
  return rep;
}

}  // namespace bookfree
