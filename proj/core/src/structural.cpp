#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree/spectral.hpp"
#include "bookfree/verify.hpp"

namespace bookfree {

namespace {

// Slack below which inequalities involving Perron entries are undecided.
constexpr double kVectorTol = 1e-9;

class ProfileBuilder {
 public:
  ProfileBuilder(StructuralProfile& p) : p_(p) {}

  Verdict& add(std::string_view claim, Status status, std::optional<double> margin, std::string notes = {}) {
    Verdict v;
    v.claim = std::string(claim);
    v.status = status;
    v.margin = margin;
    v.notes = std::move(notes);
    v.semantics = "necessary-condition check";
    if (status == Status::Fail) v.witness = Witness{p_.graph6, {}};
    p_.verdicts.push_back(std::move(v));
    return p_.verdicts.back();
  }

  // Integer inequality lhs <= rhs.
  Verdict& add_leq(std::string_view claim, std::int64_t lhs, std::int64_t rhs, std::string notes = {}) {
    return add(claim, lhs <= rhs ? Status::Pass : Status::Fail, static_cast<double>(rhs - lhs), std::move(notes));
  }

  void out_of_hypothesis(std::string_view claim, std::string why) { add(claim, Status::OutOfHypothesis, std::nullopt, std::move(why)); }

 private:
  StructuralProfile& p_;
};

Status slack_status(double slack, double tol) {
  if (slack > tol) return Status::Pass;
  if (slack < -tol) return Status::Fail;
  return Status::Inconclusive;
}

}  // namespace

std::int64_t StructuralProfile::count(Status s) const {
  return std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; });
}

const Verdict* StructuralProfile::find(std::string_view claim) const {
  for (const auto& v : verdicts) {
    if (v.claim == claim) return &v;
  }
  return nullptr;
}

std::int64_t structural_threshold(int r) {
  const std::int64_t rr = r;
  return 8 * (rr * rr + rr + 4);
}

StructuralProfile structural_profile(const Graph& g, int r) {
  if (r < 0) throw InvalidParameter("book bound r must be >= 0");
  if (g.order() == 0) throw InvalidParameter("structural profile needs a nonempty graph");
  StructuralProfile p;
  p.n = g.order();
  p.r = r;
  p.graph6 = emit_graph6(g);
  ProfileBuilder out(p);

  const bool connected = is_connected(g);
  const BipartitionResult bip = check_bipartite(g);
  const auto book = largest_book(g);
  const int bk = book ? book->pages : 0;
  if (!connected || bip.bipartite || bk > r) {
    std::string why;
    if (!connected) why += "graph is disconnected; ";
    if (bip.bipartite) why += "graph is bipartite; ";
    if (bk > r) why += "graph contains B_" + std::to_string(r + 1) + " (bk = " + std::to_string(bk) + "); ";
    why.resize(why.size() - 2);
    Verdict& v = out.add(claims::kStanding, Status::Fail, std::nullopt, why);
    v.witness->data = {{"connected", connected ? 1.0 : 0.0},
                       {"bipartite", bip.bipartite ? 1.0 : 0.0},
                       {"booksize", static_cast<double>(bk)},
                       {"r", static_cast<double>(r)}};
    if (book && bk > r) {
      v.witness->data.emplace_back("spine_u", book->u);
      v.witness->data.emplace_back("spine_v", book->v);
    }
    return p;
  }
  p.standing_ok = true;

  const PerronCertificate cert = perron(g);
  const StarPartition sp = star_partition(g, cert);
  const std::vector<double>& x = cert.x;
  p.rho = cert.rho;
  p.rho_error = cert.error_bound();
  p.hub = sp.hub;
  p.a_size = sp.a.size();
  p.b_size = sp.b.size();
  p.e_a = sp.e_a;
  p.e_b = sp.e_b;
  p.e_ab = sp.e_ab;
  p.non_ab = sp.non_ab;
  p.theta = sp.theta();
  p.nu_a = sp.nu_a;
  p.nu_b = sp.nu_b;

  const std::vector<std::string_view> rows = {
      claims::kHubNeighbourhood, claims::kInnerDegree,   claims::kOuterSize,     claims::kEdgeDegreeSum,
      claims::kInnerEdgeWeight,  claims::kCrossNonEdges, claims::kInnerMatching, claims::kOuterMatching,
      claims::kMatchingSplit,    claims::kResidualSlack, claims::kInnerEdgesPresent, claims::kPartBalance};
  if (r == 0) {
    for (auto claim : rows) out.out_of_hypothesis(claim, "the structural chain assumes r >= 1");
    return p;
  }

  const std::int64_t n = p.n;
  const std::int64_t a = p.a_size;
  const std::int64_t b = p.b_size;
  const bool large = n >= structural_threshold(r);
  const std::string small_note = "needs n >= 8(r^2+r+4) = " + std::to_string(structural_threshold(r));
  const std::vector<int> a_members = sp.a.members();
  const std::vector<int> b_members = sp.b.members();

  // |A| >= ceil(n/2).
  if (large) {
    Verdict& v = out.add_leq(claims::kHubNeighbourhood, (n + 1) / 2, a);
    if (v.witness) v.witness->data = {{"hub", sp.hub}, {"|A|", static_cast<double>(a)}};
  } else {
    out.out_of_hypothesis(claims::kHubNeighbourhood, small_note);
  }

  // d_A(u) <= r on A, and e(A) <= nu(G[A]) (r + 1).
  {
    int worst_vertex = -1;
    int worst = 0;
    for (int u : a_members) {
      const int d = g.degree_in(u, sp.a);
      if (worst_vertex < 0 || d > worst) {
        worst = d;
        worst_vertex = u;
      }
    }
    const std::int64_t slack_deg = r - worst;
    const std::int64_t slack_edges = static_cast<std::int64_t>(sp.nu_a) * (r + 1) - sp.e_a;
    const std::int64_t slack = std::min(slack_deg, slack_edges);
    Verdict& v = out.add(claims::kInnerDegree, slack >= 0 ? Status::Pass : Status::Fail, static_cast<double>(slack));
    if (v.witness) {
      v.witness->data = {{"vertex", worst_vertex},
                         {"d_A", worst},
                         {"e(A)", static_cast<double>(sp.e_a)},
                         {"nu(A)", sp.nu_a}};
    }
  }

  // |B| + 1 >= n/4 >= 5r + 7, in quarter units.
  if (large) {
    const std::int64_t first = 4 * (b + 1) - n;
    const std::int64_t second = n - 4 * (5 * static_cast<std::int64_t>(r) + 7);
    const std::int64_t slack = std::min(first, second);
    Verdict& v = out.add(claims::kOuterSize, slack >= 0 ? Status::Pass : Status::Fail, static_cast<double>(slack) / 4.0);
    if (v.witness) v.witness->data = {{"|B|", static_cast<double>(b)}, {"n", static_cast<double>(n)}};
  } else {
    out.out_of_hypothesis(claims::kOuterSize, small_note);
  }

  // Edge-wise degree sums: inside A towards B, inside B towards A.
  {
    std::optional<std::int64_t> slack;
    std::vector<std::pair<std::string, double>> worst;
    for (const auto& [u, v] : g.induced(sp.a).edges()) {
      const int u1 = a_members[u];
      const int u2 = a_members[v];
      const std::int64_t s = (b + r - 1) - (g.degree_in(u1, sp.b) + g.degree_in(u2, sp.b));
      if (!slack || s < *slack) {
        slack = s;
        worst = {{"u1", u1}, {"u2", u2}, {"side", 0}};
      }
    }
    for (const auto& [u, v] : g.induced(sp.b).edges()) {
      const int w1 = b_members[u];
      const int w2 = b_members[v];
      const std::int64_t s = (a + r) - (g.degree_in(w1, sp.a) + g.degree_in(w2, sp.a));
      if (!slack || s < *slack) {
        slack = s;
        worst = {{"w1", w1}, {"w2", w2}, {"side", 1}};
      }
    }
    if (!slack) {
      out.add(claims::kEdgeDegreeSum, Status::Pass, std::nullopt, "vacuous: no edges inside A or B");
    } else {
      Verdict& v = out.add(claims::kEdgeDegreeSum, *slack >= 0 ? Status::Pass : Status::Fail, static_cast<double>(*slack));
      if (v.witness) v.witness->data = worst;
    }
  }

  // x_{u1} + x_{u2} <= (|B| + r + 1) / (rho - r) x_{u*} on edges inside A.
  if (!large) {
    out.out_of_hypothesis(claims::kInnerEdgeWeight, small_note);
  } else if (strictly_greater(cert.rho, p.rho_error, r, 0.0) != Strict::Holds) {
    out.add(claims::kInnerEdgeWeight, Status::Inconclusive, std::nullopt, "side condition rho > r not certified");
  } else {
    const double coef = static_cast<double>(b + r + 1) / (cert.rho - r) * x[sp.hub];
    std::optional<double> slack;
    std::vector<std::pair<std::string, double>> worst;
    for (const auto& [u, v] : g.induced(sp.a).edges()) {
      const int u1 = a_members[u];
      const int u2 = a_members[v];
      const double s = coef - (x[u1] + x[u2]);
      if (!slack || s < *slack) {
        slack = s;
        worst = {{"u1", u1}, {"u2", u2}, {"x_u1", x[u1]}, {"x_u2", x[u2]}, {"bound", coef}};
      }
    }
    if (!slack) {
      out.add(claims::kInnerEdgeWeight, Status::Pass, std::nullopt, "vacuous: e(A) = 0");
    } else {
      Verdict& v = out.add(claims::kInnerEdgeWeight, slack_status(*slack, kVectorTol), *slack);
      if (v.witness) v.witness->data = worst;
    }
  }

  // non-edges(A, B) >= nu(G[A]) (|B| - r + 1).
  {
    Verdict& v = out.add_leq(claims::kCrossNonEdges, static_cast<std::int64_t>(sp.nu_a) * (b - r + 1), sp.non_ab);
    if (v.witness) v.witness->data = {{"non_edges", static_cast<double>(sp.non_ab)}, {"nu(A)", sp.nu_a}};
  }

  if (large) {
    Verdict& va = out.add_leq(claims::kInnerMatching, sp.nu_a, 1);
    if (va.witness) va.witness->data = {{"nu(A)", sp.nu_a}};
    Verdict& vb = out.add_leq(claims::kOuterMatching, sp.nu_b, 1);
    if (vb.witness) vb.witness->data = {{"nu(B)", sp.nu_b}};
    const std::int64_t sum = sp.nu_a + sp.nu_b;
    Verdict& vs = out.add(claims::kMatchingSplit, sum == 1 ? Status::Pass : Status::Fail, static_cast<double>(1 - sum));
    if (vs.witness) vs.witness->data = {{"nu(A)", sp.nu_a}, {"nu(B)", sp.nu_b}};
  } else {
    out.out_of_hypothesis(claims::kInnerMatching, small_note);
    out.out_of_hypothesis(claims::kOuterMatching, small_note);
    out.out_of_hypothesis(claims::kMatchingSplit, small_note);
  }

  // With e(A) = 0: sum_B non-degree_A(w) x_{u*} + sum_B Gamma_w < |A| x_{u*}.
  if (!large) {
    out.out_of_hypothesis(claims::kResidualSlack, small_note);
  } else if (sp.e_a != 0) {
    out.out_of_hypothesis(claims::kResidualSlack, "applies only when e(A) = 0");
  } else {
    double lhs = 0.0;
    for (int w : b_members) {
      lhs += static_cast<double>(a - g.degree_in(w, sp.a)) * x[sp.hub] + residual_index(g, sp, cert, w);
    }
    const double rhs = static_cast<double>(a) * x[sp.hub];
    const double tol = kVectorTol * std::max<double>(1.0, static_cast<double>(a));
    Verdict& v = out.add(claims::kResidualSlack, slack_status(rhs - lhs, tol), rhs - lhs);
    if (v.witness) v.witness->data = {{"lhs", lhs}, {"rhs", rhs}};
  }

  if (large) {
    Verdict& v = out.add(claims::kInnerEdgesPresent, sp.e_a != 0 ? Status::Pass : Status::Fail,
                         static_cast<double>(sp.e_a));
    if (v.witness) v.witness->data = {{"e(A)", 0.0}, {"hub", sp.hub}};
  } else {
    out.out_of_hypothesis(claims::kInnerEdgesPresent, small_note);
  }

  // Part balance of a recognised K^{r,r}_{s,t}.
  const auto shape = recognize_kst_pendant(g);
  if (!shape || shape->r1 != r || shape->r2 != r) {
    out.out_of_hypothesis(claims::kPartBalance, "graph is not K^{r,r}_{s,t} for this r");
  } else {
    const int big = std::max(shape->s, shape->t);
    const int small = std::min(shape->s, shape->t);
    if (big <= small + 1) {
      out.add(claims::kPartBalance, Status::Pass, static_cast<double>(small + 1 - big));
    } else {
      Verdict& v = out.add(claims::kPartBalance, Status::Fail, static_cast<double>(small + 1 - big));
      v.witness->data = {{"s", big}, {"t", small}, {"v0", shape->v0}};
      if (r <= small) {
        const BalanceReport bal = balance_compare(big, small, r);
        v.witness->data.emplace_back("rho_balanced_step", bal.after.root);
        v.witness->data.emplace_back("rho_current", bal.before.root);
        v.notes = bal.increase == Strict::Holds ? "moving one vertex to the smaller part certifiably increases rho"
                                                : "balance step increase not certified";
      }
    }
  }
  return p;
}

}  // namespace bookfree
