#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bookfree/graph.hpp"
#include "bookfree/search.hpp"

namespace bookfree {

enum class Status { Pass, Fail, Inconclusive, OutOfHypothesis };
std::string_view status_name(Status s);

struct Witness {
  std::string graph6;
  /// Named scalars describing where the claim was evaluated (vertices,
  /// degrees, slack terms).
  std::vector<std::pair<std::string, double>> data;
};

struct Verdict {
  std::string claim;
  Status status = Status::OutOfHypothesis;
  std::optional<double> margin;
  /// Present on every FAIL.
  std::optional<Witness> witness;
  std::string notes;
  /// How a PASS should be read (e.g. "no refutation within budget").
  std::string semantics;
};

/// Claim identifiers used by structural_profile, in evaluation order.
namespace claims {
inline constexpr std::string_view kStanding = "standing-hypothesis";
inline constexpr std::string_view kHubNeighbourhood = "hub-neighbourhood-size";
inline constexpr std::string_view kInnerDegree = "inner-degree";
inline constexpr std::string_view kOuterSize = "outer-size";
inline constexpr std::string_view kEdgeDegreeSum = "edge-degree-sum";
inline constexpr std::string_view kInnerEdgeWeight = "inner-edge-weight";
inline constexpr std::string_view kCrossNonEdges = "cross-non-edges";
inline constexpr std::string_view kInnerMatching = "inner-matching";
inline constexpr std::string_view kOuterMatching = "outer-matching";
inline constexpr std::string_view kMatchingSplit = "matching-split";
inline constexpr std::string_view kResidualSlack = "residual-slack";
inline constexpr std::string_view kInnerEdgesPresent = "inner-edges-present";
inline constexpr std::string_view kPartBalance = "part-balance";
}  // namespace claims

/// Necessary conditions on a rho-maximal non-bipartite B_{r+1}-free graph,
/// all evaluated on one (u*, A, B) decomposition of the supplied graph.
struct StructuralProfile {
  int n = 0;
  int r = 0;
  std::string graph6;
  bool standing_ok = false;
  double rho = 0.0;
  double rho_error = 0.0;
  int hub = -1;
  int a_size = 0;
  int b_size = 0;
  std::int64_t e_a = 0;
  std::int64_t e_b = 0;
  std::int64_t e_ab = 0;
  std::int64_t non_ab = 0;
  double theta = 0.0;
  int nu_a = 0;
  int nu_b = 0;
  std::vector<Verdict> verdicts;

  std::int64_t count(Status s) const;
  const Verdict* find(std::string_view claim) const;
};

/// Order threshold 8(r^2 + r + 4) above which the structural chain applies.
std::int64_t structural_threshold(int r);

/// Throws InvalidParameter for r < 0 or an empty graph.
StructuralProfile structural_profile(const Graph& g, int r);

/// Exhaustive check that T_{n,2} is the unique rho-maximal B_{r+1}-free
/// graph of order n (n <= 10, hypothesis 2n >= 13r).
Verdict check_turan_maximality(int n, int r, const EnumOptions& options = {});

/// Exhaustive check that make_sk(n) is the unique rho-maximal
/// non-bipartite triangle-free graph of order n (5 <= n <= 10).
Verdict check_sk_maximality(int n, const EnumOptions& options = {});

struct SearchBudget {
  int restarts = 50;
  std::int64_t steps = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Evidence that K^{r,r}_{⌊(n-1)/2⌋,⌈(n-1)/2⌉} maximises rho among
/// non-bipartite B_{r+1}-free graphs of order n >= 8(r^2+r+4): exact
/// admissibility, a FAIL-free structural profile and an unsuccessful local
/// search. PASS means no refutation was found within the budget.
Verdict check_book_extremal(int n, int r, const SearchBudget& budget = {});

/// If rho(G) >= sqrt(m), then bk(G) > m^{1/4}/12 unless G is complete
/// bipartite. Isolated vertices are ignored.
Verdict check_booksize_bound(const Graph& g);

/// check_booksize_bound over every isomorphism class on 1..n_max vertices
/// (n_max <= 10). PASS iff no class fails; the first failure is the witness.
Verdict booksize_bound_sweep(int n_max, const EnumOptions& options = {});

/// Certified check of the lower bounds on rho(K^{r,r}) for one (n, r).
Verdict check_lower_bound_verdict(int n, int r);

/// Splus scan outcome as a verdict (COUNTEREXAMPLE maps to FAIL).
Verdict check_splus(int m, int r, const EnumOptions& options = {});

struct RotationReport {
  Verdict verdict;
  std::int64_t trials = 0;
  std::int64_t holds = 0;
  std::int64_t inconclusive = 0;
  std::int64_t violated = 0;
  /// Draws with x_i < x_j: evaluated and logged, never asserted.
  std::int64_t inverted = 0;
  std::int64_t inverted_increase = 0;
  double min_increase = 0.0;

  double inconclusive_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(inconclusive) / static_cast<double>(trials);
  }
};

/// Random rotations G' = G - {vj v : v in S} + {vi v : v in S} on connected
/// graphs with x_vi >= x_vj and S nonempty; rho(G') > rho(G) must hold under
/// the certified strict comparison. Requires trials >= 1, 3 <= n_max <= 30.
RotationReport rotation_property_suite(int trials, int n_max, std::uint64_t seed);

}  // namespace bookfree
