#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bookfree/graph.hpp"

namespace bookfree {

/// Admissibility conditions on graphs of a fixed order.
struct Constraint {
  int order = 1;
  bool non_bipartite = false;
  bool connected = false;
  /// Require B_{r+1}-freeness (bk <= r).
  std::optional<int> book_bound;
  /// Exact edge count.
  std::optional<std::int64_t> edge_count;
  /// Edge and degree caps; both are closed under edge deletion and prune
  /// the enumeration tree.
  std::optional<std::int64_t> max_edges;
  std::optional<int> max_degree;
};

/// Validates field ranges; throws InvalidParameter.
void validate(const Constraint& c);

/// Independent predicate check of g against c (order included).
bool satisfies(const Graph& g, const Constraint& c);

enum class SearchMode { Exhaustive, LocalSearch };
std::string_view mode_name(SearchMode m);

struct ExtremalRecord {
  SearchMode mode = SearchMode::Exhaustive;
  Constraint constraint;
  /// Undefined (0) while examined == 0.
  double best_rho = 0.0;
  double tie_tol = 1e-9;
  /// graph6 strings of every maximiser within tie_tol of best_rho, sorted.
  /// Canonical forms for n <= 16; as-found labellings otherwise.
  std::vector<std::string> maximizers;
  std::vector<double> maximizer_rho;
  /// Isomorphism classes (exhaustive) or evaluated states (local search).
  std::int64_t examined = 0;
  std::optional<std::uint64_t> seed;
  /// Local search only: rho of K^{r,r}_{⌊(n-1)/2⌋,⌈(n-1)/2⌉} when that
  /// graph is admissible for the constraint, and whether any state beat it.
  std::optional<double> reference_rho;
  bool exceeded_reference = false;
  std::int64_t restarts = 0;
  std::int64_t steps = 0;
  std::int64_t accepted_moves = 0;
};

struct EnumOptions {
  /// Worker threads; 0 uses the hardware concurrency.
  int workers = 1;
  /// With workers > 1, guard visitor calls with a mutex. Delivery order is
  /// unspecified for workers > 1 either way.
  bool serialized = true;
};

using GraphVisitor = std::function<void(const Graph&)>;

inline constexpr int kMaxEnumerationOrder = 10;

/// Calls `visit` once per isomorphism class of graphs on c.order vertices
/// satisfying c; returns the number of classes. Throws CapacityError for
/// c.order > 10.
std::int64_t enumerate(const Constraint& c, const GraphVisitor& visit, const EnumOptions& options = {});

/// Exhaustive maximisation of rho over the classes delivered by enumerate.
/// The result does not depend on the worker count.
ExtremalRecord extremal_exhaustive(const Constraint& c, double tie_tol = 1e-9, const EnumOptions& options = {});

namespace detail {

/// Orderly generation for up to 16 vertices, without the public cap.
std::int64_t orderly_enumerate(const Constraint& c, const GraphVisitor& visit, const EnumOptions& options);

}  // namespace detail

struct LocalSearchOptions {
  int restarts = 50;
  std::int64_t steps = 10000;
  std::uint64_t seed = 1;
  /// Worker threads over restarts; results are independent of this value.
  int workers = 1;
  double tie_tol = 1e-9;
  /// Starting state for restart 0 (must satisfy the constraint).
  std::optional<Graph> start;
};

/// Strict hill climbing over single-edge add/remove/swap moves that keep
/// the constraint. Throws DomainError when no admissible start is found.
ExtremalRecord local_search(const Constraint& c, const LocalSearchOptions& options);

enum class ConjectureStatus { Supported, Counterexample, Inconclusive, Vacuous };
std::string_view conjecture_status_name(ConjectureStatus s);

/// Scan of all non-bipartite B_{r+1}-free graphs with exactly m edges and no
/// isolated vertices against rho(S+_m).
struct SplusScan {
  int m = 0;
  int r = 0;
  ExtremalRecord record;
  double splus_rho = 0.0;
  double splus_error = 0.0;
  ConjectureStatus status = ConjectureStatus::Vacuous;
  /// Candidates examined that are themselves connected with m edges.
  std::int64_t connected_candidates = 0;
  /// Connected components H with fewer than m edges that extend to a
  /// candidate whose largest-rho component is H.
  std::int64_t component_candidates = 0;
};

/// Requires 0 <= r and m <= 15.
SplusScan splus_scan(int m, int r, const EnumOptions& options = {});

/// Exhaustive comparison of K^{r,r}_{⌊(n-1)/2⌋,⌈(n-1)/2⌉} with the best
/// non-bipartite B_{r+1}-free graph on n vertices.
struct OnsetRow {
  int n = 0;
  double best_rho = 0.0;
  double reference_rho = 0.0;
  std::vector<std::string> maximizers;
  /// The reference is the only maximizer up to isomorphism.
  bool reference_unique = false;
};

struct OnsetScan {
  int r = 0;
  int n_max = 0;
  std::vector<OnsetRow> rows;
  /// Smallest n such that the reference is the unique maximizer for every
  /// order from n through n_max. Says nothing about orders above n_max.
  std::optional<int> onset;
};

/// Rows for n = 2r+1 .. n_max. Requires r >= 1 and n_max <= 10.
OnsetScan book_extremal_onset(int r, int n_max = 10, const EnumOptions& options = {});

}  // namespace bookfree
