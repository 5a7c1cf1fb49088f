#pragma once

#include <cstdint>
#include <optional>

#include "bookfree/graph.hpp"
#include "bookfree/spectral.hpp"

namespace bookfree {

/// bk(G): the largest number of triangles sharing one edge.
int booksize(const Graph& g);

struct BookWitness {
  int u = -1;
  int v = -1;
  int pages = 0;
};

/// The spine edge realising bk(G) (lowest (u, v) on ties); nullopt when the
/// graph has no edges.
std::optional<BookWitness> largest_book(const Graph& g);

/// G is B_{r+1}-free iff bk(G) <= r. r = 0 means triangle-free.
bool is_book_free(const Graph& g, int r);

/// Maximum matching size via Edmonds' blossom algorithm.
int matching_number(const Graph& g);

struct CHQuery {
  std::int64_t n = 0;
  std::int64_t nu = 0;
  std::int64_t delta = 0;
};

/// Maximum edge count of a graph on n vertices with matching number at most
/// nu and maximum degree at most delta (Chvátal–Hanson).
std::int64_t chvatal_hanson(const CHQuery& q);

/// nu (delta + 1), an upper bound on chvatal_hanson for every n.
std::int64_t ch_linear_bound(std::int64_t nu, std::int64_t delta);

/// Decomposition around the Perron hub u*: A = N(u*), B = the rest.
struct StarPartition {
  int hub = -1;
  VertexSet a;
  VertexSet b;
  std::int64_t e_a = 0;
  std::int64_t e_b = 0;
  std::int64_t e_ab = 0;
  /// |A||B| - e(A, B).
  std::int64_t non_ab = 0;
  /// |A| - n/2, held doubled so it stays an integer.
  std::int64_t theta_twice = 0;
  int nu_a = 0;
  int nu_b = 0;

  double theta() const { return static_cast<double>(theta_twice) / 2.0; }
};

/// Requires a connected graph; u* is the lowest-index maximiser of x.
StarPartition star_partition(const Graph& g, const PerronCertificate& perron);

/// Γ_w = d_A(w) (x_{u*} - x_w) with x scaled to max entry 1. w must be in B.
double residual_index(const Graph& g, const StarPartition& sp, const PerronCertificate& perron, int w);

}  // namespace bookfree
