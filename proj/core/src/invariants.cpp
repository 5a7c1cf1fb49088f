#include "bookfree/invariants.hpp"

#include <algorithm>
#include <string>

#include "bookfree/errors.hpp"

namespace bookfree {

std::optional<BookWitness> largest_book(const Graph& g) {
  std::optional<BookWitness> best;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const int pages = g.common_neighbors(u, v);
      if (!best || pages > best->pages) best = BookWitness{u, v, pages};
    }
  }
  return best;
}

int booksize(const Graph& g) {
  auto w = largest_book(g);
  return w ? w->pages : 0;
}

bool is_book_free(const Graph& g, int r) {
  if (r < 0) throw InvalidParameter("book bound r must be nonnegative");
  return booksize(g) <= r;
}

std::int64_t chvatal_hanson(const CHQuery& q) {
  if (q.n < 1 || q.nu < 1 || q.delta < 1) {
    throw InvalidParameter("Chvatal-Hanson query needs positive n, nu and delta");
  }
  const std::int64_t n = q.n;
  const std::int64_t nu = q.nu;
  // A degree cap of n or more does not constrain a graph on n vertices.
  const std::int64_t d = std::min(q.delta, n - 1);
  if (d == 0) return 0;
  if (n <= 2 * nu) return n * d / 2;
  if (d <= 2 * nu) {
    const std::int64_t k = nu / ((d + 1) / 2);
    if (n <= 2 * nu + k) {
      if (d % 2 == 1) return std::min(n * d / 2, nu * d + ((d - 1) / 2) * ((2 * (n - nu)) / (d + 3)));
      return n * d / 2;
    }
    return nu * d + k * (d / 2);
  }
  if (n <= nu + d) return std::max((2 * nu + 1) * nu, nu * (n + d - nu) / 2);
  return nu * d;
}

std::int64_t ch_linear_bound(std::int64_t nu, std::int64_t delta) {
  if (nu < 1 || delta < 1) throw InvalidParameter("linear bound needs positive nu and delta");
  return nu * (delta + 1);
}

StarPartition star_partition(const Graph& g, const PerronCertificate& perron) {
  const int n = g.order();
  if (!is_connected(g) || n == 0) throw DomainError("star partition needs a connected graph");
  if (static_cast<int>(perron.x.size()) != n) throw DomainError("Perron certificate does not belong to this graph");

  const double top = *std::max_element(perron.x.begin(), perron.x.end());
  int hub = 0;
  while (perron.x[hub] < top - 1e-9) ++hub;

  StarPartition sp;
  sp.hub = hub;
  sp.a = VertexSet(n);
  sp.b = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (v == hub) continue;
    if (g.has_edge(hub, v)) {
      sp.a.insert(v);
    } else {
      sp.b.insert(v);
    }
  }
  const std::int64_t size_a = sp.a.size();
  const std::int64_t size_b = sp.b.size();
  sp.e_a = g.edges_within(sp.a);
  sp.e_b = g.edges_within(sp.b);
  sp.e_ab = g.edges_between(sp.a, sp.b);
  sp.non_ab = size_a * size_b - sp.e_ab;
  sp.theta_twice = 2 * size_a - n;
  sp.nu_a = matching_number(g.induced(sp.a));
  sp.nu_b = matching_number(g.induced(sp.b));
  return sp;
}

double residual_index(const Graph& g, const StarPartition& sp, const PerronCertificate& perron, int w) {
  if (!sp.b.contains(w)) throw DomainError("vertex " + std::to_string(w) + " is not in B");
  const double top = *std::max_element(perron.x.begin(), perron.x.end());
  const double gap = (perron.x[sp.hub] - perron.x[w]) / top;
  return g.degree_in(w, sp.a) * std::max(0.0, gap);
}

}  // namespace bookfree
