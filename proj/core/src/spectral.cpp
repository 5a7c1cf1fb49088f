#include "bookfree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bookfree/errors.hpp"

namespace bookfree {

namespace {

using AdjList = std::vector<std::vector<int>>;

AdjList adjacency_lists(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  AdjList adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      if (local[w] >= 0) adj[i].push_back(local[w]);
    }
  }
  return adj;
}

void multiply(const AdjList& adj, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    double sum = 0.0;
    for (int w : adj[v]) sum += x[w];
    y[v] = sum;
  }
}

struct Bracket {
  double lower;
  double upper;
};

Bracket collatz_wielandt(const std::vector<double>& x, const std::vector<double>& ax) {
  Bracket b{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] <= 0.0) continue;
    const double q = ax[v] / x[v];
    b.lower = std::min(b.lower, q);
    b.upper = std::max(b.upper, q);
  }
  if (!std::isfinite(b.lower)) b.lower = 0.0;
  return b;
}

PerronCertificate perron_component(const AdjList& adj, const PerronOptions& opt, std::span<const double> start) {
  const std::size_t n = adj.size();
  PerronCertificate cert;
  std::vector<double> x(n, 1.0);
  if (start.size() == n) {
    double mx = 0.0;
    for (std::size_t v = 0; v < n; ++v) mx = std::max(mx, start[v]);
    if (mx > 0.0) {
      // Strictly positive start so every component of the Perron vector is reachable.
      for (std::size_t v = 0; v < n; ++v) x[v] = std::max(start[v] / mx, 1e-3);
    }
  }
  std::vector<double> ax(n, 0.0);
  std::size_t edge_ends = 0;
  for (const auto& nb : adj) edge_ends += nb.size();
  if (edge_ends == 0) {
    cert.rho = 0.0;
    cert.x.assign(n, 0.0);
    if (n > 0) cert.x[0] = 1.0;
    cert.converged = true;
    return cert;
  }

  const std::int64_t max_iter = opt.max_iter > 0 ? opt.max_iter : default_max_iter(static_cast<int>(n));
  double shift = 1.0;
  double rho = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  std::int64_t it = 0;
  for (;;) {
    multiply(adj, x, ax);
    double xx = 0.0;
    double xax = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      xx += x[v] * x[v];
      xax += x[v] * ax[v];
    }
    rho = xax / xx;
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual = std::max(residual, std::abs(ax[v] - rho * x[v]));
    if (residual <= opt.tol || it >= max_iter) break;
    // A shift near rho/2 damps the -rho end of the spectrum of bipartite-like
    // graphs without slowing the top of the spectrum much.
    if (it < 8) shift = std::max(1.0, 0.5 * rho);
    double mx = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      ax[v] += shift * x[v];
      mx = std::max(mx, ax[v]);
    }
    for (std::size_t v = 0; v < n; ++v) x[v] = ax[v] / mx;
    ++it;
  }
  const Bracket br = collatz_wielandt(x, ax);
  cert.rho = rho;
  cert.x = std::move(x);
  cert.residual = residual;
  cert.lower = br.lower;
  cert.upper = br.upper;
  cert.iterations = it;
  cert.converged = residual <= opt.tol;
  return cert;
}

}  // namespace

double PerronCertificate::error_bound() const {
  const double bracket = std::max(std::abs(rho - lower), std::abs(upper - rho));
  // Rounding in A x and in the quotients themselves.
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, rho);
  return std::max(bracket, residual) + rounding;
}

std::int64_t default_max_iter(int n) { return 200LL * n + 10000; }

PerronCertificate perron(const Graph& g, double tol, std::int64_t max_iter) {
  PerronOptions opt;
  opt.tol = tol;
  opt.max_iter = max_iter;
  return perron(g, opt);
}

PerronCertificate perron(const Graph& g, const PerronOptions& options) {
  const int n = g.order();
  if (n == 0) throw DomainError("spectral radius of the empty graph is undefined");
  if (!(options.tol > 0.0)) throw InvalidParameter("perron tolerance must be positive");
  if (!options.start.empty() && static_cast<int>(options.start.size()) != n) {
    throw InvalidParameter("perron start vector length does not match graph order");
  }

  auto comps = components(g);
  PerronCertificate best;
  bool have = false;
  std::vector<int> best_comp;
  for (const auto& comp : comps) {
    const AdjList adj = adjacency_lists(g, comp);
    std::vector<double> start;
    if (!options.start.empty()) {
      start.reserve(comp.size());
      for (int v : comp) start.push_back(options.start[v]);
    }
    PerronCertificate c = perron_component(adj, options, start);
    if (!have || c.rho > best.rho + c.error_bound() + best.error_bound()) {
      best = std::move(c);
      best_comp = comp;
      have = true;
    }
  }
  if (comps.size() == 1) return best;
  std::vector<double> full(n, 0.0);
  for (std::size_t i = 0; i < best_comp.size(); ++i) full[best_comp[i]] = best.x[i];
  best.x = std::move(full);
  return best;
}

Strict strictly_greater(double a, double err_a, double b, double err_b) {
  const double slack = err_a + err_b + 1e-12;
  if (a - b > slack) return Strict::Holds;
  if (b - a > slack) return Strict::Violated;
  return Strict::Inconclusive;
}

Graph rotate(const Graph& g, int vi, int vj, std::span<const int> moved) {
  const int n = g.order();
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (!in_range(vi)) throw DomainError("rotation target vertex " + std::to_string(vi) + " out of range");
  if (!in_range(vj)) throw DomainError("rotation source vertex " + std::to_string(vj) + " out of range");
  if (vi == vj) throw DomainError("rotation needs distinct vertices, got " + std::to_string(vi) + " twice");
  Graph out = g;
  for (int v : moved) {
    if (!in_range(v)) throw DomainError("rotated vertex " + std::to_string(v) + " out of range");
    if (v == vi || v == vj) throw DomainError("rotated set contains endpoint " + std::to_string(v));
    if (!g.has_edge(vj, v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not a neighbour of " + std::to_string(vj));
    }
    if (out.has_edge(vi, v)) {
      throw DomainError("vertex " + std::to_string(v) + " is already a neighbour of " + std::to_string(vi));
    }
    out.remove_edge(vj, v);
    out.add_edge(vi, v);
  }
  return out;
}

}  // namespace bookfree
