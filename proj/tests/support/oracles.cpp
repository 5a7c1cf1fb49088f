#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

__extension__ typedef unsigned __int128 UInt128;


Matrix adjacency(const bookfree::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) a[u][v] = (u != v && g.has_edge(u, v)) ? 1 : 0;
  }
  return a;
}

bookfree::Graph from_matrix(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  bookfree::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (a[u][v]) g.add_edge(u, v);
    }
  }
  return g;
}

std::string graph6(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n > 62) throw std::invalid_argument("oracle graph6 handles n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j]);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

int booksize_by_triangles(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> through(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!a[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (a[i][k] && a[j][k]) {
          ++through[i][j];
          ++through[i][k];
          ++through[j][k];
        }
      }
    }
  }
  int best = 0;
  for (const auto& row : through) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

namespace {

int matching_masks(const std::vector<unsigned>& rows, unsigned mask, std::vector<int>& memo) {
  if (mask == 0) return 0;
  if (memo[mask] >= 0) return memo[mask];
  const int v = __builtin_ctz(mask);
  const unsigned rest = mask & ~(1U << v);
  int best = matching_masks(rows, rest, memo);
  for (unsigned cand = rows[v] & rest; cand != 0; cand &= cand - 1) {
    const int u = __builtin_ctz(cand);
    best = std::max(best, 1 + matching_masks(rows, rest & ~(1U << u), memo));
  }
  return memo[mask] = best;
}

int matching_rows(const std::vector<unsigned>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> memo(std::size_t{1} << n, -1);
  return matching_masks(rows, (n == 32) ? ~0U : ((1U << n) - 1), memo);
}

}  // namespace

int matching_brute(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n > 16) throw std::invalid_argument("oracle matching handles n <= 16");
  std::vector<unsigned> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (a[u][v]) rows[u] |= 1U << v;
    }
  }
  return matching_rows(rows);
}

ChTable::ChTable(int nu, int delta)
    : max_nu(nu), max_delta(delta), raw(nu + 1, std::vector<int>(delta + 1, -1)) {}

void ChTable::add(int edges, int nu, int delta) {
  if (nu > max_nu || delta > max_delta) return;
  raw[nu][delta] = std::max(raw[nu][delta], edges);
}

int ChTable::at(int nu, int delta) const {
  int best = -1;
  for (int i = 0; i <= nu; ++i) {
    for (int j = 0; j <= delta; ++j) best = std::max(best, raw[i][j]);
  }
  return best;
}

ChTable ch_table_labelled(int n, int max_nu, int max_delta) {
  if (n > 7) throw std::invalid_argument("labelled sweep handles n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  ChTable table(max_nu, max_delta);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<unsigned> rows(n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(rows.begin(), rows.end(), 0U);
    int edges = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((bits >> k) & 1U) {
        rows[pairs[k].first] |= 1U << pairs[k].second;
        rows[pairs[k].second] |= 1U << pairs[k].first;
        ++edges;
      }
    }
    int delta = 0;
    for (unsigned r : rows) delta = std::max(delta, __builtin_popcount(r));
    if (delta > max_delta) continue;
    table.add(edges, matching_rows(rows), delta);
  }
  return table;
}

std::int64_t count_classes_burnside(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  auto index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n + j;
  };
  UInt128 sum = 0;
  std::int64_t group = 0;
  std::vector<char> seen(static_cast<std::size_t>(n) * n);
  do {
    ++group;
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (auto [i, j] : pairs) {
      if (seen[index(i, j)]) continue;
      ++cycles;
      int a = i;
      int b = j;
      while (!seen[index(a, b)]) {
        seen[index(a, b)] = 1;
        a = perm[a];
        b = perm[b];
      }
    }
    sum += static_cast<UInt128>(1) << cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::int64_t>(sum / static_cast<UInt128>(group));
}

std::uint64_t permutation_canonical(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n > 8) throw std::invalid_argument("permutation oracle handles n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(a[perm[i]][perm[j]]);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::int64_t> charpoly(const std::vector<std::vector<std::int64_t>>& m) {
  const int n = static_cast<int>(m.size());
  using Mat = std::vector<std::vector<std::int64_t>>;
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  Mat mk(n, std::vector<std::int64_t>(n, 0));
  for (int k = 1; k <= n; ++k) {
    Mat next(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (int l = 0; l < n; ++l) acc += m[i][l] * mk[l][j];
        next[i][j] = acc + (i == j ? c[n - k + 1] : 0);
      }
    }
    mk = next;
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) trace += m[i][l] * mk[l][i];
    }
    if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier division not exact");
    c[n - k] = -trace / k;
  }
  return c;
}

double largest_eigenvalue(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = adj[i][j];
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  double best = a[0][0];
  for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

bool is_odd_cycle(const Matrix& a, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3 || len % 2 == 0) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t k = 0; k < len; ++k) {
    if (!a[cycle[k]][cycle[(k + 1) % len]]) return false;
  }
  return true;
}

}  // namespace oracle
