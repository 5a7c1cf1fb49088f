#include "bookfree/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bookfree/errors.hpp"

namespace bookfree {

QuotientSystem check_equitable(const Graph& g, std::vector<std::vector<int>> blocks) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw DomainError("partition block " + std::to_string(i) + " is empty");
    for (int v : blocks[i]) {
      if (v < 0 || v >= n) throw DomainError("partition vertex " + std::to_string(v) + " out of range");
      if (owner[v] != -1) throw DomainError("vertex " + std::to_string(v) + " appears in two blocks");
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] == -1) throw DomainError("vertex " + std::to_string(v) + " is not covered by the partition");
  }

  const int k = static_cast<int>(blocks.size());
  QuotientSystem qs;
  qs.equitable = true;
  qs.counts.assign(static_cast<std::size_t>(k) * k, 0);
  qs.average.assign(static_cast<std::size_t>(k) * k, 0.0);
  std::vector<std::int64_t> into(k);
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> total(k, 0);
    for (std::size_t idx = 0; idx < blocks[i].size(); ++idx) {
      std::fill(into.begin(), into.end(), 0);
      for (int w : g.neighbors(blocks[i][idx])) ++into[owner[w]];
      for (int j = 0; j < k; ++j) {
        if (idx == 0) {
          qs.counts[static_cast<std::size_t>(i) * k + j] = into[j];
        } else if (qs.counts[static_cast<std::size_t>(i) * k + j] != into[j]) {
          qs.equitable = false;
        }
        total[j] += into[j];
      }
    }
    for (int j = 0; j < k; ++j) {
      qs.average[static_cast<std::size_t>(i) * k + j] =
          static_cast<double>(total[j]) / static_cast<double>(blocks[i].size());
    }
  }
  qs.blocks = std::move(blocks);
  return qs;
}

namespace {

bool strongly_connected(const QuotientSystem& qs) {
  const int k = qs.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < k; ++j) {
        const std::int64_t w = dir == 0 ? qs.at(i, j) : qs.at(j, i);
        if (w > 0 && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != k) return false;
  }
  return true;
}

}  // namespace

double quotient_rho(const QuotientSystem& qs) {
  if (!qs.equitable) throw DomainError("quotient_rho needs an equitable partition");
  const int k = qs.size();
  if (k == 0) throw DomainError("quotient_rho needs a nonempty partition");
  if (!strongly_connected(qs)) throw DomainError("quotient matrix is reducible");

  using Real = long double;
  std::vector<Real> x(k, 1.0L);
  std::vector<Real> y(k);
  Real lower = 0.0L;
  Real upper = std::numeric_limits<Real>::infinity();
  Real shift = 1.0L;
  for (int it = 0; it < 1000000; ++it) {
    for (int i = 0; i < k; ++i) {
      Real sum = 0.0L;
      for (int j = 0; j < k; ++j) sum += static_cast<Real>(qs.at(i, j)) * x[j];
      y[i] = sum;
    }
    // Collatz–Wielandt bracket for a positive vector.
    lower = std::numeric_limits<Real>::infinity();
    upper = 0.0L;
    for (int i = 0; i < k; ++i) {
      const Real q = y[i] / x[i];
      lower = std::min(lower, q);
      upper = std::max(upper, q);
    }
    if (upper - lower <= 4.0L * std::numeric_limits<double>::epsilon() * std::max<Real>(1.0L, upper)) break;
    if (it < 8) shift = std::max<Real>(1.0L, 0.5L * upper);
    Real mx = 0.0L;
    for (int i = 0; i < k; ++i) {
      y[i] += shift * x[i];
      mx = std::max(mx, y[i]);
    }
    for (int i = 0; i < k; ++i) x[i] = y[i] / mx;
  }
  return static_cast<double>((lower + upper) / 2.0L);
}

std::vector<std::vector<int>> pendant_partition(int s, int t, int r1, int r2) {
  std::vector<std::vector<int>> blocks(5);
  blocks[0] = {s + t};
  for (int i = 0; i < s; ++i) blocks[i < r1 ? 1 : 3].push_back(i);
  for (int j = 0; j < t; ++j) blocks[j < r2 ? 2 : 4].push_back(s + j);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return blocks;
}

}  // namespace bookfree
