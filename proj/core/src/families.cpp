#include "bookfree/families.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bookfree/errors.hpp"

namespace bookfree {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

}  // namespace

Graph make_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite graph needs s >= 1 and t >= 1");
  Graph g(s + t);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  }
  return g;
}

Graph make_turan(int n, int k) {
  require(k >= 1, "Turan graph needs k >= 1");
  require(n >= k, "Turan graph needs n >= k");
  std::vector<int> part(n);
  int v = 0;
  for (int i = 0; i < k; ++i) {
    int size = n / k + (i < n % k ? 1 : 0);
    for (int j = 0; j < size; ++j) part[v++] = i;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (part[u] != part[w]) g.add_edge(u, w);
    }
  }
  return g;
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return make_turan(n, n);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph make_sk(int n) {
  require(n >= 5, "SK graph needs n >= 5");
  const int s = (n - 1) / 2;
  const int t = n - 1 - s;
  Graph g(n);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  }
  g.remove_edge(0, s);
  g.add_edge(0, n - 1);
  g.add_edge(s, n - 1);
  return g;
}

Graph make_kst_pendant(int s, int t, int r1, int r2) {
  require(s >= 1 && t >= 1, "K^{r1,r2}_{s,t} needs s >= 1 and t >= 1");
  require(r1 >= 0 && r2 >= 0, "attachment counts must be nonnegative");
  require(std::max(r1, r2) >= 1, "K^{r1,r2}_{s,t} needs max(r1, r2) >= 1");
  require(r1 <= s, "K^{r1,r2}_{s,t} needs r1 <= s");
  require(r2 <= t, "K^{r1,r2}_{s,t} needs r2 <= t");
  Graph g(s + t + 1);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  }
  const int v0 = s + t;
  for (int i = 0; i < r1; ++i) g.add_edge(v0, i);
  for (int j = 0; j < r2; ++j) g.add_edge(v0, s + j);
  return g;
}

Graph make_kab_dot_k3(int a, int b) {
  require(a >= 1 && b >= 1, "K_{a,b} dot K3 needs a >= 1 and b >= 1");
  Graph g(a + b + 2);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  const int hub = a;
  g.add_edge(hub, a + b);
  g.add_edge(hub, a + b + 1);
  g.add_edge(a + b, a + b + 1);
  return g;
}

Graph make_book(int pages) {
  require(pages >= 1, "book needs at least one page (pages >= 1)");
  Graph g(pages + 2);
  g.add_edge(0, 1);
  for (int p = 2; p < pages + 2; ++p) {
    g.add_edge(0, p);
    g.add_edge(1, p);
  }
  return g;
}

Graph make_splus(int m) {
  require(m >= 3, "S+_{m,1} needs m >= 3");
  Graph g(m);
  for (int v = 1; v < m; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  return g;
}

Graph make_book_extremal(int n, int r) {
  require(n >= 3, "K^{r,r} needs n >= 3");
  const int s = (n - 1) / 2;
  const int t = n - 1 - s;
  require(r >= 1 && r <= s, "K^{r,r}_{s,t} needs 1 <= r <= min(s, t)");
  return make_kst_pendant(s, t, r, r);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::Turan2, "turan2"},
    {Family::CompleteBipartite, "complete-bipartite"},
    {Family::Sk, "sk"},
    {Family::KstPendant, "kst-pendant"},
    {Family::KabDotK3, "kab-dot-k3"},
    {Family::Book, "book"},
    {Family::SPlus, "splus"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, fname] : kFamilyNames) {
    if (fname == name) return fam;
  }
  return std::nullopt;
}

Graph construct(const ConstructionParams& p) {
  switch (p.family) {
    case Family::Turan2:
      return make_turan(p.n, 2);
    case Family::CompleteBipartite:
      return make_complete_bipartite(p.s, p.t);
    case Family::Sk:
      return make_sk(p.n);
    case Family::KstPendant:
      return make_kst_pendant(p.s, p.t, p.r1, p.r2);
    case Family::KabDotK3:
      return make_kab_dot_k3(p.a, p.b);
    case Family::Book:
      return make_book(p.pages);
    case Family::SPlus:
      return make_splus(p.m);
  }
  throw InvalidParameter("unknown family");
}

std::optional<PendantShape> recognize_kst_pendant(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (int v0 = 0; v0 < n; ++v0) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
      if (v != v0) rest.push_back(v);
    }
    Graph h = g.induced(rest);
    if (!is_connected(h)) continue;
    auto bp = check_bipartite(h);
    if (!bp.bipartite) continue;
    // Orient so the part containing rest[0] is S.
    std::int64_t s = 0;
    for (int c : bp.coloring) s += (c == bp.coloring[0]);
    std::int64_t t = (n - 1) - s;
    if (s < 1 || t < 1 || h.edge_count() != s * t) continue;
    PendantShape shape{v0, static_cast<int>(s), static_cast<int>(t), 0, 0};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (!g.has_edge(v0, rest[i])) continue;
      if (bp.coloring[i] == bp.coloring[0]) {
        ++shape.r1;
      } else {
        ++shape.r2;
      }
    }
    if (shape.r1 >= 1 || shape.r2 >= 1) return shape;
  }
  return std::nullopt;
}

}  // namespace bookfree
