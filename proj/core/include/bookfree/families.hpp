#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bookfree/graph.hpp"

namespace bookfree {

// Vertex layout is fixed for every family so that graph6 output is
// deterministic: first part, then second part, then any added vertices.

/// K_{s,t}: parts {0..s-1} and {s..s+t-1}.
Graph make_complete_bipartite(int s, int t);

/// Complete k-partite graph on n vertices with part sizes differing by at
/// most one; larger parts come first.
Graph make_turan(int n, int k);

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_petersen();

/// K_{⌊(n-1)/2⌋,⌈(n-1)/2⌉} with the edge {0, s} subdivided by vertex n-1.
Graph make_sk(int n);

/// K_{s,t} plus v0 = s+t adjacent to the first r1 vertices of S and the
/// first r2 vertices of T.
Graph make_kst_pendant(int s, int t, int r1, int r2);

/// K_{a,b} with a triangle glued at vertex a (the first vertex of the
/// b-part): vertices a+b and a+b+1 are adjacent to each other and to a.
Graph make_kab_dot_k3(int a, int b);

/// Book with `pages` triangles on the spine {0, 1}; pages are 2..pages+1.
Graph make_book(int pages);

/// Star K_{1,m-1} centred at 0 plus the edge {1, 2}.
Graph make_splus(int m);

/// The conjectured extremal graph K^{r,r}_{⌊(n-1)/2⌋,⌈(n-1)/2⌉}.
Graph make_book_extremal(int n, int r);

enum class Family { Turan2, CompleteBipartite, Sk, KstPendant, KabDotK3, Book, SPlus };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Parameters for the named families; unused fields are ignored.
struct ConstructionParams {
  Family family = Family::Turan2;
  int n = 0;
  int s = 0;
  int t = 0;
  int r1 = 0;
  int r2 = 0;
  int a = 0;
  int b = 0;
  int m = 0;
  int pages = 0;
};

Graph construct(const ConstructionParams& p);

/// Recognition of K^{r1,r2}_{s,t}: a vertex v0 whose removal leaves a
/// complete bipartite graph, with v0 adjacent to both parts.
struct PendantShape {
  int v0 = -1;
  int s = 0;  // part containing the smallest vertex of G - v0
  int t = 0;
  int r1 = 0;
  int r2 = 0;
};

std::optional<PendantShape> recognize_kst_pendant(const Graph& g);

}  // namespace bookfree
