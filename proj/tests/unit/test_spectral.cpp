#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree/quotient.hpp"
#include "bookfree/spectral.hpp"
#include "oracles.hpp"

using namespace bookfree;

namespace {

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::vector<std::int64_t>> pendant_quotient(std::int64_t s, std::int64_t t, std::int64_t r) {
  // Blocks: v0, N_S(v0), N_T(v0), S \ N_S(v0), T \ N_T(v0).
  return {{0, r, r, 0, 0}, {1, 0, r, 0, t - r}, {1, r, 0, s - r, 0}, {0, 0, r, 0, t - r}, {0, r, 0, s - r, 0}};
}

}  // namespace

TEST(Perron, Examples) {
  for (int n = 3; n <= 40; ++n) EXPECT_NEAR(perron(make_cycle(n)).rho, 2.0, 1e-12) << n;
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      EXPECT_NEAR(perron(make_complete_bipartite(s, t)).rho, std::sqrt(double(s) * t), 1e-11) << s << ' ' << t;
    }
  }
  const double root = largest_root(book_quintic(2, 2, 1)).root;
  EXPECT_NEAR(perron(make_kst_pendant(2, 2, 1, 1)).rho, root, 1e-8);
  EXPECT_THROW(perron(Graph(0)), DomainError);
  EXPECT_THROW(perron(make_cycle(5), 0.0), InvalidParameter);
}

TEST(Perron, CertificateInvariants) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 60);
    const Graph g = random_connected(rng, n, 0.15);
    const PerronCertificate c = perron(g);
    ASSERT_TRUE(c.converged);
    EXPECT_LE(c.residual, kDefaultTolerance);
    double max_x = 0.0;
    for (double xv : c.x) {
      EXPECT_GT(xv, 0.0);
      max_x = std::max(max_x, xv);
    }
    EXPECT_DOUBLE_EQ(max_x, 1.0);
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / n;
    EXPECT_LE(avg, c.rho + 1e-12);
    EXPECT_LE(c.rho, g.max_degree() + 1e-12);
    EXPECT_LE(c.lower, c.rho + 1e-15);
    EXPECT_GE(c.upper, c.rho - 1e-15);
  }
}

TEST(Perron, AgreesWithJacobiOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 4 == 0) g.add_edge(u, v);
      }
    }
    const PerronCertificate c = perron(g);
    const double exact = oracle::largest_eigenvalue(oracle::adjacency(g));
    EXPECT_NEAR(c.rho, exact, 1e-9) << n;
    EXPECT_LE(std::abs(c.rho - exact), c.error_bound() + 1e-12);
  }
}

TEST(Perron, DisconnectedUsesLargestComponent) {
  Graph g(9);
  // K4 on 0..3 and a path on 4..8.
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  for (int v = 4; v < 8; ++v) g.add_edge(v, v + 1);
  const PerronCertificate c = perron(g);
  EXPECT_NEAR(c.rho, 3.0, 1e-12);
  for (int v = 4; v < 9; ++v) EXPECT_EQ(c.x[v], 0.0);
  EXPECT_NEAR(perron(Graph(3)).rho, 0.0, 0.0);
}

TEST(Perron, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 28);
    Graph g = random_connected(rng, n, 0.1);
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
      }
    }
    if (non_edges.empty()) continue;
    const auto [u, v] = non_edges[rng() % non_edges.size()];
    const double before = perron(g).rho;
    g.add_edge(u, v);
    EXPECT_GT(perron(g).rho - before, 10 * kDefaultTolerance);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(StrictComparison, Semantics) {
  EXPECT_EQ(strictly_greater(1.0, 0.0, 0.5, 0.0), Strict::Holds);
  EXPECT_EQ(strictly_greater(0.5, 0.0, 1.0, 0.0), Strict::Violated);
  EXPECT_EQ(strictly_greater(1.0, 0.0, 1.0, 0.0), Strict::Inconclusive);
  EXPECT_EQ(strictly_greater(1.0 + 5e-13, 0.0, 1.0, 0.0), Strict::Inconclusive);
  EXPECT_EQ(strictly_greater(1.0 + 1e-6, 1e-6, 1.0, 1e-6), Strict::Inconclusive);
  EXPECT_EQ(strictly_greater(1.0 + 1e-5, 1e-6, 1.0, 1e-6), Strict::Holds);
}

TEST(Rotate, Examples) {
  const Graph g = make_petersen();
  EXPECT_EQ(rotate(g, 0, 1, {}), g);

  Graph p3(3);  // a=0 - b=1 - c=2
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  const std::vector<int> s{0};
  const Graph moved = rotate(p3, 2, 1, s);
  EXPECT_TRUE(moved.has_edge(0, 2));
  EXPECT_TRUE(moved.has_edge(1, 2));
  EXPECT_FALSE(moved.has_edge(0, 1));
  EXPECT_EQ(moved.edge_count(), p3.edge_count());

  const std::vector<int> bad{2};
  EXPECT_THROW(rotate(p3, 1, 0, bad), DomainError);  // 2 is not a neighbour of 0
  const std::vector<int> self{1};
  EXPECT_THROW(rotate(p3, 2, 1, self), DomainError);
  EXPECT_THROW(rotate(p3, 1, 1, s), DomainError);
}

TEST(Rotate, StrictIncreaseOnRandomValidDraws) {
  std::mt19937_64 rng(41);
  int trials = 0;
  while (trials < 200) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = random_connected(rng, n, 0.2);
    const PerronCertificate c = perron(g);
    const int vi = static_cast<int>(rng() % n);
    const int vj = static_cast<int>(rng() % n);
    if (vi == vj || c.x[vi] < c.x[vj]) continue;
    std::vector<int> pool;
    for (int v : g.neighbors(vj)) {
      if (v != vi && !g.has_edge(vi, v)) pool.push_back(v);
    }
    if (pool.empty()) continue;
    std::vector<int> moved;
    for (int v : pool) {
      if (rng() % 2 == 0) moved.push_back(v);
    }
    if (moved.empty()) moved.push_back(pool.front());
    const PerronCertificate after = perron(rotate(g, vi, vj, moved));
    EXPECT_NE(strictly_greater(after.rho, after.error_bound(), c.rho, c.error_bound()), Strict::Violated);
    EXPECT_GT(after.rho, c.rho);
    ++trials;
  }
}

TEST(Equitable, Examples) {
  {
    const Graph g = make_complete_bipartite(3, 5);
    const QuotientSystem q = check_equitable(g, {{0, 1, 2}, {3, 4, 5, 6, 7}});
    ASSERT_TRUE(q.equitable);
    EXPECT_EQ(q.at(0, 0), 0);
    EXPECT_EQ(q.at(0, 1), 5);
    EXPECT_EQ(q.at(1, 0), 3);
    EXPECT_EQ(q.at(1, 1), 0);
    EXPECT_NEAR(quotient_rho(q), std::sqrt(15.0), 1e-12);
  }
  {
    const int s = 6;
    const int t = 7;
    const int r = 2;
    const Graph g = make_kst_pendant(s, t, r, r);
    const QuotientSystem q = check_equitable(g, pendant_partition(s, t, r, r));
    ASSERT_TRUE(q.equitable);
    const auto expected = pendant_quotient(s, t, r);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) EXPECT_EQ(q.at(i, j), expected[i][j]) << i << ' ' << j;
    }
    EXPECT_NEAR(quotient_rho(q), largest_root(book_quintic(s, t, r)).root, 1e-10);
  }
  {
    const QuotientSystem q = check_equitable(make_cycle(5), {{0}, {1, 4}, {2, 3}});
    ASSERT_TRUE(q.equitable);
    const std::vector<std::int64_t> expected{0, 2, 0, 1, 0, 1, 0, 1, 1};
    EXPECT_EQ(q.counts, expected);
    EXPECT_NEAR(quotient_rho(q), 2.0, 1e-12);
  }
  {
    const QuotientSystem q = check_equitable(make_turan(7, 7), {{0, 1, 2, 3, 4, 5, 6}});
    EXPECT_NEAR(quotient_rho(q), 6.0, 1e-12);
  }
}

TEST(Equitable, Errors) {
  const Graph c5 = make_cycle(5);
  EXPECT_THROW(check_equitable(c5, {{0, 1}, {1, 2, 3, 4}}), DomainError);
  EXPECT_THROW(check_equitable(c5, {{0, 1}, {2, 3}}), DomainError);
  EXPECT_THROW(check_equitable(c5, {{0, 1, 2, 3, 4}, {}}), DomainError);
  const QuotientSystem q = check_equitable(c5, {{0, 1}, {2, 3, 4}});
  EXPECT_FALSE(q.equitable);
  EXPECT_THROW(quotient_rho(q), DomainError);
}

TEST(Equitable, QuotientMatchesPerronOnFamilies) {
  for (int s = 1; s <= 15; ++s) {
    for (int t = 1; t <= 15; ++t) {
      for (int r = 1; r <= std::min(s, t); ++r) {
        const Graph g = make_kst_pendant(s, t, r, r);
        const double q = quotient_rho(check_equitable(g, pendant_partition(s, t, r, r)));
        EXPECT_NEAR(q, perron(g).rho, 1e-8) << s << ' ' << t << ' ' << r;
      }
      std::vector<int> a(s);
      std::vector<int> b(t);
      for (int k = 0; k < s; ++k) a[k] = k;
      for (int k = 0; k < t; ++k) b[k] = s + k;
      const Graph kst = make_complete_bipartite(s, t);
      EXPECT_NEAR(quotient_rho(check_equitable(kst, {a, b})), perron(kst).rho, 1e-8);
    }
  }
  for (int n = 1; n <= 20; ++n) {
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k;
    EXPECT_NEAR(quotient_rho(check_equitable(make_turan(n, n), {all})), n - 1.0, 1e-12);
  }
}

TEST(Quintic, Examples) {
  const QuinticPoly f = book_quintic(2, 2, 1);
  EXPECT_EQ(f.coeff, (std::array<std::int64_t, 6>{0, 4, -2, -6, 0, 1}));
  const QuinticPoly g = book_quintic(3, 3, 1);
  EXPECT_EQ(g.coeff, (std::array<std::int64_t, 6>{0, 12, -2, -11, 0, 1}));
  std::mt19937_64 rng(43);
  for (int k = 0; k < 20; ++k) {
    const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % 100);
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 100);
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % std::min(s, t));
    const QuinticPoly p = book_quintic(static_cast<int>(s), static_cast<int>(t), static_cast<int>(r));
    EXPECT_EQ(p.coeff[1], 2 * s * t * r - s * r * r - t * r * r);
  }
  EXPECT_THROW(book_quintic(2, 2, 0), InvalidParameter);
  EXPECT_THROW(book_quintic(2, 5, 3), InvalidParameter);
}

TEST(Quintic, MatchesCharacteristicPolynomialOfQuotient) {
  for (int s = 1; s <= 20; ++s) {
    for (int t = 1; t <= 20; ++t) {
      for (int r = 1; r <= std::min(s, t); ++r) {
        const auto cp = oracle::charpoly(pendant_quotient(s, t, r));
        const QuinticPoly f = book_quintic(s, t, r);
        for (int k = 0; k <= 5; ++k) ASSERT_EQ(f.coeff[k], cp[k]) << s << ' ' << t << ' ' << r << " x^" << k;
      }
    }
  }
}

TEST(Quintic, BracketSignPattern) {
  for (int s = 1; s <= 40; ++s) {
    for (int t = 1; t <= 40; ++t) {
      for (int r = 1; r <= std::min({s, t, 3}); ++r) {
        const QuinticPoly f = book_quintic(s, t, r);
        EXPECT_LT(f(std::sqrt(static_cast<long double>(s) * t)), 0.0L) << s << ' ' << t << ' ' << r;
        EXPECT_GT(f(static_cast<long double>(s + t + 1)), 0.0L) << s << ' ' << t << ' ' << r;
      }
    }
  }
}

TEST(Quintic, LargestRootExamples) {
  const RootCertificate c = largest_root(book_quintic(2, 2, 1));
  EXPECT_GT(c.root, 2.0);
  EXPECT_LE(c.root, 5.0);
  EXPECT_LT(c.f_lo, 0.0L);
  EXPECT_GT(c.f_hi, 0.0L);
  EXPECT_NEAR(c.root, oracle::largest_eigenvalue(oracle::adjacency(make_kst_pendant(2, 2, 1, 1))), 1e-8);

  const RootCertificate big = largest_root(book_quintic(23, 24, 1));
  EXPECT_GT(big.root, 47.0 / 2.0 - 1.0 / (4.0 * 47.0));

  const Graph k3 = make_kst_pendant(1, 1, 1, 1);
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_NEAR(largest_root(book_quintic(1, 1, 1)).root, perron(k3).rho, 1e-8);
  EXPECT_NEAR(largest_root(book_quintic(1, 1, 1)).root, 2.0, 1e-12);
}

TEST(Quintic, ExactSignAgreesWithLongDouble) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 500; ++k) {
    const int s = 1 + static_cast<int>(rng() % 60);
    const int t = 1 + static_cast<int>(rng() % 60);
    const int r = 1 + static_cast<int>(rng() % std::min(s, t));
    const QuinticPoly f = book_quintic(s, t, r);
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 50);
    const std::int64_t num = static_cast<std::int64_t>(rng() % (130 * den));
    const long double v = f(static_cast<long double>(num) / den);
    if (std::abs(v) < 1e-6L) continue;
    EXPECT_EQ(exact_sign_at(f, num, den), v > 0 ? 1 : -1);
  }
  EXPECT_EQ(exact_sign_at(book_quintic(2, 2, 1), 0, 1), 0);
}

TEST(LowerBounds, Examples) {
  const LowerBoundReport a = check_lower_bounds(48, 1);
  EXPECT_TRUE(a.holds());
  EXPECT_GT(a.margin_half, 0.0);
  EXPECT_GT(a.margin_chain, 0.0);
  EXPECT_GT(a.margin_square, 0.0);
  EXPECT_TRUE(a.exact_sign_negative);
  EXPECT_LT(std::abs(a.route_difference), 1e-8);
  EXPECT_TRUE(check_lower_bounds(300, 2).holds());
  EXPECT_THROW(check_lower_bounds(47, 1), InvalidParameter);
  EXPECT_THROW(check_lower_bounds(100, 0), InvalidParameter);
}

TEST(Balance, Examples) {
  const BalanceReport a = balance_compare(25, 22, 1);
  EXPECT_GT(a.difference, 0.0);
  EXPECT_EQ(a.increase, Strict::Holds);
  const BalanceReport b = balance_compare(10, 5, 2);
  EXPECT_GT(b.difference, 0.0);
  EXPECT_EQ(b.increase, Strict::Holds);
  EXPECT_NEAR(b.difference,
              perron(make_kst_pendant(9, 6, 2, 2)).rho - perron(make_kst_pendant(10, 5, 2, 2)).rho, 1e-8);
  for (int t = 1; t <= 10; ++t) EXPECT_THROW(balance_compare(t + 1, t, 1), InvalidParameter);
}
