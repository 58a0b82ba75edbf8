#include <gtest/gtest.h>

#include <random>

#include "cover_fixtures.hpp"
#include "galois_trees/zeta.hpp"

using namespace galois_trees;
using namespace galois_trees::testing;

namespace {

ZPoly one_minus_sn_squared(unsigned n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = 1;
  c[n] = -1;
  return pow(ZPoly(c), 2);
}

LPoly lift(const ZPoly& p) {
  return p.map_coefficients<CycInt>([](const BigInt& b) { return CycInt(b); });
}

Graph single_loop() { return build_graph({"v"}, {{"a", "v", "v"}}); }

// trace of W^m at unit lengths, W as a 0/1 matrix
std::vector<BigInt> traces(const Graph& g, int max_length) {
  const std::size_t n = 2 * g.num_edges();
  Matrix<BigInt> w(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : g.incident(g.root(Graph::involution(a)))) {
      if (b != Graph::involution(a)) w(a, b) += 1;
    }
  }
  std::vector<BigInt> out;
  Matrix<BigInt> p = w;
  for (int m = 1; m <= max_length; ++m) {
    BigInt t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p(i, i);
    out.push_back(t);
    p = p * w;
  }
  return out;
}

}  // namespace

TEST(Zeta, TriangleAndCycles) {
  EXPECT_EQ(metric_zeta_reciprocal(triangle()), one_minus_sn_squared(3));
  EXPECT_EQ(ihara_zeta_reciprocal(triangle()), one_minus_sn_squared(3));
  for (long n = 1; n <= 5; ++n) {
    Graph c = subdivide(single_loop(), {{"a", n}});
    EXPECT_EQ(metric_zeta_reciprocal(c), one_minus_sn_squared(static_cast<unsigned>(n)));
    EXPECT_EQ(metric_zeta_reciprocal(single_loop(), {{"a", n}}), one_minus_sn_squared(static_cast<unsigned>(n)));
  }
}

TEST(Zeta, TwoTermMatchesThreeTerm) {
  EXPECT_EQ(metric_zeta_reciprocal(theta_graph()), ihara_zeta_reciprocal(theta_graph()));
  EXPECT_EQ(ihara_zeta_reciprocal(theta_graph()).degree(), 6);
  EXPECT_EQ(metric_zeta_reciprocal(dumbbell()), ihara_zeta_reciprocal(dumbbell()));
  Graph path = build_graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}});
  EXPECT_EQ(ihara_zeta_reciprocal(path), ZPoly(1));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_multigraph(rng, 6, 10);
    ASSERT_EQ(metric_zeta_reciprocal(g), ihara_zeta_reciprocal(g)) << trial;
  }
}

TEST(Zeta, LoopLFunctions) {
  CoverSpec z2 = make_spec(single_loop(), AbelianGroup({2}), {}, {{"a", el({1})}});
  Character r2(z2.group, {1});
  const LPoly one_plus_s_sq = lift(ZPoly(std::vector<BigInt>{1, 2, 1}));
  EXPECT_EQ(metric_L_reciprocal(z2, r2), one_plus_s_sq);
  EXPECT_EQ(artin_L_reciprocal_threeterm(z2, r2), one_plus_s_sq);
  EXPECT_EQ(twisted_laplacian_det(z2, r2), CycInt(4));
  EXPECT_EQ(twisted_laplacian_det(z2, r2), weight_of_root(2, 1));

  CoverSpec z3 = make_spec(single_loop(), AbelianGroup({3}), {}, {{"a", el({1})}});
  EXPECT_EQ(artin_L_reciprocal_threeterm(z3, Character(z3.group, {1})), lift(ZPoly(std::vector<BigInt>{1, 1, 1})));
  EXPECT_EQ(metric_L_reciprocal(z3, Character(z3.group, {1})), lift(ZPoly(std::vector<BigInt>{1, 1, 1})));

  Graph wedge = build_graph({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  CoverSpec z5 = make_spec(wedge, AbelianGroup({5}), {}, {{"a", el({1})}, {"b", el({0})}});
  EXPECT_EQ(twisted_laplacian_det(z5, Character(z5.group, {1})), weight_of_root(5, 1));
}

TEST(Zeta, TrivialCharacterGivesZeta) {
  CoverSpec s = free_resolution(dumbbell_spec()).spec;
  Character triv(s.group, {0});
  EXPECT_EQ(metric_L_reciprocal(s, triv), lift(metric_zeta_reciprocal(s.base)));
  EXPECT_EQ(artin_L_reciprocal_threeterm(s, triv), lift(ihara_zeta_reciprocal(s.base)));
  EXPECT_THROW(twisted_laplacian_det(s, triv), Error);
  EXPECT_THROW(metric_L_reciprocal(dumbbell_spec(), Character(s.group, {1})), Error);
  EXPECT_THROW(metric_zeta_reciprocal(triangle(), {{"ab", 0}}), Error);
}

TEST(Zeta, ResolvedIcosahedronTwistedLaplacian) {
  CoverSpec s = free_resolution(icosahedron_spec()).spec;
  for (int j = 1; j < 5; ++j) {
    Character r(s.group, {j});
    EXPECT_EQ(twisted_laplacian_det(s, r), weight_polynomial(s, r).scalar);
    EXPECT_EQ(metric_L_reciprocal(s, r), artin_L_reciprocal_threeterm(s, r));
    EXPECT_TRUE(taylor_leading_L(s, r).holds());
  }
}

TEST(Zeta, TaylorTheta) {
  auto r = taylor_leading_zeta(theta_graph());
  EXPECT_EQ(r.order, 2u);
  EXPECT_EQ(r.coefficient, -12);
  EXPECT_TRUE(r.holds());
  auto r2 = taylor_leading_zeta(theta_graph(), {{"e", 2}});
  EXPECT_EQ(r2.coefficient, -20);
  EXPECT_TRUE(r2.holds());
  EXPECT_THROW(taylor_leading_zeta(triangle()), Error);

  CoverSpec s = free_resolution(dumbbell_spec()).spec;
  auto l = taylor_leading_L(s, Character(s.group, {2}));
  EXPECT_EQ(l.order, static_cast<std::size_t>(genus(s.base) - 1));
  EXPECT_TRUE(l.holds());
}

TEST(Zeta, RandomFreeCovers) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    CoverSpec s = random_connected_spec(rng, 3, 4, 0.0);
    Cover c = build_cover(s);
    Lengths x;
    std::uniform_int_distribution<long> len(1, 2);
    for (const auto& e : s.base.edges()) x[e.id] = len(rng);
    LPoly product(CycInt(1));
    for (const auto& r : characters(s.group)) {
      product = product * metric_L_reciprocal(s, r, x);
      ASSERT_EQ(metric_L_reciprocal(s, r), artin_L_reciprocal_threeterm(s, r));
      if (r.is_trivial()) continue;
      EXPECT_EQ(twisted_laplacian_det(s, r), weight_polynomial(s, r).scalar);
      EXPECT_TRUE(taylor_leading_L(s, r, x).holds());
    }
    EXPECT_EQ(lift(metric_zeta_reciprocal(c.total, lift_lengths(c, x))), product) << trial;
  }
}

TEST(Zeta, Census) {
  auto t = closed_path_census(triangle(), 6);
  EXPECT_EQ(t[2], 6);
  EXPECT_EQ(t[0], 0);
  Graph tree = build_graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}});
  for (const auto& n : closed_path_census(tree, 8)) EXPECT_EQ(n, 0);
  EXPECT_EQ(closed_path_census(single_loop(), 5), traces(single_loop(), 5));
  EXPECT_THROW(closed_path_census(triangle(), 13), Error);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_connected_multigraph(rng, 4, 6);
    auto census = closed_path_census(g, 7);
    EXPECT_EQ(census, traces(g, 7));
    // -s P'(s) / P(s) = sum_m N_m s^m
    ZPoly p = metric_zeta_reciprocal(g);
    std::vector<BigInt> num(8, BigInt(0));
    for (int k = 1; k <= p.degree() && k < 8; ++k) num[k] = -BigInt(k) * p.coefficient(k);
    std::vector<BigInt> series(8, BigInt(0));
    for (int k = 1; k < 8; ++k) {
      BigInt acc = num[k];
      for (int j = 1; j <= k && j <= p.degree(); ++j) acc -= p.coefficient(j) * series[k - j];
      series[k] = acc;
    }
    for (int m = 1; m < 8; ++m) EXPECT_EQ(series[m], census[m - 1]);
  }
}
