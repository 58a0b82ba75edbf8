#include <gtest/gtest.h>

#include <random>

#include "cover_fixtures.hpp"
#include "galois_trees/matroid.hpp"

using namespace galois_trees;
using namespace galois_trees::testing;

namespace {

Character rho(const CoverSpec& s, int j) { return Character(s.group, {j}); }

EdgeSubset all_edges(const Graph& g) {
  EdgeSubset s;
  for (const auto& e : g.edges()) s.push_back(e.id);
  return s;
}

// largest independent set size by scanning every subset
std::size_t brute_rank(const CoverSpec& s, const Character& r) {
  const std::size_t m = s.base.num_edges();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeSubset f;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) f.push_back(s.base.edges()[e].id);
    }
    if (f.size() > best && is_independent(s, r, f)) best = f.size();
  }
  return best;
}

}  // namespace

TEST(Matroid, IcosahedronBasesAndWeights) {
  CoverSpec s = icosahedron_spec();
  const std::vector<EdgeSubset> f2 = {{"e1", "e3", "e4", "e6"}};
  const std::vector<EdgeSubset> ones = {{"e1", "e2", "e3", "e5"}, {"e1", "e2", "e4", "e5"}, {"e2", "e3", "e4", "e5"},
                                        {"e2", "e3", "e5", "e6"}, {"e2", "e4", "e5", "e6"}};
  for (int j = 1; j <= 4; ++j) {
    auto m = bases(s, rho(s, j));
    EXPECT_EQ(m.rank, 4u);
    ASSERT_EQ(m.bases.size(), 13u);
    EXPECT_FALSE(is_independent(s, rho(s, j), {"e1", "e2", "e3", "e4"}));
    EXPECT_FALSE(is_independent(s, rho(s, j), {"e3", "e4", "e5", "e6"}));
    EXPECT_TRUE(is_independent(s, rho(s, j), {}));
    const CycInt f = weight_of_root(5, j);
    for (std::size_t i = 0; i < m.bases.size(); ++i) {
      CycInt expected = f;
      if (std::find(ones.begin(), ones.end(), m.bases[i]) != ones.end()) expected = CycInt(1);
      if (std::find(f2.begin(), f2.end(), m.bases[i]) != f2.end()) expected = f * f;
      EXPECT_EQ(m.weights[i], expected) << j << " " << i;
    }
    auto w = weight_polynomial(m);
    EXPECT_EQ(w.scalar, CycInt(5) + CycInt(7) * f + f * f);
    const double expect = j == 1 || j == 4 ? 30 - 6 * std::sqrt(5.0) : 30 + 6 * std::sqrt(5.0);
    EXPECT_NEAR(static_cast<double>(w.scalar.to_complex().real()), expect, 1e-9);
    EXPECT_TRUE(w.polynomial.is_homogeneous());
    EXPECT_EQ(w.polynomial.total_degree(), 4);
    EXPECT_TRUE(exchange_axiom_holds(m.bases));
  }
  EXPECT_EQ(untwisted_bases(s).bases, bases(s, rho(s, 1)).bases);
}

TEST(Matroid, DumbbellCharacters) {
  CoverSpec s = dumbbell_spec();
  auto m1 = bases(s, rho(s, 1));
  EXPECT_EQ(m1.rank, 3u);
  EXPECT_EQ(m1.bases, std::vector<EdgeSubset>{all_edges(s.base)});
  EXPECT_EQ(m1.weights[0], CycInt(1));

  auto m3 = bases(s, rho(s, 3));
  EXPECT_EQ(m3.rank, 2u);
  EXPECT_EQ(m3.bases, (std::vector<EdgeSubset>{{"e1", "e2"}, {"e2", "e3"}}));
  EXPECT_EQ(basis_weight(s, rho(s, 3), {"e2", "e3"}), CycInt(4));

  auto x = [](const char* n) { return CycPoly::variable(n); };
  EXPECT_EQ(weight_polynomial(s, rho(s, 2)).polynomial, x("e1") * x("e2") + CycPoly(3) * x("e1") * x("e3"));
  EXPECT_FALSE(is_independent(s, rho(s, 2), {"e2", "e3"}));
  EXPECT_THROW(basis_weight(s, rho(s, 2), {"e2", "e3"}), Error);
}

TEST(Matroid, Errors) {
  CoverSpec s = dumbbell_spec();
  EXPECT_THROW(bases(s, rho(s, 0)), Error);
  CoverSpec trivial = make_spec(triangle(), AbelianGroup({2}), {}, {});
  EXPECT_THROW(bases(trivial, rho(trivial, 1)), Error);
  EXPECT_THROW(is_independent(trivial, rho(trivial, 1), {}), Error);
  EXPECT_THROW(untwisted_bases(trivial), Error);
}

TEST(Matroid, RankFormulaAndConjugatePairs) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    Graph g = random_connected_multigraph(rng, 4, 7);
    AbelianGroup group({trial % 2 ? 6 : 4});
    std::uniform_int_distribution<int> d(0, group.order() - 1);
    std::map<std::string, std::vector<GroupElement>> dil;
    std::map<std::string, GroupElement> volt;
    for (const auto& v : g.vertices()) {
      if (d(rng) % 3 == 0) dil[v] = {group.element_at(d(rng))};
    }
    for (const auto& e : g.edges()) volt[e.id] = group.element_at(d(rng));
    CoverSpec s = make_spec(g, group, dil, volt);
    if (!is_connected_cover(build_cover(s))) continue;
    ++checked;
    for (const auto& r : characters(group)) {
      if (r.is_trivial()) continue;
      auto m = bases(s, r);
      EXPECT_EQ(m.rank, twisted_rank_formula(s, r));
      EXPECT_EQ(m.rank, brute_rank(s, r));
      EXPECT_TRUE(exchange_axiom_holds(m.bases));
      auto mc = bases(s, r.conjugate());
      EXPECT_EQ(mc.bases, m.bases);
      for (std::size_t i = 0; i < m.weights.size(); ++i) EXPECT_EQ(mc.weights[i], m.weights[i].conj());
    }
    // free resolution: same independent sets on the original edges
    auto res = free_resolution(s);
    for (std::uint32_t mask = 0; mask < (1u << g.num_edges()); ++mask) {
      EdgeSubset f;
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (mask >> e & 1) f.push_back(g.edges()[e].id);
      }
      EXPECT_EQ(is_independent_untwisted(s, f), is_independent_untwisted(res.spec, f));
    }
  }
  EXPECT_GE(checked, 20);
}
