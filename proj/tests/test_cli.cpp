#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "cover_fixtures.hpp"
#include "galois_trees/galois_trees.hpp"

using namespace galois_trees;
using namespace galois_trees::testing;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GT_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GT_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void expect_same_spec(const CoverSpec& a, const CoverSpec& b) {
  EXPECT_EQ(a.base, b.base);
  EXPECT_EQ(a.group, b.group);
  EXPECT_EQ(a.dilation, b.dilation);
  EXPECT_EQ(a.voltage, b.voltage);
}

}  // namespace

TEST(Io, FixturesMatchHandBuiltSpecs) {
  expect_same_spec(parse_spec(slurp("icosahedron.json")), icosahedron_spec());
  expect_same_spec(parse_spec(slurp("dumbbell.json")), dumbbell_spec());
}

TEST(Io, DefaultsAndDiagnostics) {
  CoverSpec s = parse_spec(R"({"vertices":["a"],"edges":[{"id":"l","src":"a","tgt":"a"}],"group":{"cyclic":[3]}})");
  EXPECT_EQ(s.voltage_of("l"), el({0}));
  EXPECT_TRUE(s.is_free());
  try {
    parse_spec(R"({"vertices":["a"],"edges":[],"group":{"cyclic":[3]},"dilation":{"zz":[[1]]}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
  EXPECT_THROW(parse_spec(R"({"vertices":["a"],"edges":[]})"), Error);
  EXPECT_THROW(parse_spec(R"({"vertices":["a"],"edges":[{"id":"l","src":"a"}],"group":{"cyclic":[3]}})"), Error);
  EXPECT_THROW(parse_spec(R"({"vertices":["a"],"edges":[],"group":{"cyclic":[3, 2]},"voltage":{}, "dilation":{"a":[[1]]}})"), Error);
  EXPECT_THROW(parse_spec("{not json"), Error);
}

TEST(Io, RoundTrip) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    CoverSpec s = validate_spec(random_spec(rng, 5, 8, random_group(rng), 0.3)).spec;
    expect_same_spec(parse_spec(serialize_spec(s)), s);
  }
}

TEST(Io, Lengths) {
  EXPECT_EQ(parse_lengths("e1=2,e2=3"), (Lengths{{"e1", 2}, {"e2", 3}}));
  EXPECT_TRUE(parse_lengths("").empty());
  EXPECT_THROW(parse_lengths("e1"), Error);
  EXPECT_THROW(parse_lengths("e1=x"), Error);
}

TEST(Io, LabeledGraph) {
  auto g = parse_labeled_graph(slurp("s3_double_hexagon.json"));
  EXPECT_EQ(g.graph.num_vertices(), 12u);
  EXPECT_EQ(g.graph.num_edges(), 18u);
  for (std::size_t v = 0; v < 12; ++v) EXPECT_EQ(g.graph.valency(v), 3u);
}

TEST(Verify, ThetaDoubleCover) {
  CoverSpec s = parse_spec(slurp("theta.json"));
  auto r = verify_main_theorem(s);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.counts_equal);
  Cover c = build_cover(s);
  EXPECT_EQ(c.total.num_vertices(), 4u);
  std::vector<std::string> labels;
  for (std::size_t d = 0; d < c.total.num_edges(); ++d) labels.push_back(c.base.edges()[c.edge_projection[d]].id);
  EXPECT_EQ(r.lhs, jacobian_polynomial_from_trees(c.total, labels));
  EXPECT_EQ(r.prefactor, Rational(1, 2));
}

TEST(Verify, Errors) {
  EXPECT_THROW(verify_main_theorem(make_spec(triangle(), AbelianGroup({2}), {}, {})), Error);
  EXPECT_THROW(verify_main_theorem(make_spec(triangle(), AbelianGroup({1}), {}, {})), Error);
}

TEST(Verify, RandomCoversAndResolution) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    CoverSpec s = random_connected_spec(rng, 4, 6, 0.4);
    auto r = verify_main_theorem(s);
    ASSERT_TRUE(r.equal) << serialize_spec(s);
    EXPECT_TRUE(r.counts_equal);
    auto res = free_resolution(s);
    Cover back = contract_cover(build_cover(res.spec), res.added);
    EXPECT_EQ(tree_count(back.total), r.cover_tree_count);
  }
}

TEST(Report, Schemas) {
  CoverSpec theta = parse_spec(slurp("theta.json"));
  json j = jacobian_report(theta);
  EXPECT_EQ(j["schema"], "galois-trees/1");
  EXPECT_EQ(j["invariant_factors"], json::parse("[3]"));
  EXPECT_EQ(j["order"], 3);

  json m = matroid_report(icosahedron_spec(), 1);
  ASSERT_EQ(m["characters"].size(), 1u);
  EXPECT_EQ(m["characters"][0]["bases"].size(), 13u);
  EXPECT_THROW(matroid_report(icosahedron_spec(), 7), Error);

  CoverSpec digon = parse_spec(
      R"({"vertices":["a","b"],"edges":[{"id":"e","src":"a","tgt":"b"},{"id":"f","src":"a","tgt":"b"}],"group":{"cyclic":[2]},"voltage":{"e":[1]}})");
  json z = zeta_report(digon, {}, std::nullopt);
  EXPECT_TRUE(z["taylor_at_1"].contains("skipped"));
  EXPECT_EQ(z["two_term_equals_three_term_at_unit_lengths"], true);
  json l = lfunction_report(digon, 1, {{"e", 2}});
  EXPECT_EQ(l["characters"][0]["taylor_at_1"]["holds"], true);
  CoverSpec path = parse_spec(R"({"vertices":["a","b"],"edges":[{"id":"e","src":"a","tgt":"b"}],"group":{"cyclic":[3]}})");
  EXPECT_THROW(taylor_leading_L(path, Character(path.group, {1})), Error);

  json v = verification_to_json(verify_main_theorem(dumbbell_spec()));
  EXPECT_EQ(v["equal"], true);
  EXPECT_EQ(v["prefactor"], 12);
  EXPECT_EQ(v["tree_count"]["cover"], 960);
  const std::string text = to_text(v);
  EXPECT_NE(text.find("equal: true"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const std::string data = GT_DATA_DIR;
  EXPECT_EQ(run_cli("verify " + data + "/icosahedron.json"), 0);
  EXPECT_EQ(run_cli("verify " + data + "/dumbbell.json --format text"), 0);
  EXPECT_EQ(run_cli("matroid " + data + "/icosahedron.json --character 1"), 0);
  EXPECT_EQ(run_cli("jacobian " + data + "/theta.json"), 0);
  EXPECT_EQ(run_cli("zeta " + data + "/theta.json --lengths e=2 --max-length 5"), 0);
  EXPECT_EQ(run_cli("resolve " + data + "/dumbbell.json"), 0);
  EXPECT_EQ(run_cli("lfunction " + data + "/theta.json --character 1"), 0);
  EXPECT_EQ(run_cli("lfunction " + data + "/dumbbell.json"), 2);
  EXPECT_EQ(run_cli("verify " + data + "/missing.json"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("zeta " + data + "/theta.json --lengths e=0"), 2);
}
