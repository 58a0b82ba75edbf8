#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cover_fixtures.hpp"
#include "galois_trees/galois_trees.hpp"

using namespace galois_trees;
using namespace galois_trees::testing;

namespace {

constexpr double kDecimalTolerance = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "failed: " + what;
    pass = pass && ok;
  }
};

// state shared with criteria 8 and 9
std::vector<std::pair<std::string, Cover>> g_covers;
std::vector<TwistedMatroid> g_matroids;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GT_DATA_DIR) + "/" + name);
  if (!in) throw Error("missing fixture " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

IntPoly var(const std::string& n) { return IntPoly::variable(n); }
CycPoly cvar(const std::string& n) { return CycPoly::variable(n); }

Outcome check_icosahedron() {
  Outcome o;
  CoverSpec s = parse_spec(slurp("icosahedron.json"));
  Cover c = build_cover(s);
  o.require(c.total.num_vertices() == 12 && c.total.num_edges() == 30, "cover size");
  for (std::size_t v = 0; v < 12; ++v) o.require(c.total.valency(v) == 5, "5-regular");
  o.require(is_connected_cover(c), "connected");
  o.require(check_cover(c).empty(), "cover invariants");
  o.require(jacobian_group(s.base).order == 2, "|Jac(X)| = 2");

  const std::set<EdgeSubset> ones = {{"e1", "e2", "e3", "e5"}, {"e1", "e2", "e4", "e5"}, {"e2", "e3", "e4", "e5"},
                                     {"e2", "e3", "e5", "e6"}, {"e2", "e4", "e5", "e6"}};
  const EdgeSubset squared = {"e1", "e3", "e4", "e6"};
  auto r = verify_main_theorem(s);
  double worst = 0;
  for (const auto& ch : r.characters) {
    const int j = ch.rho.exponents()[0];
    const CycInt f = weight_of_root(5, j);
    o.require(ch.rank == 4 && ch.basis_count == 13, "rank 4 with 13 bases");
    for (std::size_t i = 0; i < ch.matroid.bases.size(); ++i) {
      CycInt expected = ones.count(ch.matroid.bases[i]) ? CycInt(1) : f;
      if (ch.matroid.bases[i] == squared) expected = f * f;
      o.require(ch.matroid.weights[i] == expected, "basis weight table");
    }
    o.require(ch.weights.scalar == CycInt(5) + CycInt(7) * f + f * f, "scalar weight 5+7f+f^2");
    const double target = j == 1 || j == 4 ? 30 - 6 * std::sqrt(5.0) : 30 + 6 * std::sqrt(5.0);
    const auto z = ch.weights.scalar.to_complex();
    worst = std::max(worst, std::abs(static_cast<double>(z.real()) - target) + std::abs(static_cast<double>(z.imag())));
    g_matroids.push_back(ch.matroid);
  }
  o.require(worst < kDecimalTolerance, "decimal embedding");
  o.require(r.equal, "polynomial identity");
  o.require(r.theorem_tree_count == 5184000, "theorem product");
  o.require(tree_count(c.total) == 5184000 && jacobian_group(c.total).order == 5184000, "direct count");
  g_covers.emplace_back("icosahedron", c);
  if (o.pass) {
    std::ostringstream d;
    d << "|Jac| = " << r.cover_tree_count.get_str() << ", max decimal error " << std::scientific << std::setprecision(1)
      << worst;
    o.detail = d.str();
  }
  return o;
}

Outcome check_dumbbell() {
  Outcome o;
  CoverSpec s = parse_spec(slurp("dumbbell.json"));
  Cover c = build_cover(s);
  const IntPoly x1 = var("e1"), x2 = var("e2"), x3 = var("e3");
  const IntPoly expected =
      IntPoly(12) * pow(x1, 5) * pow(x2, 4) * pow(x3, 2) * (x1 + IntPoly(4) * x3) * pow(x2 + IntPoly(3) * x3, 2);
  o.require(specialized_cover_polynomial(c) == expected, "specialized cover polynomial");
  const CycPoly y1 = cvar("e1"), y2 = cvar("e2"), y3 = cvar("e3");
  auto r = verify_main_theorem(s);
  for (const auto& ch : r.characters) {
    const int j = ch.rho.exponents()[0];
    CycPoly want = y1 * y2 * y3;
    if (j == 2 || j == 4) want = y1 * y2 + CycPoly(3) * y1 * y3;
    if (j == 3) want = y1 * y2 + CycPoly(4) * y2 * y3;
    o.require(ch.weights.polynomial == want, "weight polynomial j=" + std::to_string(j));
    g_matroids.push_back(ch.matroid);
  }
  o.require(r.characters.size() == 5, "five nontrivial characters");
  o.require(r.equal && r.counts_equal, "theorem identity");
  o.require(tree_count(c.total) == 960 && r.theorem_tree_count == 960, "tree count 960");
  g_covers.emplace_back("dumbbell", c);
  if (o.pass) o.detail = "tree count 960";
  return o;
}

Outcome check_s3_double_hexagon() {
  Outcome o;
  LabeledGraph g = parse_labeled_graph(slurp("s3_double_hexagon.json"));
  const IntPoly x = var("x"), y = var("y"), z = var("z");
  const IntPoly expected = IntPoly(6) * (x * y + x * z + y * z) * (x + z) *
                           pow(IntPoly(4) * x * y + IntPoly(4) * x * z + IntPoly(3) * y * y + IntPoly(4) * y * z, 2);
  const IntPoly direct = tree_polynomial(g.graph, g.labels);
  o.require(direct == expected, "frontier polynomial");
  o.require(jacobian_polynomial_from_trees(g.graph, g.labels) == expected, "tree listing");

  // base theta graph; projection from the bipartition, which the labels respect
  Cover c;
  c.base = build_graph({"u", "w"}, {{"x", "u", "w"}, {"y", "u", "w"}, {"z", "u", "w"}});
  c.total = g.graph;
  std::vector<std::size_t> side(g.graph.num_vertices(), Graph::npos);
  side[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < g.graph.num_edges(); ++e) {
      const std::size_t a = g.graph.src(e), b = g.graph.tgt(e);
      if (side[a] != Graph::npos && side[b] == Graph::npos) side[b] = 1 - side[a], changed = true;
      if (side[b] != Graph::npos && side[a] == Graph::npos) side[a] = 1 - side[b], changed = true;
      o.require(side[a] == Graph::npos || side[b] == Graph::npos || side[a] != side[b], "bipartite");
    }
  }
  c.vertex_projection = side;
  for (const auto& l : g.labels) c.edge_projection.push_back(c.base.edge_index(l));
  g_covers.emplace_back("S3 double hexagon", c);
  if (o.pass) o.detail = "J(1) = " + expected.evaluate_all(BigInt(1)).get_str();
  return o;
}

Outcome check_main_theorem_suite() {
  Outcome o;
  std::mt19937 rng(20240601);
  int dilated = 0, klein = 0;
  for (int trial = 0; trial < 200 && o.pass; ++trial) {
    CoverSpec s = random_connected_spec(rng, 5, 8, 0.3);
    if (!validate_spec(s).spec.is_free()) ++dilated;
    if (s.group.rank() == 2) ++klein;
    auto r = verify_main_theorem(s);
    o.require(r.equal, "polynomial identity on\n" + serialize_spec(s));
    o.require(r.counts_equal, "tree count identity on\n" + serialize_spec(s));
    for (const auto& ch : r.characters) g_matroids.push_back(ch.matroid);
    g_covers.emplace_back("random " + std::to_string(trial), build_cover(s));
  }
  if (o.pass) o.detail = "200 covers, " + std::to_string(dilated) + " dilated, " + std::to_string(klein) + " over Z/2xZ/2";
  return o;
}

Outcome check_determinant_identities() {
  Outcome o;
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> len(1, 2);
  int characters_checked = 0;
  for (int trial = 0; trial < 50 && o.pass; ++trial) {
    CoverSpec s = random_connected_spec(rng, 5, 8, 0.0);
    Cover c = build_cover(s);
    const std::string where = " on\n" + serialize_spec(s);
    o.require(metric_zeta_reciprocal(s.base) == ihara_zeta_reciprocal(s.base), "zeta two-term vs three-term" + where);
    Lengths lengths;
    for (const auto& e : s.base.edges()) lengths[e.id] = len(rng);
    LPoly product(CycInt(1));
    for (const auto& rho : characters(s.group)) {
      o.require(metric_L_reciprocal(s, rho) == artin_L_reciprocal_threeterm(s, rho), "L two-term vs three-term" + where);
      product = product * metric_L_reciprocal(s, rho, lengths);
      if (rho.is_trivial()) continue;
      TwistedMatroid m = bases(s, rho);
      o.require(twisted_laplacian_det(s, rho) == weight_polynomial(m).scalar, "det L_rho = scalar weight" + where);
      g_matroids.push_back(m);
      ++characters_checked;
    }
    const ZPoly zeta = metric_zeta_reciprocal(c.total, lift_lengths(c, lengths));
    o.require(zeta.map_coefficients<CycInt>([](const BigInt& b) { return CycInt(b); }) == product,
              "zeta factorization" + where);
  }
  if (o.pass) o.detail = "50 free covers, " + std::to_string(characters_checked) + " nontrivial characters";
  return o;
}

Outcome check_taylor() {
  Outcome o;
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> len(1, 3);
  auto random_lengths = [&](const Graph& g) {
    Lengths l;
    for (const auto& e : g.edges()) l[e.id] = len(rng);
    return l;
  };
  int graphs = 0;
  while (graphs < 30 && o.pass) {
    Graph g = random_connected_multigraph(rng, 6, 10);
    if (genus(g) < 2) continue;
    ++graphs;
    auto r = taylor_leading_zeta(g, random_lengths(g));
    o.require(r.holds(), "zeta leading term at genus " + std::to_string(genus(g)));
  }
  int covers = 0;
  while (covers < 30 && o.pass) {
    CoverSpec s = random_connected_spec(rng, 5, 8, 0.0);
    if (genus(s.base) < 2) continue;
    ++covers;
    const Lengths l = random_lengths(s.base);
    for (const auto& rho : characters(s.group)) {
      if (rho.is_trivial()) continue;
      o.require(taylor_leading_L(s, rho, l).holds(), "L leading term on\n" + serialize_spec(s));
    }
  }
  if (o.pass) o.detail = "30 graphs, 30 free covers";
  return o;
}

Outcome check_kirchhoff() {
  Outcome o;
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> pieces(1, 3);
  std::size_t edges_contracted = 0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    Graph g = random_connected_multigraph(rng, 8, 14);
    const IntPoly j = jacobian_polynomial(g);
    const BigInt count = tree_count(g);
    o.require(jacobian_group(g).order == count, "SNF product");
    o.require(BigInt(static_cast<unsigned long>(brute_force_spanning_trees(g).size())) == count, "tree enumeration");
    o.require(j.evaluate_all(BigInt(1)) == count, "J_X(1)");
    for (const auto& e : g.edges()) {
      const IntPoly contracted = jacobian_polynomial(contract(g, {e.id}).graph);
      const IntPoly expected = e.src == e.tgt ? exact_divide(j, var(e.id)) : j.substitute_var(e.id, IntPoly(0));
      o.require(contracted == expected, "contraction of " + e.id);
      ++edges_contracted;
    }
    std::map<std::string, long> n;
    std::map<std::string, BigInt> point;
    for (const auto& e : g.edges()) {
      n[e.id] = pieces(rng);
      point[e.id] = BigInt(n[e.id]);
    }
    o.require(tree_count(subdivide(g, n)) == j.evaluate(point), "subdivision");
  }
  if (o.pass) o.detail = "100 graphs, " + std::to_string(edges_contracted) + " contractions";
  return o;
}

Outcome check_pushforward() {
  Outcome o;
  for (const auto& [name, c] : g_covers) {
    auto r = pushforward_jacobian(c);
    o.require(r.surjective, name + " surjective");
    o.require(r.kernel_order * r.target_order == r.source_order, name + " kernel order");
    if (name == "icosahedron") o.require(r.kernel_order == 2592000, "icosahedron kernel 2592000");
  }
  if (o.pass) o.detail = std::to_string(g_covers.size()) + " covers";
  return o;
}

// Independence straight from the cover pushed to Z/n through rho: F is
// independent when every component of X - F has fewer than n components
// above it.
class PushedOracle {
 public:
  PushedOracle(const CoverSpec& input, const Character& rho) : spec_(validate_spec(input).spec) {
    n_ = rho.conductor();
    AbelianGroup h({n_});
    std::map<std::string, std::vector<GroupElement>> dil;
    std::map<std::string, GroupElement> volt;
    for (std::size_t v = 0; v < spec_.base.num_vertices(); ++v) {
      auto& gens = dil[spec_.base.vertices()[v]];
      for (const auto& d : spec_.dilation[v].elements()) gens.push_back(GroupElement{{rho.value(d)}});
    }
    for (std::size_t e = 0; e < spec_.base.num_edges(); ++e) volt[spec_.base.edges()[e].id] = GroupElement{{rho.value(spec_.voltage[e])}};
    pushed_ = build_cover(make_spec(spec_.base, h, dil, volt));
  }

  bool independent(std::uint32_t removed) const {
    const Graph& x = pushed_.base;
    std::vector<char> keep(x.num_edges());
    for (std::size_t e = 0; e < keep.size(); ++e) keep[e] = !(removed >> e & 1);
    std::vector<char> keep_total(pushed_.total.num_edges());
    for (std::size_t d = 0; d < keep_total.size(); ++d) keep_total[d] = keep[pushed_.edge_projection[d]];
    std::size_t nb = 0;
    auto below = component_labels(x, keep, &nb);
    auto above = component_labels(pushed_.total, keep_total);
    std::vector<std::set<std::size_t>> sheets(nb);
    for (std::size_t w = 0; w < above.size(); ++w) sheets[below[pushed_.vertex_projection[w]]].insert(above[w]);
    for (const auto& s : sheets) {
      if (static_cast<int>(s.size()) >= n_) return false;
    }
    return true;
  }

  EdgeSubset subset(std::uint32_t mask) const {
    EdgeSubset f;
    for (std::size_t e = 0; e < spec_.base.num_edges(); ++e) {
      if (mask >> e & 1) f.push_back(spec_.base.edges()[e].id);
    }
    std::sort(f.begin(), f.end());
    return f;
  }

  std::size_t num_edges() const { return spec_.base.num_edges(); }

 private:
  CoverSpec spec_;
  int n_ = 1;
  Cover pushed_;
};

Outcome check_matroid_axioms() {
  Outcome o;
  for (const auto& m : g_matroids) {
    if (!o.pass) break;
    const std::string where = " on\n" + serialize_spec(m.spec);
    o.require(exchange_axiom_holds(m.bases), "basis exchange" + where);
    PushedOracle oracle(m.spec, m.rho);
    std::size_t rank = 0;
    std::set<EdgeSubset> maximal;
    for (std::uint32_t mask = 0; mask < (1u << oracle.num_edges()); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < rank || !oracle.independent(mask)) continue;
      if (size > rank) {
        rank = size;
        maximal.clear();
      }
      maximal.insert(oracle.subset(mask));
    }
    std::set<EdgeSubset> produced;
    for (auto b : m.bases) {
      std::sort(b.begin(), b.end());
      produced.insert(b);
    }
    o.require(m.rank == rank && twisted_rank_formula(m.spec, m.rho) == rank, "rank" + where);
    o.require(produced == maximal, "bases" + where);
  }
  if (o.pass) o.detail = std::to_string(g_matroids.size()) + " matroids";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "icosahedron end-to-end", 10, check_icosahedron},
      {2, "Z/6 dumbbell", 5, check_dumbbell},
      {3, "S3 double hexagon", 5, check_s3_double_hexagon},
      {4, "main theorem on random covers", 300, check_main_theorem_suite},
      {5, "determinant identities", 120, check_determinant_identities},
      {6, "Taylor expansions at s = 1", 120, check_taylor},
      {7, "Kirchhoff, contraction, subdivision", 120, check_kirchhoff},
      {8, "pushforward on Jacobians", 300, check_pushforward},
      {9, "matroid axioms", 120, check_matroid_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.budget_seconds << " s]  "
              << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
