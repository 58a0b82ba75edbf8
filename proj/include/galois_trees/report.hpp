#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "galois_trees/io.hpp"
#include "galois_trees/jacobian.hpp"
#include "galois_trees/matroid.hpp"
#include "galois_trees/verify.hpp"
#include "galois_trees/zeta.hpp"

namespace galois_trees {

inline json header(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

inline json character_to_json(const Character& rho, std::size_t index) {
  return json{{"index", index}, {"exponents", rho.exponents()}};
}

inline json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return bigint_to_json(q.get_num());
  return json(q.get_str());
}

inline const Character& character_at(const AbelianGroup& g, const std::vector<Character>& all, long index) {
  if (index < 0 || static_cast<std::size_t>(index) >= all.size()) {
    throw Error("character index " + std::to_string(index) + " out of range for " + g.to_string() + " (0.." +
                std::to_string(all.size() - 1) + ")");
  }
  return all[static_cast<std::size_t>(index)];
}

// "e1=2,e2=3"
inline Lengths parse_lengths(const std::string& text) {
  Lengths out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("length entry \"" + item + "\" is not of the form edge=int");
    const std::string id = item.substr(0, eq);
    long x = 0;
    try {
      std::size_t used = 0;
      x = std::stol(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw Error("");
    } catch (...) {
      throw Error("length of " + id + " is not an integer");
    }
    out[id] = x;
  }
  return out;
}

inline json build_report(const CoverSpec& input) {
  auto normalized = validate_spec(input);
  Cover c = build_cover(normalized.spec);
  json j = header("build");
  j["group"] = c.group.to_string();
  j["reduced_edges"] = normalized.reduced_edges;
  json vs = json::array();
  for (std::size_t w = 0; w < c.total.num_vertices(); ++w) {
    vs.push_back(json{{"id", c.total.vertices()[w]},
                      {"over", c.base.vertices()[c.vertex_projection[w]]},
                      {"local_degree", c.local_degree[w]}});
  }
  json es = json::array();
  for (std::size_t d = 0; d < c.total.num_edges(); ++d) {
    const auto& e = c.total.edges()[d];
    es.push_back(json{{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}, {"over", c.base.edges()[c.edge_projection[d]].id}});
  }
  j["total"] = json{{"num_vertices", c.total.num_vertices()}, {"num_edges", c.total.num_edges()}, {"vertices", vs}, {"edges", es}};
  j["connected"] = is_connected_cover(c);
  j["violations"] = check_cover(c);
  return j;
}

inline json jacobian_group_to_json(const JacobianGroup& g) {
  json f = json::array();
  for (const auto& d : g.invariant_factors) f.push_back(bigint_to_json(d));
  return json{{"invariant_factors", f}, {"order", bigint_to_json(g.order)}};
}

inline json jacobian_report(const CoverSpec& spec) {
  json j = header("jacobian");
  j.update(jacobian_group_to_json(jacobian_group(spec.base)));
  Cover c = build_cover(spec);
  if (is_connected_cover(c)) {
    json cover = jacobian_group_to_json(jacobian_group(c.total));
    auto push = pushforward_jacobian(c);
    cover["pushforward"] = json{{"surjective", push.surjective},
                                {"image_order", bigint_to_json(push.image_order)},
                                {"kernel_order", bigint_to_json(push.kernel_order)}};
    j["cover"] = cover;
  } else {
    j["cover"] = nullptr;
  }
  return j;
}

inline json jacpoly_report(const CoverSpec& spec) {
  json j = header("jacpoly");
  j["base"] = json{{"tree_count", bigint_to_json(tree_count(spec.base))},
                   {"polynomial", polynomial_to_json(jacobian_polynomial(spec.base))}};
  Cover c = build_cover(spec);
  if (is_connected_cover(c)) {
    j["cover"] = json{{"tree_count", bigint_to_json(tree_count(c.total))},
                      {"specialized_polynomial", polynomial_to_json(specialized_cover_polynomial(c))}};
  } else {
    j["cover"] = nullptr;
  }
  return j;
}

inline json matroid_to_json(const TwistedMatroid& m, std::size_t index) {
  json j = character_to_json(m.rho, index);
  j["rank"] = m.rank;
  j["rank_formula"] = twisted_rank_formula(m.spec, m.rho);
  json bs = json::array();
  for (std::size_t i = 0; i < m.bases.size(); ++i) bs.push_back(json{{"edges", m.bases[i]}, {"weight", cycint_to_json(m.weights[i])}});
  j["bases"] = bs;
  auto w = weight_polynomial(m);
  j["weight_polynomial"] = polynomial_to_json(w.polynomial);
  j["scalar_weight"] = cycint_to_json(w.scalar);
  return j;
}

inline json matroid_report(const CoverSpec& spec, std::optional<long> character) {
  json j = header("matroid");
  const auto all = characters(spec.group);
  json list = json::array();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (character && static_cast<long>(k) != *character) continue;
    if (!character && all[k].is_trivial()) continue;
    list.push_back(matroid_to_json(bases(spec, character_at(spec.group, all, static_cast<long>(k))), k));
  }
  if (character) character_at(spec.group, all, *character);
  j["characters"] = list;
  return j;
}

inline json census_to_json(const std::vector<BigInt>& counts) {
  json t = json::object();
  for (std::size_t m = 0; m < counts.size(); ++m) t[std::to_string(m + 1)] = bigint_to_json(counts[m]);
  return t;
}

inline json zeta_report(const CoverSpec& spec, const Lengths& lengths, std::optional<int> max_length) {
  const Graph& g = spec.base;
  json j = header("zeta");
  j["metric_zeta_reciprocal"] = univariate_to_json(metric_zeta_reciprocal(g, lengths));
  const ZPoly ihara = ihara_zeta_reciprocal(g);
  j["ihara_zeta_reciprocal"] = univariate_to_json(ihara);
  j["two_term_equals_three_term_at_unit_lengths"] = metric_zeta_reciprocal(g) == ihara;
  if (genus(g) >= 2) {
    auto t = taylor_leading_zeta(g, lengths);
    j["taylor_at_1"] = json{{"order", t.order},
                            {"coefficient", bigint_to_json(t.coefficient)},
                            {"expected_order", t.expected_order},
                            {"expected_coefficient", bigint_to_json(t.expected_coefficient)},
                            {"holds", t.holds()}};
  } else {
    j["taylor_at_1"] = json{{"skipped", "the leading coefficient vanishes below genus 2"}};
  }
  if (max_length) j["census"] = census_to_json(closed_path_census(g, *max_length));
  return j;
}

inline json lfunction_report(const CoverSpec& spec, std::optional<long> character, const Lengths& lengths) {
  json j = header("lfunction");
  const auto all = characters(spec.group);
  json list = json::array();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (character && static_cast<long>(k) != *character) continue;
    const Character& rho = all[k];
    json c = character_to_json(rho, k);
    const LPoly two = metric_L_reciprocal(spec, rho, lengths);
    const LPoly three = artin_L_reciprocal_threeterm(spec, rho);
    c["metric_L_reciprocal"] = univariate_to_json(two);
    c["artin_L_reciprocal_threeterm"] = univariate_to_json(three);
    c["two_term_equals_three_term_at_unit_lengths"] = metric_L_reciprocal(spec, rho) == three;
    if (!rho.is_trivial()) {
      const CycInt det = twisted_laplacian_det(spec, rho);
      const CycInt scalar = weight_polynomial(spec, rho).scalar;
      c["twisted_laplacian_det"] = cycint_to_json(det);
      c["scalar_weight"] = cycint_to_json(scalar);
      c["det_equals_scalar_weight"] = det == scalar;
      if (genus(spec.base) >= 1) {
        auto t = taylor_leading_L(spec, rho, lengths);
        c["taylor_at_1"] = json{{"order", t.order},
                                {"coefficient", cycint_to_json(t.coefficient)},
                                {"expected_order", t.expected_order},
                                {"expected_coefficient", cycint_to_json(t.expected_coefficient)},
                                {"holds", t.holds()}};
      } else {
        c["taylor_at_1"] = json{{"skipped", "the base graph is a tree"}};
      }
    }
    list.push_back(c);
  }
  if (character) character_at(spec.group, all, *character);
  j["characters"] = list;
  return j;
}

inline json resolve_report(const CoverSpec& spec) {
  auto r = free_resolution(spec);
  json j = header("resolve");
  j["added_loops"] = r.added;
  j["spec"] = spec_to_json(r.spec);
  return j;
}

inline json verification_to_json(const VerificationReport& r) {
  json j = header("verify");
  j["group"] = r.spec.group.to_string();
  j["base"] = json{{"tree_count", bigint_to_json(r.base_tree_count)}, {"jacobian_polynomial", polynomial_to_json(r.base_polynomial)}};
  json cs = json::array();
  const auto all = characters(r.spec.group);
  for (const auto& c : r.characters) {
    const std::size_t index = static_cast<std::size_t>(std::find(all.begin(), all.end(), c.rho) - all.begin());
    json x = character_to_json(c.rho, index);
    x["rank"] = c.rank;
    x["basis_count"] = c.basis_count;
    x["weight_polynomial"] = polynomial_to_json(c.weights.polynomial);
    x["scalar_weight"] = cycint_to_json(c.weights.scalar);
    cs.push_back(x);
  }
  j["characters"] = cs;
  j["prefactor"] = rational_to_json(r.prefactor);
  j["rhs_integral"] = r.rhs_integral;
  j["rhs"] = r.rhs_integral ? polynomial_to_json(r.rhs) : json(nullptr);
  j["lhs"] = polynomial_to_json(r.lhs);
  j["equal"] = r.equal;
  j["tree_count"] = json{{"cover", bigint_to_json(r.cover_tree_count)},
                         {"theorem", bigint_to_json(r.theorem_tree_count)},
                         {"equal", r.counts_equal}};
  return j;
}

namespace detail {

inline bool is_polynomial_terms(const json& v) {
  return v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("coeff") && v[0].contains("exps");
}

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("conductor")) {
    if (v["conductor"] == 1) return v["coefficients"][0].dump();
    std::string exact = "[";
    for (std::size_t i = 0; i < v["coefficients"].size(); ++i) {
      if (i) exact += ",";
      exact += v["coefficients"][i].dump();
    }
    exact += "]_" + v["conductor"].dump();
    std::string d = v["decimal"].get<std::string>();
    if (v.contains("decimal_imag")) d += " + " + v["decimal_imag"].get<std::string>() + "i";
    return d + " " + exact;
  }
  return v.dump();
}

inline std::string polynomial_text(const json& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    std::string c = scalar_text(terms[i]["coeff"]);
    if (terms[i]["coeff"].is_object()) c = "(" + c + ")";
    std::string m;
    for (const auto& [var, e] : terms[i]["exps"].items()) {
      if (!m.empty()) m += "*";
      m += var;
      if (e.get<long>() != 1) m += "^" + e.dump();
    }
    if (m.empty()) {
      out += c;
    } else {
      out += (c == "1" ? "" : c + "*") + m;
    }
  }
  return out.empty() ? "0" : out;
}

inline void render_text(const json& v, const std::string& indent, std::ostream& os) {
  for (const auto& [key, val] : v.items()) {
    if (is_polynomial_terms(val)) {
      os << indent << key << ": " << polynomial_text(val) << "\n";
    } else if (val.is_object() && !val.contains("conductor")) {
      os << indent << key << ":\n";
      render_text(val, indent + "  ", os);
    } else if (val.is_array() && !val.empty() && val[0].is_object() && !val[0].contains("conductor")) {
      os << indent << key << ":\n";
      const std::string inner = indent + "    ";
      for (const auto& item : val) {
        std::ostringstream sub;
        render_text(item, inner, sub);
        std::string text = sub.str();
        if (text.compare(0, inner.size(), inner) == 0) text.replace(0, inner.size(), indent + "  - ");
        os << text;
      }
    } else if (val.is_array()) {
      os << indent << key << ": [";
      for (std::size_t i = 0; i < val.size(); ++i) os << (i ? ", " : "") << scalar_text(val[i]);
      os << "]\n";
    } else {
      os << indent << key << ": " << scalar_text(val) << "\n";
    }
  }
}

}  // namespace detail

inline std::string to_text(const json& report) {
  std::ostringstream os;
  detail::render_text(report, "", os);
  return os.str();
}

}  // namespace galois_trees
