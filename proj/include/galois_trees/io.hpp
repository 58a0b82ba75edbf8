#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "galois_trees/abelian_group.hpp"
#include "galois_trees/cover.hpp"
#include "galois_trees/cyclotomic.hpp"
#include "galois_trees/polynomial.hpp"

namespace galois_trees {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "galois-trees/1";

namespace detail {

inline const json& require_key(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

inline std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(where + ": expected a string");
  return v.get<std::string>();
}

inline std::vector<long long> require_int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw Error(where + ": expected a list of integers");
  std::vector<long long> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) throw Error(where + "[" + std::to_string(i) + "]: expected an integer");
    out.push_back(v[i].get<long long>());
  }
  return out;
}

inline GroupElement parse_element(const AbelianGroup& g, const json& v, const std::string& where) {
  auto values = require_int_list(v, where);
  if (values.size() != g.rank()) {
    throw Error(where + ": element has " + std::to_string(values.size()) + " components, expected " +
                std::to_string(g.rank()));
  }
  return g.element(values);
}

}  // namespace detail

inline json bigint_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

inline std::string decimal(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

inline json cycint_to_json(const CycInt& z) {
  json j;
  j["conductor"] = z.conductor();
  json c = json::array();
  for (const auto& x : z.coefficients()) c.push_back(bigint_to_json(x));
  j["coefficients"] = c;
  const auto v = z.to_complex();
  const long double scale = std::max<long double>(1, std::abs(v));
  j["decimal"] = decimal(v.real());
  if (std::abs(v.imag()) > 1e-15L * scale) j["decimal_imag"] = decimal(v.imag());
  return j;
}

inline json coefficient_to_json(const BigInt& c) { return bigint_to_json(c); }
inline json coefficient_to_json(const CycInt& c) {
  if (c.is_integer()) return bigint_to_json(c.integer_value());
  return cycint_to_json(c);
}

// List of {"coeff", "exps"} in the polynomial's canonical (lex) term order.
template <class C>
json polynomial_to_json(const MultiPoly<C>& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0) exps[p.variables()[i]] = mono[i];
    }
    terms.push_back(json{{"coeff", coefficient_to_json(c)}, {"exps", exps}});
  }
  return terms;
}

template <class C>
json univariate_to_json(const UniPoly<C>& p) {
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(coefficient_to_json(x));
  return c;
}

inline CoverSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error("spec: expected a JSON object");
  std::vector<std::string> vertices;
  const json& vs = detail::require_key(doc, "vertices", "spec");
  if (!vs.is_array()) throw Error("vertices: expected a list");
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(detail::require_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  std::vector<EdgeDescription> edges;
  const json& es = detail::require_key(doc, "edges", "spec");
  if (!es.is_array()) throw Error("edges: expected a list");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    edges.push_back({detail::require_string(detail::require_key(es[i], "id", where), where + ".id"),
                     detail::require_string(detail::require_key(es[i], "src", where), where + ".src"),
                     detail::require_string(detail::require_key(es[i], "tgt", where), where + ".tgt")});
  }
  const json& grp = detail::require_key(doc, "group", "spec");
  auto orders = detail::require_int_list(detail::require_key(grp, "cyclic", "group"), "group.cyclic");
  std::vector<int> cyclic;
  for (auto n : orders) {
    if (n < 1) throw Error("group.cyclic: orders must be positive");
    cyclic.push_back(static_cast<int>(n));
  }
  AbelianGroup group(cyclic);
  Graph base(vertices, edges);

  std::map<std::string, std::vector<GroupElement>> dil;
  if (doc.contains("dilation")) {
    const json& d = doc.at("dilation");
    if (!d.is_object()) throw Error("dilation: expected an object");
    for (const auto& [v, gens] : d.items()) {
      const std::string where = "dilation." + v;
      if (!base.has_vertex(v)) throw Error(where + ": unknown vertex " + v);
      if (!gens.is_array()) throw Error(where + ": expected a list of generators");
      auto& list = dil[v];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        list.push_back(detail::parse_element(group, gens[i], where + "[" + std::to_string(i) + "]"));
      }
    }
  }
  std::map<std::string, GroupElement> volt;
  if (doc.contains("voltage")) {
    const json& v = doc.at("voltage");
    if (!v.is_object()) throw Error("voltage: expected an object");
    for (const auto& [e, val] : v.items()) {
      const std::string where = "voltage." + e;
      if (!base.has_edge(e)) throw Error(where + ": unknown edge " + e);
      volt[e] = detail::parse_element(group, val, where);
    }
  }
  return make_spec(std::move(base), std::move(group), dil, volt);
}

inline CoverSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

inline json element_to_json(const GroupElement& g) {
  json a = json::array();
  for (int r : g.residues) a.push_back(r);
  return a;
}

inline json spec_to_json(const CoverSpec& spec) {
  json doc;
  doc["vertices"] = spec.base.vertices();
  json es = json::array();
  for (const auto& e : spec.base.edges()) es.push_back(json{{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  doc["edges"] = es;
  doc["group"] = json{{"cyclic", spec.group.cyclic_orders()}};
  json dil = json::object();
  for (std::size_t v = 0; v < spec.base.num_vertices(); ++v) {
    if (spec.dilation[v].is_trivial()) continue;
    json gens = json::array();
    for (const auto& g : spec.dilation[v].canonical_generators()) gens.push_back(element_to_json(g));
    dil[spec.base.vertices()[v]] = gens;
  }
  doc["dilation"] = dil;
  json volt = json::object();
  for (std::size_t e = 0; e < spec.base.num_edges(); ++e) volt[spec.base.edges()[e].id] = element_to_json(spec.voltage[e]);
  doc["voltage"] = volt;
  return doc;
}

inline std::string serialize_spec(const CoverSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

// An explicit graph whose edges carry base-edge labels under the key "over".
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

inline LabeledGraph parse_labeled_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  std::vector<std::string> vertices;
  const json& vs = detail::require_key(doc, "vertices", "graph");
  if (!vs.is_array()) throw Error("vertices: expected a list");
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(detail::require_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  const json& es = detail::require_key(doc, "edges", "graph");
  if (!es.is_array()) throw Error("edges: expected a list");
  std::vector<EdgeDescription> edges;
  std::map<std::string, std::string> over;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    EdgeDescription e{detail::require_string(detail::require_key(es[i], "id", where), where + ".id"),
                      detail::require_string(detail::require_key(es[i], "src", where), where + ".src"),
                      detail::require_string(detail::require_key(es[i], "tgt", where), where + ".tgt")};
    over[e.id] = detail::require_string(detail::require_key(es[i], "over", where), where + ".over");
    edges.push_back(e);
  }
  LabeledGraph out{Graph(vertices, edges), {}};
  for (const auto& e : out.graph.edges()) out.labels.push_back(over.at(e.id));
  return out;
}

}  // namespace galois_trees
