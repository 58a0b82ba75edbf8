#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "galois_trees/abelian_group.hpp"
#include "galois_trees/error.hpp"
#include "galois_trees/graph.hpp"

namespace galois_trees {

// Base graph, group, dilation subgroup per base vertex and a voltage per base
// edge read along the canonical orientation src -> tgt. Both vectors follow the
// base graph's (sorted) vertex and edge order.
struct CoverSpec {
  Graph base;
  AbelianGroup group;
  std::vector<Subgroup> dilation;
  std::vector<GroupElement> voltage;

  const Subgroup& dilation_at(const std::string& v) const { return dilation.at(base.vertex_index(v)); }
  const GroupElement& voltage_of(const std::string& e) const { return voltage.at(base.edge_index(e)); }

  bool is_free() const {
    return std::all_of(dilation.begin(), dilation.end(), [](const Subgroup& d) { return d.is_trivial(); });
  }

  // D(s(e)) + D(t(e))
  Subgroup edge_subgroup(std::size_t e) const {
    return subgroup_sum(dilation[base.src(e)], dilation[base.tgt(e)]);
  }
};

// Absent vertices get the trivial subgroup and absent edges the zero voltage.
inline CoverSpec make_spec(Graph base, AbelianGroup group,
                           const std::map<std::string, std::vector<GroupElement>>& dilation_generators,
                           const std::map<std::string, GroupElement>& voltage) {
  CoverSpec s;
  s.base = std::move(base);
  s.group = std::move(group);
  s.dilation.assign(s.base.num_vertices(), Subgroup::trivial(s.group));
  s.voltage.assign(s.base.num_edges(), s.group.identity());
  for (const auto& [v, gens] : dilation_generators) {
    std::size_t k = s.base.find_vertex(v);
    if (k == Graph::npos) throw Error("dilation names unknown vertex " + v);
    for (const auto& g : gens) {
      if (!s.group.contains(g)) throw Error("dilation generator at " + v + " is not an element of " + s.group.to_string());
    }
    s.dilation[k] = subgroup_from_generators(s.group, gens);
  }
  for (const auto& [e, g] : voltage) {
    std::size_t k = s.base.find_edge(e);
    if (k == Graph::npos) throw Error("voltage names unknown edge " + e);
    if (!s.group.contains(g)) throw Error("voltage on " + e + " is not an element of " + s.group.to_string());
    s.voltage[k] = g;
  }
  return s;
}

struct NormalizedSpec {
  CoverSpec spec;
  std::vector<std::string> reduced_edges;
};

// Checks consistency and replaces each voltage by the lexicographically
// smallest element of its coset modulo D(s(e)) + D(t(e)).
inline NormalizedSpec validate_spec(const CoverSpec& spec) {
  if (spec.dilation.size() != spec.base.num_vertices()) throw Error("dilation datum does not match the vertex set");
  if (spec.voltage.size() != spec.base.num_edges()) throw Error("voltage assignment does not match the edge set");
  for (std::size_t v = 0; v < spec.dilation.size(); ++v) {
    if (!(spec.dilation[v].parent() == spec.group)) {
      throw Error("dilation subgroup at " + spec.base.vertices()[v] + " has a different parent group");
    }
  }
  NormalizedSpec out{spec, {}};
  for (std::size_t e = 0; e < spec.voltage.size(); ++e) {
    if (!spec.group.contains(spec.voltage[e])) {
      throw Error("voltage on " + spec.base.edges()[e].id + " is not an element of " + spec.group.to_string());
    }
    GroupElement r = spec.edge_subgroup(e).coset_representative(spec.voltage[e]);
    if (!(r == spec.voltage[e])) {
      out.spec.voltage[e] = r;
      out.reduced_edges.push_back(spec.base.edges()[e].id);
    }
  }
  return out;
}

// A harmonic G-cover with explicit projection and action tables. Action tables
// are indexed by the group's element index.
struct Cover {
  Graph base;
  Graph total;
  AbelianGroup group;
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> edge_projection;
  std::vector<std::size_t> local_degree;
  std::vector<std::vector<std::size_t>> vertex_action;
  std::vector<std::vector<std::size_t>> edge_action;

  std::vector<std::size_t> vertex_fiber(std::size_t v) const {
    std::vector<std::size_t> f;
    for (std::size_t w = 0; w < vertex_projection.size(); ++w) {
      if (vertex_projection[w] == v) f.push_back(w);
    }
    return f;
  }

  std::vector<std::size_t> edge_fiber(std::size_t e) const {
    std::vector<std::size_t> f;
    for (std::size_t d = 0; d < edge_projection.size(); ++d) {
      if (edge_projection[d] == e) f.push_back(d);
    }
    return f;
  }
};

inline std::string vertex_lift_id(const std::string& v, const GroupElement& rep) { return v + "@" + to_string(rep); }
inline std::string edge_lift_id(const std::string& e, const GroupElement& g) { return e + "@" + to_string(g); }

// Vertex fibers are the cosets G/D(v) and edge fibers copies of G:
// s(e_g) = s(e)_[g], t(e_g) = t(e)_[g + eta_e], and h acts by translation.
inline Cover build_cover(const CoverSpec& input) {
  const CoverSpec spec = validate_spec(input).spec;
  const Graph& x = spec.base;
  const AbelianGroup& g = spec.group;
  const auto elems = g.elements();

  std::vector<std::string> vids;
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    std::set<GroupElement> reps;
    for (const auto& a : elems) reps.insert(spec.dilation[v].coset_representative(a));
    for (const auto& r : reps) vids.push_back(vertex_lift_id(x.vertices()[v], r));
  }
  std::vector<EdgeDescription> eds;
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    const auto& d = x.edges()[e];
    for (const auto& a : elems) {
      GroupElement s = spec.dilation[x.src(e)].coset_representative(a);
      GroupElement t = spec.dilation[x.tgt(e)].coset_representative(g.add(a, spec.voltage[e]));
      eds.push_back({edge_lift_id(d.id, a), vertex_lift_id(d.src, s), vertex_lift_id(d.tgt, t)});
    }
  }

  Cover c;
  c.base = x;
  c.group = g;
  c.total = Graph(std::move(vids), std::move(eds));
  const Graph& y = c.total;

  // recover (base vertex, coset rep) and (base edge, element) per total index
  std::vector<GroupElement> vrep(y.num_vertices());
  c.vertex_projection.resize(y.num_vertices());
  c.local_degree.resize(y.num_vertices());
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    for (const auto& a : elems) {
      GroupElement r = spec.dilation[v].coset_representative(a);
      std::size_t w = y.vertex_index(vertex_lift_id(x.vertices()[v], r));
      c.vertex_projection[w] = v;
      c.local_degree[w] = spec.dilation[v].order();
      vrep[w] = r;
    }
  }
  c.edge_projection.resize(y.num_edges());
  std::vector<GroupElement> elabel(y.num_edges());
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    for (const auto& a : elems) {
      std::size_t d = y.edge_index(edge_lift_id(x.edges()[e].id, a));
      c.edge_projection[d] = e;
      elabel[d] = a;
    }
  }
  c.vertex_action.assign(elems.size(), std::vector<std::size_t>(y.num_vertices()));
  c.edge_action.assign(elems.size(), std::vector<std::size_t>(y.num_edges()));
  for (std::size_t h = 0; h < elems.size(); ++h) {
    for (std::size_t w = 0; w < y.num_vertices(); ++w) {
      std::size_t v = c.vertex_projection[w];
      GroupElement r = spec.dilation[v].coset_representative(g.add(vrep[w], elems[h]));
      c.vertex_action[h][w] = y.vertex_index(vertex_lift_id(x.vertices()[v], r));
    }
    for (std::size_t d = 0; d < y.num_edges(); ++d) {
      c.edge_action[h][d] = y.edge_index(edge_lift_id(x.edges()[c.edge_projection[d]].id, g.add(elabel[d], elems[h])));
    }
  }
  return c;
}

inline bool is_connected_cover(const Cover& c) { return is_connected(c.total); }

// Lists every violated cover axiom; an empty result means the structure is a
// harmonic G-cover with local degrees as recorded.
inline std::vector<std::string> check_cover(const Cover& c) {
  std::vector<std::string> bad;
  const Graph& x = c.base;
  const Graph& y = c.total;
  const std::size_t n = c.group.order();
  for (std::size_t d = 0; d < y.num_edges(); ++d) {
    const std::size_t e = c.edge_projection[d];
    if (c.vertex_projection[y.src(d)] != x.src(e) || c.vertex_projection[y.tgt(d)] != x.tgt(e)) {
      bad.push_back("projection is not a morphism at edge " + y.edges()[d].id);
    }
  }
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    if (c.edge_fiber(e).size() != n) bad.push_back("edge fiber over " + x.edges()[e].id + " has wrong size");
  }
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    std::size_t total = 0;
    for (auto w : c.vertex_fiber(v)) total += c.local_degree[w];
    if (total != n) bad.push_back("local degrees over " + x.vertices()[v] + " do not sum to |G|");
  }
  // local balancing: each base half-edge at p(w) has local_degree(w) preimages at w
  for (std::size_t w = 0; w < y.num_vertices(); ++w) {
    std::map<std::size_t, std::size_t> count;
    for (auto h : y.incident(w)) ++count[2 * c.edge_projection[h / 2] + h % 2];
    for (auto h : x.incident(c.vertex_projection[w])) {
      if (count[h] != c.local_degree[w]) {
        bad.push_back("local balancing fails at " + y.vertices()[w] + " over " + x.half_edge_id(h));
      }
    }
  }
  if (c.vertex_action.size() != n || c.edge_action.size() != n) {
    bad.push_back("action tables do not cover the group");
    return bad;
  }
  for (std::size_t h = 0; h < n; ++h) {
    const auto& va = c.vertex_action[h];
    const auto& ea = c.edge_action[h];
    if (std::set<std::size_t>(va.begin(), va.end()).size() != va.size() ||
        std::set<std::size_t>(ea.begin(), ea.end()).size() != ea.size()) {
      bad.push_back("group element " + to_string(c.group.element_at(h)) + " does not act bijectively");
      continue;
    }
    for (std::size_t d = 0; d < y.num_edges(); ++d) {
      if (y.src(ea[d]) != va[y.src(d)] || y.tgt(ea[d]) != va[y.tgt(d)]) {
        bad.push_back("action is not a graph automorphism at " + y.edges()[d].id);
        break;
      }
      if (c.edge_projection[ea[d]] != c.edge_projection[d]) {
        bad.push_back("action does not commute with projection at " + y.edges()[d].id);
        break;
      }
    }
    for (std::size_t w = 0; w < y.num_vertices(); ++w) {
      if (c.vertex_projection[va[w]] != c.vertex_projection[w]) {
        bad.push_back("action does not commute with projection at " + y.vertices()[w]);
        break;
      }
    }
  }
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    auto fiber = c.vertex_fiber(v);
    if (fiber.empty()) continue;
    std::set<std::size_t> orbit;
    std::size_t stab = 0;
    for (std::size_t h = 0; h < n; ++h) {
      orbit.insert(c.vertex_action[h][fiber[0]]);
      stab += c.vertex_action[h][fiber[0]] == fiber[0];
    }
    if (orbit.size() != fiber.size()) bad.push_back("action is not transitive on the fiber over " + x.vertices()[v]);
    if (stab != c.local_degree[fiber[0]]) bad.push_back("stabilizer order differs from local degree over " + x.vertices()[v]);
  }
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    auto fiber = c.edge_fiber(e);
    if (fiber.empty()) continue;
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < n; ++h) orbit.insert(c.edge_action[h][fiber[0]]);
    if (orbit.size() != n || fiber.size() != n) {
      bad.push_back("action is not free and transitive on the fiber over " + x.edges()[e].id);
    }
  }
  return bad;
}

struct OrientedEdge {
  std::string id;
  bool reversed = false;
};

// Oriented sum of voltages along a path, with eta(reverse e) = -eta(e).
inline GroupElement frobenius(const CoverSpec& spec, const std::vector<OrientedEdge>& path) {
  GroupElement acc = spec.group.identity();
  std::size_t at = Graph::npos;
  for (const auto& step : path) {
    const std::size_t e = spec.base.edge_index(step.id);
    const std::size_t from = step.reversed ? spec.base.tgt(e) : spec.base.src(e);
    const std::size_t to = step.reversed ? spec.base.src(e) : spec.base.tgt(e);
    if (at != Graph::npos && at != from) throw Error("path is not composable at edge " + step.id);
    const GroupElement& eta = spec.voltage[e];
    acc = spec.group.add(acc, step.reversed ? spec.group.negate(eta) : eta);
    at = to;
  }
  return acc;
}

struct Resolution {
  CoverSpec spec;
  EdgeSubset added;
};

// Replaces each dilated vertex by one loop per canonical generator of D(v),
// carrying that generator as its voltage. Loops are named "~v.k".
inline Resolution free_resolution(const CoverSpec& input) {
  const CoverSpec spec = validate_spec(input).spec;
  std::vector<EdgeDescription> edges = spec.base.edges();
  std::map<std::string, GroupElement> volt;
  for (std::size_t e = 0; e < edges.size(); ++e) volt[edges[e].id] = spec.voltage[e];
  Resolution r;
  for (std::size_t v = 0; v < spec.base.num_vertices(); ++v) {
    const auto gens = spec.dilation[v].canonical_generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string& name = spec.base.vertices()[v];
      std::string id = "~" + name + "." + std::to_string(k);
      while (volt.count(id)) id = "~" + id;
      edges.push_back({id, name, name});
      volt[id] = gens[k];
      r.added.push_back(id);
    }
  }
  std::sort(r.added.begin(), r.added.end());
  r.spec = make_spec(Graph(spec.base.vertices(), std::move(edges)), spec.group, {}, volt);
  return r;
}

// D(v0) + <eta(e0)> for a loop e0 at v0.
inline Subgroup dilation_after_loop_contraction(const CoverSpec& spec, const std::string& loop) {
  const std::size_t e = spec.base.edge_index(loop);
  if (!spec.base.is_loop(e)) throw Error("edge " + loop + " is not a loop");
  return subgroup_sum(spec.dilation[spec.base.src(e)], subgroup_from_generators(spec.group, {spec.voltage[e]}));
}

// Contracts F in the base and its preimage in the total graph. The local
// degree of a contracted total vertex is the order of its stabilizer.
inline Cover contract_cover(const Cover& c, const EdgeSubset& f) {
  for (const auto& id : f) c.base.edge_index(id);
  EdgeSubset lifted;
  std::set<std::string> fs(f.begin(), f.end());
  for (std::size_t d = 0; d < c.total.num_edges(); ++d) {
    if (fs.count(c.base.edges()[c.edge_projection[d]].id)) lifted.push_back(c.total.edges()[d].id);
  }
  std::sort(lifted.begin(), lifted.end());
  Contraction xb = contract(c.base, make_subset(c.base, f));
  Contraction yb = contract(c.total, lifted);

  Cover out;
  out.base = xb.graph;
  out.total = yb.graph;
  out.group = c.group;
  const Graph& y = out.total;
  const std::size_t n = c.group.order();

  // representative old total vertex for each new total vertex
  std::vector<std::size_t> old_of(y.num_vertices(), Graph::npos);
  std::vector<std::size_t> new_of(c.total.num_vertices());
  for (std::size_t w = 0; w < c.total.num_vertices(); ++w) {
    new_of[w] = y.vertex_index(yb.vertex_projection.at(c.total.vertices()[w]));
    if (old_of[new_of[w]] == Graph::npos) old_of[new_of[w]] = w;
  }
  out.vertex_projection.resize(y.num_vertices());
  for (std::size_t w = 0; w < y.num_vertices(); ++w) {
    const std::string& base_old = c.base.vertices()[c.vertex_projection[old_of[w]]];
    out.vertex_projection[w] = out.base.vertex_index(xb.vertex_projection.at(base_old));
  }
  out.edge_projection.resize(y.num_edges());
  std::vector<std::size_t> old_edge(y.num_edges());
  for (std::size_t d = 0; d < y.num_edges(); ++d) {
    old_edge[d] = c.total.edge_index(y.edges()[d].id);
    out.edge_projection[d] = out.base.edge_index(c.base.edges()[c.edge_projection[old_edge[d]]].id);
  }
  out.vertex_action.assign(n, std::vector<std::size_t>(y.num_vertices()));
  out.edge_action.assign(n, std::vector<std::size_t>(y.num_edges()));
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t w = 0; w < y.num_vertices(); ++w) out.vertex_action[h][w] = new_of[c.vertex_action[h][old_of[w]]];
    for (std::size_t d = 0; d < y.num_edges(); ++d) {
      out.edge_action[h][d] = y.edge_index(c.total.edges()[c.edge_action[h][old_edge[d]]].id);
    }
  }
  out.local_degree.assign(y.num_vertices(), 0);
  for (std::size_t w = 0; w < y.num_vertices(); ++w) {
    for (std::size_t h = 0; h < n; ++h) out.local_degree[w] += out.vertex_action[h][w] == w;
  }
  return out;
}

}  // namespace galois_trees
