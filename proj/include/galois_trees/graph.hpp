#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois_trees/bigint.hpp"
#include "galois_trees/error.hpp"
#include "galois_trees/matrix.hpp"

namespace galois_trees {

struct EdgeDescription {
  std::string id;
  std::string src;
  std::string tgt;

  bool operator==(const EdgeDescription&) const = default;
};

// Sorted list of edge ids.
using EdgeSubset = std::vector<std::string>;

// Serre graph. Edge i (in id order) owns half-edges 2i, rooted at its source,
// and 2i+1, rooted at its target; the involution is h -> h ^ 1. The stored
// src/tgt pair is the canonical orientation.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertex_ids, std::vector<EdgeDescription> edges)
      : vertices_(std::move(vertex_ids)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      if (vertices_[i] == vertices_[i - 1]) throw Error("duplicate vertex id " + vertices_[i]);
    }
    std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].id == edges_[i - 1].id) throw Error("duplicate edge id " + edges_[i].id);
    }
    ends_.reserve(2 * edges_.size());
    incident_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      std::size_t s = find_vertex(e.src);
      std::size_t t = find_vertex(e.tgt);
      if (s == npos) throw Error("edge " + e.id + " has unknown endpoint " + e.src);
      if (t == npos) throw Error("edge " + e.id + " has unknown endpoint " + e.tgt);
      ends_.push_back(s);
      ends_.push_back(t);
      incident_[s].push_back(2 * i);
      incident_[t].push_back(2 * i + 1);
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgeDescription>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_half_edges() const { return ends_.size(); }

  std::size_t find_vertex(const std::string& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    return it != vertices_.end() && *it == v ? static_cast<std::size_t>(it - vertices_.begin()) : npos;
  }

  std::size_t find_edge(const std::string& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const EdgeDescription& d, const std::string& id) { return d.id < id; });
    return it != edges_.end() && it->id == e ? static_cast<std::size_t>(it - edges_.begin()) : npos;
  }

  std::size_t vertex_index(const std::string& v) const {
    std::size_t k = find_vertex(v);
    if (k == npos) throw Error("unknown vertex " + v);
    return k;
  }

  std::size_t edge_index(const std::string& e) const {
    std::size_t k = find_edge(e);
    if (k == npos) throw Error("unknown edge " + e);
    return k;
  }

  bool has_vertex(const std::string& v) const { return find_vertex(v) != npos; }
  bool has_edge(const std::string& e) const { return find_edge(e) != npos; }

  static std::size_t involution(std::size_t h) { return h ^ 1; }
  std::size_t root(std::size_t h) const { return ends_[h]; }
  std::string half_edge_id(std::size_t h) const { return edges_[h / 2].id + (h % 2 ? "/t" : "/s"); }

  std::size_t src(std::size_t e) const { return ends_[2 * e]; }
  std::size_t tgt(std::size_t e) const { return ends_[2 * e + 1]; }
  bool is_loop(std::size_t e) const { return src(e) == tgt(e); }

  // Half-edges rooted at vertex v.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  std::size_t valency(std::size_t v) const { return incident_[v].size(); }

  bool operator==(const Graph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeDescription> edges_;
  std::vector<std::size_t> ends_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline Graph build_graph(std::vector<std::string> vertex_ids, std::vector<EdgeDescription> edges) {
  return Graph(std::move(vertex_ids), std::move(edges));
}

// Sorts and validates a list of edge ids against g.
inline EdgeSubset make_subset(const Graph& g, std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const auto& e : ids) g.edge_index(e);
  return ids;
}

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace detail

// Component label per vertex (labels 0.. in order of first vertex) using the
// edges whose mask entry is set.
inline std::vector<std::size_t> component_labels(const Graph& g, const std::vector<char>& edge_mask,
                                                 std::size_t* count = nullptr) {
  detail::DisjointSets ds(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (edge_mask[e]) ds.unite(g.src(e), g.tgt(e));
  }
  std::vector<std::size_t> label(g.num_vertices(), Graph::npos);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::size_t r = ds.find(v);
    if (label[r] == Graph::npos) label[r] = next++;
    label[v] = label[r];
  }
  if (count) *count = next;
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  std::size_t count = 0;
  component_labels(g, std::vector<char>(g.num_edges(), 1), &count);
  return count == 1;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error("graph is not connected");
}

inline long genus(const Graph& g) {
  require_connected(g);
  return static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) + 1;
}

struct Component {
  std::vector<std::string> vertices;
  EdgeSubset edges;
  Graph graph;
};

inline Graph induced_graph(const Graph& g, const std::vector<std::string>& vertices, const EdgeSubset& edges) {
  std::vector<EdgeDescription> es;
  for (const auto& id : edges) es.push_back(g.edges()[g.edge_index(id)]);
  return Graph(vertices, std::move(es));
}

// Components ordered by their smallest vertex id.
inline std::vector<Component> connected_components(const Graph& g) {
  std::size_t count = 0;
  auto label = component_labels(g, std::vector<char>(g.num_edges(), 1), &count);
  std::vector<Component> out(count);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out[label[v]].vertices.push_back(g.vertices()[v]);
  for (std::size_t e = 0; e < g.num_edges(); ++e) out[label[g.src(e)]].edges.push_back(g.edges()[e].id);
  for (auto& c : out) c.graph = induced_graph(g, c.vertices, c.edges);
  return out;
}

// X minus the edges of F, same vertex set.
inline Graph remove_edges(const Graph& g, const EdgeSubset& f) {
  std::set<std::string> drop(f.begin(), f.end());
  std::vector<EdgeDescription> es;
  for (const auto& e : g.edges()) {
    if (!drop.count(e.id)) es.push_back(e);
  }
  for (const auto& id : f) g.edge_index(id);
  return Graph(g.vertices(), std::move(es));
}

struct Contraction {
  Graph graph;
  std::map<std::string, std::string> vertex_projection;
};

// Each component of X[F] becomes one vertex, named by joining its sorted
// member ids with '+'; surviving edges keep their ids.
inline Contraction contract(const Graph& g, const EdgeSubset& f) {
  std::vector<char> mask(g.num_edges(), 0);
  for (const auto& id : f) mask[g.edge_index(id)] = 1;
  std::size_t count = 0;
  auto label = component_labels(g, mask, &count);
  std::vector<std::string> names(count);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto& n = names[label[v]];
    n += n.empty() ? g.vertices()[v] : "+" + g.vertices()[v];
  }
  Contraction c;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) c.vertex_projection[g.vertices()[v]] = names[label[v]];
  std::vector<EdgeDescription> es;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (mask[e]) continue;
    es.push_back({g.edges()[e].id, names[label[g.src(e)]], names[label[g.tgt(e)]]});
  }
  c.graph = Graph(names, std::move(es));
  return c;
}

// Visits every spanning tree in lexicographic order of sorted edge-id lists.
// The callback receives edge indices; returning false stops the walk.
inline void for_each_spanning_tree(const Graph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<char> state(m, 1);  // 1 available, 0 excluded
  std::vector<std::size_t> chosen;
  bool stop = false;

  auto connected_without = [&](std::size_t skip) {
    std::vector<char> mask = state;
    mask[skip] = 0;
    std::size_t count = 0;
    component_labels(g, mask, &count);
    return count == 1;
  };

  std::function<void(std::size_t, detail::DisjointSets&)> rec = [&](std::size_t e, detail::DisjointSets& ds) {
    if (stop) return;
    if (chosen.size() == n - 1) {
      if (!visit(chosen)) stop = true;
      return;
    }
    if (e == m) return;
    if (m - e < n - 1 - chosen.size()) return;
    // include first
    if (!g.is_loop(e) && ds.find(g.src(e)) != ds.find(g.tgt(e))) {
      detail::DisjointSets next = ds;
      next.unite(g.src(e), g.tgt(e));
      chosen.push_back(e);
      rec(e + 1, next);
      chosen.pop_back();
    }
    if (stop) return;
    if (g.is_loop(e) || connected_without(e)) {
      state[e] = 0;
      rec(e + 1, ds);
      state[e] = 1;
    }
  };
  detail::DisjointSets ds(n);
  rec(0, ds);
}

inline std::vector<EdgeSubset> spanning_trees(const Graph& g) {
  std::vector<EdgeSubset> out;
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>& t) {
    EdgeSubset s;
    for (auto e : t) s.push_back(g.edges()[e].id);
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

// Q (valency, loops twice) and A (edge multiplicities, 2 per loop on the diagonal).
inline std::pair<Matrix<BigInt>, Matrix<BigInt>> valency_adjacency(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Matrix<BigInt> q(n, n);
  Matrix<BigInt> a(n, n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const std::size_t s = g.src(e);
    const std::size_t t = g.tgt(e);
    q(s, s) += 1;
    q(t, t) += 1;
    if (s == t) {
      a(s, s) += 2;
    } else {
      a(s, t) += 1;
      a(t, s) += 1;
    }
  }
  return {std::move(q), std::move(a)};
}

// Replaces edge e by a chain of n_e edges "e:0", ..., "e:(n_e-1)" through new
// vertices "e:1", ..., "e:(n_e-1)". Edges with n_e = 1 are kept as they are.
inline Graph subdivide(const Graph& g, const std::map<std::string, long>& n) {
  for (const auto& [id, k] : n) {
    g.edge_index(id);
    if (k < 1) throw Error("subdivision count for " + id + " must be positive");
  }
  std::vector<std::string> vs = g.vertices();
  std::vector<EdgeDescription> es;
  for (const auto& e : g.edges()) {
    auto it = n.find(e.id);
    const long k = it == n.end() ? 1 : it->second;
    if (k == 1) {
      es.push_back(e);
      continue;
    }
    std::string prev = e.src;
    for (long i = 0; i < k; ++i) {
      std::string next = i + 1 == k ? e.tgt : e.id + ":" + std::to_string(i + 1);
      if (i + 1 < k) vs.push_back(next);
      es.push_back({e.id + ":" + std::to_string(i), prev, next});
      prev = next;
    }
  }
  return Graph(std::move(vs), std::move(es));
}

}  // namespace galois_trees
