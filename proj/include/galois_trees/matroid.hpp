#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "galois_trees/abelian_group.hpp"
#include "galois_trees/cover.hpp"
#include "galois_trees/cyclotomic.hpp"
#include "galois_trees/graph.hpp"
#include "galois_trees/polynomial.hpp"

namespace galois_trees {

using CycPoly = MultiPoly<CycInt>;

struct TwistedMatroid {
  CoverSpec spec;
  Character rho;
  std::size_t rank = 0;
  std::vector<EdgeSubset> bases;
  std::vector<CycInt> weights;
};

struct CoverMatroid {
  CoverSpec spec;
  std::size_t rank = 0;
  std::vector<EdgeSubset> bases;
};

struct WeightReport {
  CycPoly polynomial;
  CycInt scalar;
};

namespace detail {

struct ComponentInfo {
  std::vector<std::size_t> vertices;
  std::size_t num_edges = 0;
  std::size_t dilated = 0;
  bool nontrivial_cycle = false;
  // Frobenius image of the first cycle closed by the search
  GroupElement cycle_image;
  bool has_cycle = false;

  long genus() const { return static_cast<long>(num_edges) - static_cast<long>(vertices.size()) + 1; }
  bool nontrivial() const { return dilated > 0 || nontrivial_cycle; }
};

// The cover pushed along a homomorphism psi: G -> H.
class PushedCover {
 public:
  PushedCover(const CoverSpec& spec, AbelianGroup target, std::function<GroupElement(const GroupElement&)> psi)
      : spec_(validate_spec(spec).spec), target_(std::move(target)) {
    for (const auto& d : spec_.dilation) {
      bool nontrivial = false;
      for (const auto& g : d.elements()) {
        if (!(psi(g) == target_.identity())) nontrivial = true;
      }
      dilated_.push_back(nontrivial);
    }
    for (const auto& eta : spec_.voltage) image_.push_back(psi(eta));
  }

  const CoverSpec& spec() const { return spec_; }
  const AbelianGroup& target() const { return target_; }
  bool dilated(std::size_t v) const { return dilated_[v]; }

  // Components of X minus the edges flagged in removed.
  std::vector<ComponentInfo> components(const std::vector<char>& removed) const {
    const Graph& x = spec_.base;
    const std::size_t n = x.num_vertices();
    std::vector<std::size_t> comp(n, Graph::npos);
    std::vector<GroupElement> phi(n, target_.identity());
    std::vector<char> tree_edge(x.num_edges(), 0);
    std::vector<ComponentInfo> out;
    for (std::size_t root = 0; root < n; ++root) {
      if (comp[root] != Graph::npos) continue;
      ComponentInfo info;
      const std::size_t id = out.size();
      comp[root] = id;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        info.vertices.push_back(u);
        if (dilated_[u]) ++info.dilated;
        for (auto h : x.incident(u)) {
          const std::size_t e = h / 2;
          if (removed[e] || x.is_loop(e)) continue;
          const std::size_t w = x.root(Graph::involution(h));
          if (comp[w] != Graph::npos) continue;
          comp[w] = id;
          tree_edge[e] = 1;
          // h leaves u; h even means u is the source of e
          phi[w] = h % 2 == 0 ? target_.add(phi[u], image_[e]) : target_.subtract(phi[u], image_[e]);
          stack.push_back(w);
        }
      }
      out.push_back(std::move(info));
    }
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
      if (removed[e]) continue;
      ComponentInfo& info = out[comp[x.src(e)]];
      ++info.num_edges;
      if (tree_edge[e]) continue;
      GroupElement frob = target_.subtract(target_.add(phi[x.src(e)], image_[e]), phi[x.tgt(e)]);
      if (!info.has_cycle) {
        info.has_cycle = true;
        info.cycle_image = frob;
      }
      if (!(frob == target_.identity())) info.nontrivial_cycle = true;
    }
    return out;
  }

  std::vector<char> mask(const EdgeSubset& f) const {
    std::vector<char> m(spec_.base.num_edges(), 0);
    for (const auto& id : f) m[spec_.base.edge_index(id)] = 1;
    return m;
  }

  bool independent(const std::vector<char>& removed) const {
    for (const auto& c : components(removed)) {
      if (!c.nontrivial()) return false;
    }
    return true;
  }

  std::size_t greedy_rank() const {
    std::vector<char> f(spec_.base.num_edges(), 0);
    std::size_t r = 0;
    for (std::size_t e = 0; e < f.size(); ++e) {
      f[e] = 1;
      if (independent(f)) {
        ++r;
      } else {
        f[e] = 0;
      }
    }
    return r;
  }

  // All independent sets of size r, in lexicographic order.
  std::vector<EdgeSubset> independent_sets_of_size(std::size_t r) const {
    const std::size_t m = spec_.base.num_edges();
    if (r > m) return {};
    auto scan = [this, m, r](std::size_t first) {
      std::vector<EdgeSubset> found;
      std::vector<std::size_t> idx(r);
      std::vector<char> f(m, 0);
      auto visit = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
        if (depth == r) {
          if (independent(f)) {
            EdgeSubset s;
            for (auto i : idx) s.push_back(spec_.base.edges()[i].id);
            found.push_back(std::move(s));
          }
          return;
        }
        for (std::size_t i = from; i + (r - depth) <= m; ++i) {
          idx[depth] = i;
          f[i] = 1;
          self(self, depth + 1, i + 1);
          f[i] = 0;
        }
      };
      if (r == 0) {
        visit(visit, 0, 0);
      } else {
        idx[0] = first;
        f[first] = 1;
        visit(visit, 1, first + 1);
      }
      return found;
    };
    if (r == 0) return scan(0);
    std::vector<std::future<std::vector<EdgeSubset>>> parts;
    const bool parallel = m >= 14;
    for (std::size_t first = 0; first + r <= m; ++first) {
      parts.push_back(std::async(parallel ? std::launch::async : std::launch::deferred, scan, first));
    }
    std::vector<EdgeSubset> all;
    for (auto& p : parts) {
      auto chunk = p.get();
      all.insert(all.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    return all;
  }

 private:
  CoverSpec spec_;
  AbelianGroup target_;
  std::vector<char> dilated_;
  std::vector<GroupElement> image_;
};

inline PushedCover push_through(const CoverSpec& spec, const Character& rho) {
  return PushedCover(spec, AbelianGroup({rho.conductor()}),
                     [rho](const GroupElement& g) { return GroupElement{{rho.value(g)}}; });
}

inline void require_connected_cover(const CoverSpec& spec) {
  if (!is_connected_cover(build_cover(spec))) throw Error("the cover is not connected");
}

inline void require_nontrivial(const Character& rho) {
  if (rho.is_trivial()) throw Error("character must be nontrivial");
}

}  // namespace detail

// Every component of X minus F carries a rho-nontrivial dilation or a cycle
// with rho-nontrivial Frobenius element.
inline bool is_independent(const CoverSpec& spec, const Character& rho, const EdgeSubset& f) {
  detail::require_connected_cover(spec);
  auto pushed = detail::push_through(spec, rho);
  return pushed.independent(pushed.mask(f));
}

inline std::size_t twisted_rank_formula(const CoverSpec& spec, const Character& rho) {
  long r = genus(spec.base) - 1;
  for (const auto& d : spec.dilation) {
    if (!character_kills(rho, d)) ++r;
  }
  return static_cast<std::size_t>(r);
}

inline CycInt basis_weight(const CoverSpec& spec, const Character& rho, const EdgeSubset& f) {
  detail::require_nontrivial(rho);
  auto pushed = detail::push_through(spec, rho);
  const auto comps = pushed.components(pushed.mask(f));
  CycInt w(1);
  for (const auto& c : comps) {
    if (c.dilated == 1 && c.genus() == 0) continue;
    if (c.dilated == 0 && c.genus() == 1 && c.nontrivial_cycle) {
      w = w * weight_of_root(rho.conductor(), c.cycle_image.residues[0]);
      continue;
    }
    throw Error("edge set is not a basis of the twisted matroid");
  }
  return w;
}

inline TwistedMatroid bases(const CoverSpec& spec, const Character& rho) {
  detail::require_nontrivial(rho);
  detail::require_connected_cover(spec);
  auto pushed = detail::push_through(spec, rho);
  TwistedMatroid m;
  m.spec = pushed.spec();
  m.rho = rho;
  m.rank = pushed.greedy_rank();
  m.bases = pushed.independent_sets_of_size(m.rank);
  for (const auto& b : m.bases) m.weights.push_back(basis_weight(m.spec, rho, b));
  return m;
}

inline WeightReport weight_polynomial(const TwistedMatroid& m) {
  std::vector<std::string> vars;
  for (const auto& e : m.spec.base.edges()) vars.push_back(e.id);
  WeightReport r{CycPoly(vars), CycInt(0)};
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    std::map<std::string, std::uint32_t> exps;
    for (const auto& id : m.bases[i]) exps[id] = 1;
    r.polynomial.add_term(exps, m.weights[i]);
    r.scalar = r.scalar + m.weights[i];
  }
  return r;
}

inline WeightReport weight_polynomial(const CoverSpec& spec, const Character& rho) {
  return weight_polynomial(bases(spec, rho));
}

// The untwisted matroid: voltages compared in G itself.
inline detail::PushedCover push_identity(const CoverSpec& spec) {
  return detail::PushedCover(spec, spec.group, [](const GroupElement& g) { return g; });
}

inline bool is_independent_untwisted(const CoverSpec& spec, const EdgeSubset& f) {
  auto pushed = push_identity(spec);
  if (!pushed.independent(pushed.mask({}))) throw Error("the cover is trivial");
  return pushed.independent(pushed.mask(f));
}

inline CoverMatroid untwisted_bases(const CoverSpec& spec) {
  auto pushed = push_identity(spec);
  if (!pushed.independent(pushed.mask({}))) throw Error("the cover is trivial");
  CoverMatroid m;
  m.spec = pushed.spec();
  m.rank = pushed.greedy_rank();
  m.bases = pushed.independent_sets_of_size(m.rank);
  return m;
}

// Exhaustive check of the basis exchange axiom.
inline bool exchange_axiom_holds(const std::vector<EdgeSubset>& all) {
  std::vector<EdgeSubset> sorted = all;
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  auto is_basis = [&](const EdgeSubset& s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (const auto& b1 : sorted) {
    for (const auto& b2 : sorted) {
      for (const auto& e : b1) {
        if (std::binary_search(b2.begin(), b2.end(), e)) continue;
        bool ok = false;
        for (const auto& f : b2) {
          if (std::binary_search(b1.begin(), b1.end(), f)) continue;
          EdgeSubset c;
          for (const auto& x : b1) {
            if (x != e) c.push_back(x);
          }
          c.insert(std::upper_bound(c.begin(), c.end(), f), f);
          if (is_basis(c)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace galois_trees
