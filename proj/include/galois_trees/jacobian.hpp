#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galois_trees/bigint.hpp"
#include "galois_trees/cover.hpp"
#include "galois_trees/graph.hpp"
#include "galois_trees/matrix.hpp"
#include "galois_trees/polynomial.hpp"
#include "galois_trees/smith.hpp"

namespace galois_trees {

using IntPoly = MultiPoly<BigInt>;

inline Matrix<BigInt> laplacian(const Graph& g) {
  auto [q, a] = valency_adjacency(g);
  return q - a;
}

struct JacobianGroup {
  std::vector<BigInt> invariant_factors;
  BigInt order = 1;
};

inline JacobianGroup jacobian_group(const Graph& g) {
  require_connected(g);
  SmithForm f = smith_normal_form(laplacian(g));
  JacobianGroup j;
  for (const auto& d : f.diagonal) {
    if (d > 1) {
      j.invariant_factors.push_back(d);
      j.order *= d;
    }
  }
  return j;
}

// Kirchhoff: any cofactor of the Laplacian.
inline BigInt tree_count(const Graph& g) {
  require_connected(g);
  return det_bareiss(laplacian(g).minor(0, 0));
}

namespace detail {

inline BigInt to_bigint(unsigned long long c) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof c, 0, 0, &c);
  return r;
}

inline BigInt to_bigint(unsigned __int128 c) {
  BigInt r;
  std::uint64_t words[2] = {static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(c >> 64)};
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return r;
}

inline void canonicalize(std::vector<std::uint8_t>& s) {
  std::uint8_t map[256];
  std::fill(std::begin(map), std::end(map), 0xFF);
  std::uint8_t next = 0;
  for (auto& x : s) {
    if (map[x] == 0xFF) map[x] = next++;
    x = map[x];
  }
}

// Greedy vertex order keeping the set of placed vertices with unplaced
// neighbours small; every start vertex is tried and the narrowest kept.
inline std::vector<std::size_t> frontier_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    nbr[g.src(e)].push_back(g.tgt(e));
    nbr[g.tgt(e)].push_back(g.src(e));
  }
  for (auto& l : nbr) std::sort(l.begin(), l.end());
  std::vector<std::size_t> best;
  std::pair<std::size_t, double> best_cost{SIZE_MAX, 0};
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> unplaced_nbrs(n);
    for (std::size_t v = 0; v < n; ++v) unplaced_nbrs[v] = nbr[v].size();
    std::vector<std::size_t> order;
    std::size_t open = 0;
    auto place = [&](std::size_t v) {
      placed[v] = 1;
      order.push_back(v);
      for (auto w : nbr[v]) {
        if (placed[w] && w != v && --unplaced_nbrs[w] == 0) --open;
      }
      unplaced_nbrs[v] = static_cast<std::size_t>(
          std::count_if(nbr[v].begin(), nbr[v].end(), [&](std::size_t w) { return !placed[w]; }));
      if (unplaced_nbrs[v] > 0) ++open;
    };
    place(start);
    std::pair<std::size_t, double> cost{open, std::pow(3.0, static_cast<double>(open))};
    while (order.size() < n) {
      std::size_t pick = SIZE_MAX;
      std::pair<long, long> pick_key{0, 0};
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        long into = 0;
        long closes = 0;
        for (std::size_t i = 0; i < nbr[v].size(); ++i) {
          const std::size_t w = nbr[v][i];
          if (!placed[w]) continue;
          ++into;
          if (i > 0 && nbr[v][i - 1] == w) continue;
          const auto mult = std::count(nbr[v].begin(), nbr[v].end(), w);
          if (unplaced_nbrs[w] == static_cast<std::size_t>(mult)) ++closes;
        }
        const bool stays_open = into < static_cast<long>(nbr[v].size());
        std::pair<long, long> key{(stays_open ? 1 : 0) - closes, -into};
        if (pick == SIZE_MAX || key < pick_key) {
          pick = v;
          pick_key = key;
        }
      }
      place(pick);
      cost.first = std::max(cost.first, open);
      cost.second += std::pow(3.0, static_cast<double>(open));
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = order;
    }
  }
  return best;
}

template <class Key, class Count>
class FrontierDP {
 public:
  using Entry = std::pair<Key, Count>;
  using List = std::vector<Entry>;

  // acc += src shifted by add; both sorted by key
  static void merge_into(List& acc, const List& src, Key add) {
    List out;
    out.reserve(acc.size() + src.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < acc.size() || j < src.size()) {
      if (j == src.size() || (i < acc.size() && acc[i].first < src[j].first + add)) {
        out.push_back(acc[i++]);
      } else if (i == acc.size() || src[j].first + add < acc[i].first) {
        out.emplace_back(src[j].first + add, src[j].second);
        ++j;
      } else {
        out.emplace_back(acc[i].first, acc[i].second + src[j].second);
        ++i;
        ++j;
      }
    }
    acc.swap(out);
  }

  // edges: non-loop edge indices in processing order; unit[e]: packed exponent
  static List run(const Graph& g, const std::vector<std::size_t>& edges, const std::vector<Key>& unit) {
    std::vector<std::size_t> last(g.num_vertices(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      last[g.src(edges[i])] = i;
      last[g.tgt(edges[i])] = i;
    }
    std::vector<std::size_t> frontier;
    std::vector<char> entered(g.num_vertices(), 0);
    std::map<std::vector<std::uint8_t>, List> states;
    states[{}] = List{{Key(0), Count(1)}};

    for (std::size_t step = 0; step < edges.size(); ++step) {
      const std::size_t e = edges[step];
      const bool final_step = step + 1 == edges.size();
      std::size_t entering = 0;
      for (std::size_t v : {g.src(e), g.tgt(e)}) {
        if (!entered[v]) {
          entered[v] = 1;
          frontier.push_back(v);
          ++entering;
        }
      }
      if (frontier.size() > 250) throw Error("frontier too wide for the tree polynomial");
      const std::size_t ia = std::find(frontier.begin(), frontier.end(), g.src(e)) - frontier.begin();
      const std::size_t ib = std::find(frontier.begin(), frontier.end(), g.tgt(e)) - frontier.begin();
      std::vector<std::size_t> retiring;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (last[frontier[i]] == step) retiring.push_back(i);
      }

      std::map<std::vector<std::uint8_t>, List> next;
      auto emit = [&](std::vector<std::uint8_t> s, const List& list, Key add) {
        for (std::size_t r = retiring.size(); r-- > 0;) {
          const std::size_t i = retiring[r];
          bool shared = false;
          for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i && s[j] == s[i]) {
              shared = true;
              break;
            }
          }
          if (!shared && !(final_step && s.size() == 1)) return;
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        }
        canonicalize(s);
        merge_into(next[s], list, add);
      };

      for (auto& [state, list] : states) {
        std::vector<std::uint8_t> s = state;
        std::uint8_t fresh = 0;
        for (auto x : s) fresh = std::max<std::uint8_t>(fresh, x + 1);
        for (std::size_t k = 0; k < entering; ++k) s.push_back(fresh++);
        emit(s, list, unit[e]);
        if (s[ia] != s[ib]) {
          std::vector<std::uint8_t> merged = s;
          const std::uint8_t from = s[ib];
          for (auto& x : merged) {
            if (x == from) x = s[ia];
          }
          emit(merged, list, Key(0));
        }
        List().swap(list);
      }
      for (std::size_t r = retiring.size(); r-- > 0;) {
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(retiring[r]));
      }
      states = std::move(next);
    }
    auto it = states.find({});
    return it == states.end() ? List{} : std::move(it->second);
  }
};

}  // namespace detail

// Sum over spanning trees T of prod_{e not in T} x_{label(e)}, by a frontier
// dynamic program over (forest partition of the frontier, complement monomial).
// Distinct edges may share a label. Requires fewer than 128 edges.
inline IntPoly tree_polynomial(const Graph& g, const std::vector<std::string>& edge_labels) {
  using namespace detail;
  require_connected(g);
  if (edge_labels.size() != g.num_edges()) throw Error("one label per edge is required");
  std::vector<std::string> names = edge_labels;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<std::size_t> label(g.num_edges());
  std::vector<std::uint32_t> multiplicity(names.size(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    label[e] = static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), edge_labels[e]) - names.begin());
    ++multiplicity[label[e]];
  }
  std::vector<unsigned> shift(names.size());
  std::vector<unsigned> width(names.size());
  unsigned bits = 0;
  for (std::size_t l = 0; l < names.size(); ++l) {
    shift[l] = bits;
    width[l] = static_cast<unsigned>(std::bit_width(multiplicity[l]));
    bits += width[l];
  }
  if (bits > 128 || g.num_edges() > 127) throw Error("graph too large for the packed tree polynomial");

  Monomial loops(names.size(), 0);
  std::vector<std::size_t> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) {
      ++loops[label[e]];
    } else {
      edges.push_back(e);
    }
  }

  IntPoly result(names);
  if (edges.empty()) {
    result.add_term(loops, BigInt(1));
    return result;
  }

  const auto order = frontier_order(g);
  std::vector<std::size_t> pos(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) {
    auto ka = std::make_pair(std::max(pos[g.src(a)], pos[g.tgt(a)]), std::min(pos[g.src(a)], pos[g.tgt(a)]));
    auto kb = std::make_pair(std::max(pos[g.src(b)], pos[g.tgt(b)]), std::min(pos[g.src(b)], pos[g.tgt(b)]));
    return ka != kb ? ka < kb : a < b;
  });

  auto collect = [&](const auto& list) {
    for (const auto& [k, c] : list) {
      Monomial m = loops;
      for (std::size_t l = 0; l < names.size(); ++l) {
        m[l] += static_cast<std::uint32_t>((k >> shift[l]) & ((decltype(k)(1) << width[l]) - 1));
      }
      result.add_term(m, to_bigint(c));
    }
  };
  auto go = [&](auto key_tag, auto count_tag) {
    using Key = decltype(key_tag);
    using Count = decltype(count_tag);
    std::vector<Key> unit(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) unit[e] = Key(1) << shift[label[e]];
    collect(FrontierDP<Key, Count>::run(g, edges, unit));
  };
  // partial forest counts are bounded by 2^|E|
  using U64 = unsigned long long;
  using U128 = unsigned __int128;
  if (bits <= 64 && edges.size() <= 63) {
    go(U64{}, U64{});
  } else if (bits <= 64) {
    go(U64{}, U128{});
  } else {
    go(U128{}, U128{});
  }
  return result;
}

inline std::vector<std::string> edge_ids(const Graph& g) {
  std::vector<std::string> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return ids;
}

// J_X = sum over spanning trees of the product of complementary edge variables.
inline IntPoly jacobian_polynomial(const Graph& g) { return tree_polynomial(g, edge_ids(g)); }

// The same polynomial assembled term by term from the explicit tree list.
inline IntPoly jacobian_polynomial_from_trees(const Graph& g, const std::vector<std::string>& edge_labels) {
  require_connected(g);
  IntPoly p(edge_labels);
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>& tree) {
    std::vector<char> in(g.num_edges(), 0);
    for (auto e : tree) in[e] = 1;
    std::map<std::string, std::uint32_t> exps;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!in[e]) ++exps[edge_labels[e]];
    }
    p.add_term(exps, BigInt(1));
    return true;
  });
  return p;
}

// J of the total graph with x_(lift of e) replaced by x_e.
inline IntPoly specialized_cover_polynomial(const Cover& c) {
  if (!is_connected(c.total)) throw Error("total graph of the cover is not connected");
  std::vector<std::string> labels;
  for (std::size_t d = 0; d < c.total.num_edges(); ++d) labels.push_back(c.base.edges()[c.edge_projection[d]].id);
  return tree_polynomial(c.total, labels);
}

struct PushforwardReport {
  bool surjective = false;
  BigInt source_order;
  BigInt target_order;
  BigInt image_order;
  BigInt kernel_order;
};

// Induced map Jac(total) -> Jac(base), v~ -> p(v~), in the invariant-factor
// coordinates of the base Smith form.
inline PushforwardReport pushforward_jacobian(const Cover& c) {
  require_connected(c.total);
  require_connected(c.base);
  SmithForm f = smith_normal_form(laplacian(c.base), true);
  const Matrix<BigInt>& u = *f.left;
  std::vector<std::size_t> torsion;
  BigInt base_order = 1;
  for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
    if (f.diagonal[i] > 1) {
      torsion.push_back(i);
      base_order *= f.diagonal[i];
    }
  }
  const std::size_t k = torsion.size();
  const std::size_t nt = c.total.num_vertices();
  // generators e_{p(v~)} - e_{p(v~_0)} followed by the relations diag(d)
  Matrix<BigInt> gen(k, nt + k);
  const std::size_t p0 = c.vertex_projection[0];
  for (std::size_t w = 0; w < nt; ++w) {
    const std::size_t pw = c.vertex_projection[w];
    for (std::size_t r = 0; r < k; ++r) gen(r, w) = u(torsion[r], pw) - u(torsion[r], p0);
  }
  for (std::size_t r = 0; r < k; ++r) gen(r, nt + r) = f.diagonal[torsion[r]];
  BigInt index = 1;
  if (k > 0) {
    for (const auto& d : smith_normal_form(gen).diagonal) index *= d;
  }
  PushforwardReport rep;
  rep.target_order = base_order;
  rep.source_order = jacobian_group(c.total).order;
  rep.image_order = exact_div(base_order, index);
  rep.surjective = index == 1;
  rep.kernel_order = exact_div(rep.source_order, rep.image_order);
  return rep;
}

}  // namespace galois_trees
