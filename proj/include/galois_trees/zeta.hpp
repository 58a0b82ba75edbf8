#pragma once

#include <map>
#include <string>
#include <vector>

#include "galois_trees/abelian_group.hpp"
#include "galois_trees/cover.hpp"
#include "galois_trees/cyclotomic.hpp"
#include "galois_trees/graph.hpp"
#include "galois_trees/jacobian.hpp"
#include "galois_trees/matrix.hpp"
#include "galois_trees/matroid.hpp"
#include "galois_trees/polynomial.hpp"

namespace galois_trees {

using ZPoly = UniPoly<BigInt>;
using LPoly = UniPoly<CycInt>;
using Lengths = std::map<std::string, long>;

// Lengths per edge index; unlisted edges have length 1.
inline std::vector<long> resolve_lengths(const Graph& g, const Lengths& lengths) {
  std::vector<long> out(g.num_edges(), 1);
  for (const auto& [id, x] : lengths) {
    if (x <= 0) throw Error("edge length of " + id + " must be positive");
    out[g.edge_index(id)] = x;
  }
  return out;
}

// Total-graph lengths pulled back from the base.
inline Lengths lift_lengths(const Cover& c, const Lengths& lengths) {
  const auto base = resolve_lengths(c.base, lengths);
  Lengths out;
  for (std::size_t d = 0; d < c.total.num_edges(); ++d) out[c.total.edges()[d].id] = base[c.edge_projection[d]];
  return out;
}

namespace detail {

// I - W over oriented edges (half-edge h is e for h = 2e and its reverse for
// h = 2e + 1); twist[h] multiplies row h.
template <class C>
Matrix<UniPoly<C>> one_minus_edge_matrix(const Graph& g, const std::vector<long>& x, const std::vector<C>& twist) {
  const std::size_t n = 2 * g.num_edges();
  Matrix<UniPoly<C>> m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    m(a, a) = UniPoly<C>(C(1));
    const std::size_t head = g.root(Graph::involution(a));
    for (std::size_t b : g.incident(head)) {
      if (b == Graph::involution(a)) continue;
      m(a, b) = m(a, b) - UniPoly<C>::monomial(twist[a], static_cast<std::size_t>(x[a / 2]));
    }
  }
  return m;
}

inline void require_free(const CoverSpec& spec) {
  if (!validate_spec(spec).spec.is_free()) throw Error("L-functions are defined for free covers only");
}

// rho(eta) on each oriented edge, with eta(reverse e) = -eta(e).
inline std::vector<CycInt> oriented_character_values(const CoverSpec& spec, const Character& rho) {
  std::vector<CycInt> out;
  const int m = rho.conductor();
  for (const auto& eta : spec.voltage) {
    const int k = rho.value(eta);
    out.push_back(CycInt::root(m, k));
    out.push_back(CycInt::root(m, (m - k) % m));
  }
  return out;
}

}  // namespace detail

// det(I - W) with w_ef = s^{x_e}.
inline ZPoly metric_zeta_reciprocal(const Graph& g, const Lengths& lengths = {}) {
  require_connected(g);
  const auto x = resolve_lengths(g, lengths);
  return det_interpolate(detail::one_minus_edge_matrix(g, x, std::vector<BigInt>(2 * g.num_edges(), BigInt(1))));
}

// (1 - s^2)^{g-1} det[I - sA + s^2 (Q - I)]
inline ZPoly ihara_zeta_reciprocal(const Graph& g) {
  require_connected(g);
  auto [q, a] = valency_adjacency(g);
  const std::size_t n = g.num_vertices();
  Matrix<ZPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt qi = i == j ? BigInt(q(i, j) - 1) : BigInt(0);
      m(i, j) = ZPoly(std::vector<BigInt>{BigInt(i == j ? 1 : 0), BigInt(-a(i, j)), qi});
    }
  }
  ZPoly d = det_interpolate(m);
  const ZPoly one_minus_s2(std::vector<BigInt>{1, 0, -1});
  const long genus_x = genus(g);
  if (genus_x == 0) return exact_div(d, one_minus_s2);
  return pow(one_minus_s2, static_cast<unsigned>(genus_x - 1)) * d;
}

// det(I - W_rho) with entries s^{x_e} rho(eta(e)).
inline LPoly metric_L_reciprocal(const CoverSpec& spec, const Character& rho, const Lengths& lengths = {}) {
  detail::require_free(spec);
  const auto x = resolve_lengths(spec.base, lengths);
  return det_interpolate(detail::one_minus_edge_matrix(spec.base, x, detail::oriented_character_values(spec, rho)));
}

// A_rho: each edge e contributes rho(eta_e) at (s(e), t(e)) and its
// conjugate at (t(e), s(e)).
inline Matrix<CycInt> twisted_adjacency(const CoverSpec& spec, const Character& rho) {
  const Graph& g = spec.base;
  Matrix<CycInt> a(g.num_vertices(), g.num_vertices());
  const int m = rho.conductor();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int k = rho.value(spec.voltage[e]);
    a(g.src(e), g.tgt(e)) = a(g.src(e), g.tgt(e)) + CycInt::root(m, k);
    a(g.tgt(e), g.src(e)) = a(g.tgt(e), g.src(e)) + CycInt::root(m, (m - k) % m);
  }
  return a;
}

inline Matrix<CycInt> twisted_laplacian(const CoverSpec& spec, const Character& rho) {
  detail::require_free(spec);
  auto [q, unused] = valency_adjacency(spec.base);
  (void)unused;
  Matrix<CycInt> a = twisted_adjacency(spec, rho);
  Matrix<CycInt> l(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) l(i, j) = CycInt(q(i, j)) - a(i, j);
  }
  return l;
}

inline CycInt twisted_laplacian_det(const CoverSpec& spec, const Character& rho) {
  if (rho.is_trivial()) throw Error("twisted Laplacian of the trivial character is singular");
  return det_bareiss(twisted_laplacian(spec, rho));
}

// (1 - s^2)^{g-1} det[I - s A_rho + s^2 (Q - I)]
inline LPoly artin_L_reciprocal_threeterm(const CoverSpec& spec, const Character& rho) {
  detail::require_free(spec);
  const Graph& g = spec.base;
  require_connected(g);
  auto [q, unused] = valency_adjacency(g);
  (void)unused;
  Matrix<CycInt> a = twisted_adjacency(spec, rho);
  const std::size_t n = g.num_vertices();
  Matrix<LPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CycInt s2 = i == j ? CycInt(BigInt(q(i, j) - 1)) : CycInt(0);
      m(i, j) = LPoly(std::vector<CycInt>{CycInt(i == j ? 1 : 0), CycInt(0) - a(i, j), s2});
    }
  }
  LPoly d = det_interpolate(m);
  const LPoly one_minus_s2(std::vector<CycInt>{CycInt(1), CycInt(0), CycInt(-1)});
  const long genus_x = genus(g);
  if (genus_x == 0) return exact_div(d, one_minus_s2);
  return pow(one_minus_s2, static_cast<unsigned>(genus_x - 1)) * d;
}

template <class C>
struct TaylorReport {
  std::size_t order = 0;
  C coefficient;
  std::size_t expected_order = 0;
  C expected_coefficient;

  bool holds() const { return order == expected_order && coefficient == expected_coefficient; }
};

namespace detail {

template <class C>
std::pair<std::size_t, C> leading_at_one(const UniPoly<C>& p) {
  if (is_zero(p)) throw Error("identically zero polynomial has no leading term");
  const auto t = taylor_shift(p, static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!is_zero(t[k])) return {k, t[k]};
  }
  throw Error("identically zero polynomial has no leading term");
}

}  // namespace detail

// Zeta: order g, coefficient 2^g (-1)^{g+1} (g-1) J_X(lengths).
inline TaylorReport<BigInt> taylor_leading_zeta(const Graph& g, const Lengths& lengths = {}) {
  const long gx = genus(g);
  if (gx < 2) throw Error("the zeta expansion at s = 1 needs genus at least 2");
  TaylorReport<BigInt> r;
  std::tie(r.order, r.coefficient) = detail::leading_at_one(metric_zeta_reciprocal(g, lengths));
  const auto x = resolve_lengths(g, lengths);
  std::map<std::string, BigInt> point;
  for (std::size_t e = 0; e < g.num_edges(); ++e) point[g.edges()[e].id] = BigInt(x[e]);
  r.expected_order = static_cast<std::size_t>(gx);
  r.expected_coefficient = ipow(BigInt(2), static_cast<unsigned>(gx)) * BigInt(gx % 2 == 1 ? 1 : -1) * BigInt(gx - 1) *
                           jacobian_polynomial(g).evaluate(point);
  return r;
}

// L: order g-1, coefficient 2^{g-1} (-1)^{g-1} P_rho(lengths).
inline TaylorReport<CycInt> taylor_leading_L(const CoverSpec& spec, const Character& rho, const Lengths& lengths = {}) {
  detail::require_free(spec);
  if (rho.is_trivial()) throw Error("character must be nontrivial");
  const long gx = genus(spec.base);
  if (gx < 1) throw Error("the L expansion at s = 1 needs genus at least 1");
  TaylorReport<CycInt> r;
  std::tie(r.order, r.coefficient) = detail::leading_at_one(metric_L_reciprocal(spec, rho, lengths));
  const auto x = resolve_lengths(spec.base, lengths);
  std::map<std::string, CycInt> point;
  for (std::size_t e = 0; e < spec.base.num_edges(); ++e) point[spec.base.edges()[e].id] = CycInt(x[e]);
  r.expected_order = static_cast<std::size_t>(gx - 1);
  const BigInt sign_pow = ipow(BigInt(2), static_cast<unsigned>(gx - 1)) * BigInt((gx - 1) % 2 == 0 ? 1 : -1);
  r.expected_coefficient = CycInt(sign_pow) * weight_polynomial(spec, rho).polynomial.evaluate(point);
  return r;
}

// N_m for m = 1..max_length: closed reduced tailless paths of length m,
// counted with starting point, by depth-first enumeration.
inline std::vector<BigInt> closed_path_census(const Graph& g, int max_length) {
  if (max_length < 1 || max_length > 12) throw Error("census length must be between 1 and 12");
  const std::size_t n = 2 * g.num_edges();
  std::vector<BigInt> counts(static_cast<std::size_t>(max_length), BigInt(0));
  std::vector<unsigned long long> raw(counts.size(), 0);
  for (std::size_t first = 0; first < n; ++first) {
    const std::size_t start = g.root(first);
    auto walk = [&](auto&& self, std::size_t last, int length) -> void {
      const std::size_t head = g.root(Graph::involution(last));
      if (head == start && first != Graph::involution(last)) ++raw[static_cast<std::size_t>(length - 1)];
      if (length == max_length) return;
      for (std::size_t b : g.incident(head)) {
        if (b == Graph::involution(last)) continue;
        self(self, b, length + 1);
      }
    };
    walk(walk, first, 1);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) counts[i] = BigInt(static_cast<unsigned long>(raw[i]));
  return counts;
}

}  // namespace galois_trees
