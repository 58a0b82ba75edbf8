#pragma once

#include <algorithm>
#include <future>
#include <gmpxx.h>
#include <vector>

#include "galois_trees/cover.hpp"
#include "galois_trees/jacobian.hpp"
#include "galois_trees/matroid.hpp"

namespace galois_trees {

using Rational = mpq_class;

struct CharacterReport {
  Character rho;
  std::size_t rank = 0;
  std::size_t basis_count = 0;
  TwistedMatroid matroid;
  WeightReport weights;
};

struct VerificationReport {
  CoverSpec spec;
  BigInt base_tree_count;
  IntPoly base_polynomial;
  std::vector<CharacterReport> characters;
  Rational prefactor;
  // set when the character product times the prefactor has integer coefficients
  bool rhs_integral = false;
  IntPoly rhs;
  IntPoly lhs;
  bool equal = false;
  BigInt cover_tree_count;
  BigInt theorem_tree_count;
  bool counts_equal = false;
};

// (1/N) prod_v |D(v)|^{N/|D(v)|}
inline Rational dilation_prefactor(const CoverSpec& spec) {
  const std::size_t n = spec.group.order();
  BigInt num = 1;
  for (const auto& d : spec.dilation) num *= ipow(BigInt(static_cast<long>(d.order())), static_cast<unsigned long>(n / d.order()));
  Rational r(num, BigInt(static_cast<long>(n)));
  r.canonicalize();
  return r;
}

inline VerificationReport verify_main_theorem(const CoverSpec& input) {
  const CoverSpec spec = validate_spec(input).spec;
  if (spec.group.order() == 1) throw Error("the trivial group has no nontrivial characters");
  const Cover cover = build_cover(spec);
  if (!is_connected_cover(cover)) throw Error("the cover is not connected");

  VerificationReport r;
  r.spec = spec;
  auto lhs_job = std::async(std::launch::async, [&cover] { return specialized_cover_polynomial(cover); });

  r.base_polynomial = jacobian_polynomial(spec.base);
  r.base_tree_count = tree_count(spec.base);
  r.prefactor = dilation_prefactor(spec);

  std::vector<std::future<CharacterReport>> jobs;
  for (const auto& rho : galois_trees::characters(spec.group)) {
    if (rho.is_trivial()) continue;
    jobs.push_back(std::async(std::launch::async, [&spec, rho] {
      CharacterReport c;
      c.rho = rho;
      c.matroid = bases(spec, rho);
      c.rank = c.matroid.rank;
      c.basis_count = c.matroid.bases.size();
      c.weights = weight_polynomial(c.matroid);
      return c;
    }));
  }
  for (auto& j : jobs) r.characters.push_back(j.get());

  // smallest factors first keeps intermediate products small
  std::vector<const CycPoly*> factors;
  for (const auto& c : r.characters) factors.push_back(&c.weights.polynomial);
  std::sort(factors.begin(), factors.end(), [](const CycPoly* a, const CycPoly* b) { return a->size() < b->size(); });
  CycPoly product = r.base_polynomial.map_coefficients<CycInt>([](const BigInt& b) { return CycInt(b); });
  for (const auto* f : factors) product = product * *f;

  IntPoly rhs(product.variables());
  r.rhs_integral = true;
  for (const auto& [mono, c] : product.terms()) {
    if (!c.is_integer()) {
      r.rhs_integral = false;
      break;
    }
    Rational scaled = r.prefactor * Rational(c.integer_value());
    scaled.canonicalize();
    if (scaled.get_den() != 1) {
      r.rhs_integral = false;
      break;
    }
    rhs.add_term(mono, BigInt(scaled.get_num()));
  }
  if (r.rhs_integral) r.rhs = rhs;

  CycInt scalar_product(1);
  for (const auto& c : r.characters) scalar_product = scalar_product * c.weights.scalar;
  Rational count = r.prefactor * Rational(r.base_tree_count);
  if (scalar_product.is_integer()) {
    count *= Rational(scalar_product.integer_value());
    count.canonicalize();
    if (count.get_den() == 1) r.theorem_tree_count = count.get_num();
  }

  r.lhs = lhs_job.get();
  r.cover_tree_count = tree_count(cover.total);
  r.equal = r.rhs_integral && r.lhs == r.rhs;
  r.counts_equal = r.cover_tree_count == r.theorem_tree_count;
  return r;
}

}  // namespace galois_trees
