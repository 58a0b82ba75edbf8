#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "galois_trees/error.hpp"

namespace galois_trees {

// Element of a product of cyclic groups, stored as reduced residues.
struct GroupElement {
  std::vector<int> residues;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

inline std::string to_string(const GroupElement& g) {
  std::string out;
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.residues[i]);
  }
  return out;
}

// G = Z/n_1 x ... x Z/n_k. The empty product is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int n : orders_) {
      if (n < 1) throw Error("cyclic order must be >= 1, got " + std::to_string(n));
    }
  }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  std::size_t order() const {
    std::size_t n = 1;
    for (int k : orders_) n *= static_cast<std::size_t>(k);
    return n;
  }

  int exponent() const {
    int m = 1;
    for (int k : orders_) m = std::lcm(m, k);
    return m;
  }

  bool operator==(const AbelianGroup&) const = default;

  GroupElement identity() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

  // Reduces arbitrary integers componentwise; throws on a length mismatch.
  GroupElement element(const std::vector<long long>& values) const {
    if (values.size() != orders_.size()) {
      throw Error("group element has " + std::to_string(values.size()) + " components, expected " +
                  std::to_string(orders_.size()));
    }
    GroupElement g;
    g.residues.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      long long r = values[i] % orders_[i];
      if (r < 0) r += orders_[i];
      g.residues[i] = static_cast<int>(r);
    }
    return g;
  }

  bool contains(const GroupElement& g) const {
    if (g.residues.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) return false;
    }
    return true;
  }

  void require(const GroupElement& g) const {
    if (!contains(g)) throw Error("malformed group element (" + galois_trees::to_string(g) + ")");
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      c.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    }
    return c;
  }

  GroupElement negate(const GroupElement& a) const {
    GroupElement c = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      c.residues[i] = (orders_[i] - a.residues[i]) % orders_[i];
    }
    return c;
  }

  GroupElement subtract(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }

  GroupElement multiple(const GroupElement& a, long long k) const {
    std::vector<long long> v(a.residues.begin(), a.residues.end());
    for (auto& x : v) x *= k;
    return element(v);
  }

  // Mixed-radix index; the enumeration order is lexicographic on residues.
  std::size_t index_of(const GroupElement& g) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + g.residues[i];
    return idx;
  }

  GroupElement element_at(std::size_t idx) const {
    GroupElement g{std::vector<int>(orders_.size(), 0)};
    for (std::size_t i = orders_.size(); i-- > 0;) {
      g.residues[i] = static_cast<int>(idx % orders_[i]);
      idx /= orders_[i];
    }
    return g;
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back(element_at(i));
    return out;
  }

  std::string to_string() const {
    if (orders_.empty()) return "Z/1";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) s += " x ";
      s += "Z/" + std::to_string(orders_[i]);
    }
    return s;
  }

 private:
  std::vector<int> orders_;
};

// Subgroup stored as its full sorted element list.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const AbelianGroup& parent) {
    Subgroup h;
    h.parent_ = parent;
    h.elements_ = {parent.identity()};
    return h;
  }

  static Subgroup whole(const AbelianGroup& parent) {
    Subgroup h;
    h.parent_ = parent;
    h.elements_ = parent.elements();
    return h;
  }

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  bool operator==(const Subgroup&) const = default;

  // Lexicographically smallest element of the coset g + H.
  GroupElement coset_representative(const GroupElement& g) const {
    GroupElement best = parent_.add(g, elements_.front());
    for (const auto& h : elements_) best = std::min(best, parent_.add(g, h));
    return best;
  }

  // Greedy irredundant generating set drawn from the sorted element list.
  std::vector<GroupElement> canonical_generators() const;

 private:
  friend Subgroup subgroup_from_generators(const AbelianGroup&, const std::vector<GroupElement>&);
  AbelianGroup parent_;
  std::vector<GroupElement> elements_;
};

// Smallest subgroup containing the generators, by breadth-first closure.
inline Subgroup subgroup_from_generators(const AbelianGroup& group, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens) group.require(g);
  std::vector<char> seen(group.order(), 0);
  std::vector<GroupElement> frontier{group.identity()};
  seen[group.index_of(group.identity())] = 1;
  std::vector<GroupElement> all = frontier;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = group.add(x, g);
        std::size_t k = group.index_of(y);
        if (!seen[k]) {
          seen[k] = 1;
          next.push_back(y);
          all.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  Subgroup h;
  h.parent_ = group;
  h.elements_ = std::move(all);
  return h;
}

inline std::vector<GroupElement> Subgroup::canonical_generators() const {
  std::vector<GroupElement> gens;
  Subgroup span = trivial(parent_);
  for (const auto& g : elements_) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = subgroup_from_generators(parent_, gens);
    if (span.order() == order()) break;
  }
  return gens;
}

inline Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent())) throw Error("subgroup parent mismatch");
  std::vector<GroupElement> gens = a.canonical_generators();
  for (const auto& g : b.canonical_generators()) gens.push_back(g);
  return subgroup_from_generators(a.parent(), gens);
}

// Character g -> zeta_m^(sum c_i a_i m/n_i), m = exponent(G). Values are kept
// as exponents modulo m so downstream arithmetic stays exact.
class Character {
 public:
  Character() = default;
  Character(AbelianGroup parent, std::vector<int> exponents)
      : parent_(std::move(parent)), exponents_(std::move(exponents)) {
    if (exponents_.size() != parent_.rank()) throw Error("character exponent tuple has wrong length");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      int n = parent_.cyclic_orders()[i];
      exponents_[i] = ((exponents_[i] % n) + n) % n;
    }
  }

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int conductor() const { return parent_.exponent(); }

  bool is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int c) { return c == 0; });
  }

  // Exponent k with rho(g) = zeta_m^k.
  int value(const GroupElement& g) const {
    const int m = parent_.exponent();
    long long acc = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      const int n = parent_.cyclic_orders()[i];
      acc += static_cast<long long>(exponents_[i]) * g.residues[i] * (m / n);
      acc %= m;
    }
    return static_cast<int>(acc);
  }

  Character conjugate() const {
    std::vector<int> c = exponents_;
    for (auto& x : c) x = -x;
    return Character(parent_, c);
  }

  bool operator==(const Character&) const = default;

 private:
  AbelianGroup parent_;
  std::vector<int> exponents_;
};

// All |G| characters ordered by exponent tuple; index 0 is the trivial one.
// For Z/n the j-th character is rho_j(k) = zeta_n^(jk).
inline std::vector<Character> characters(const AbelianGroup& group) {
  std::vector<Character> out;
  out.reserve(group.order());
  for (const auto& g : group.elements()) out.emplace_back(group, g.residues);
  return out;
}

inline bool character_kills(const Character& rho, const Subgroup& h) {
  if (!(rho.parent() == h.parent())) throw Error("character and subgroup have different parent groups");
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](const GroupElement& g) { return rho.value(g) == 0; });
}

}  // namespace galois_trees
