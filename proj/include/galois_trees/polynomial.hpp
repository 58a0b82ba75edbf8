#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galois_trees/bigint.hpp"
#include "galois_trees/error.hpp"

namespace galois_trees {

// Dense univariate polynomial in s, coefficients low to high, trailing zeros trimmed.
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(C(c)) {}
  UniPoly(const C& c) {
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit UniPoly(std::vector<C> coefficients) : c_(std::move(coefficients)) { trim(); }

  static UniPoly monomial(const C& c, std::size_t k) {
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }

  static UniPoly s() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coefficients() const { return c_; }
  C coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  C leading() const { return c_.empty() ? C(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UniPoly(std::move(r));
  }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }

  template <class D, class F>
  UniPoly<D> map_coefficients(F&& f) const {
    std::vector<D> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return UniPoly<D>(std::move(v));
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c_[i]) + ")";
      if (i == 1) out += "*s";
      if (i > 1) out += "*s^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const UniPoly<C>& p) {
  return p.degree() < 0;
}

template <class C>
std::string to_string(const UniPoly<C>& p) {
  return p.str();
}

template <class C>
UniPoly<C> pow(const UniPoly<C>& p, unsigned k) {
  UniPoly<C> r(C(1));
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

// Quotient of a by b; throws InexactDivision on a nonzero remainder.
template <class C>
UniPoly<C> exact_div(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (is_zero(b)) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) {
    if (is_zero(a)) return UniPoly<C>();
    throw InexactDivision("polynomial division", a.str());
  }
  std::vector<C> r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<C> q(r.size() - db, C(0));
  for (std::size_t i = r.size(); i-- > db;) {
    if (is_zero(r[i])) continue;
    C c;
    try {
      c = exact_div(r[i], d[db]);
    } catch (const InexactDivision&) {
      throw InexactDivision("polynomial division", UniPoly<C>(r).str());
    }
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * d[j];
  }
  UniPoly<C> rem(std::move(r));
  if (!is_zero(rem)) throw InexactDivision("polynomial division", rem.str());
  return UniPoly<C>(std::move(q));
}

// Coefficients of p in powers of (s - center), padded or truncated to order + 1 entries.
template <class C>
std::vector<C> taylor_shift(const UniPoly<C>& p, const C& center, std::size_t order) {
  // Horner in the shifted variable t = s - center
  std::vector<C> q;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    std::vector<C> next(q.size() + 1, C(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k + 1] += q[k];
      next[k] += q[k] * center;
    }
    next[0] += c[i];
    q = std::move(next);
  }
  q.resize(order + 1, C(0));
  return q;
}

template <class C>
std::vector<C> taylor_shift(const UniPoly<C>& p, std::size_t order) {
  return taylor_shift(p, C(1), order);
}

using Monomial = std::vector<std::uint32_t>;

// Sparse polynomial over a sorted list of named variables. Terms are kept in
// lexicographic exponent order with no zero coefficients.
template <class C>
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(C(c)) {}
  MultiPoly(const C& c) {
    if (!is_zero(c)) terms_.emplace(Monomial{}, c);
  }

  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  static MultiPoly variable(const std::string& name) {
    MultiPoly p(std::vector<std::string>{name});
    p.terms_.emplace(Monomial{1}, C(1));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Monomial, C>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Adds c times the monomial with the given exponents; new names extend the variable set.
  void add_term(const std::map<std::string, std::uint32_t>& exps, const C& c) {
    std::vector<std::string> names = vars_;
    for (const auto& [v, e] : exps) {
      if (!std::binary_search(vars_.begin(), vars_.end(), v)) names.push_back(v);
    }
    if (names.size() != vars_.size()) *this = with_variables(names);
    Monomial m(vars_.size(), 0);
    for (const auto& [v, e] : exps) m[index_of(v)] = e;
    add_term(m, c);
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.size() != vars_.size()) throw Error("monomial length does not match variable count");
    if (is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const std::map<std::string, std::uint32_t>& exps) const {
    Monomial m(vars_.size(), 0);
    for (const auto& [v, e] : exps) {
      if (!std::binary_search(vars_.begin(), vars_.end(), v)) {
        if (e == 0) continue;
        return C(0);
      }
      m[index_of(v)] = e;
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Same polynomial written over a superset of its variables.
  MultiPoly with_variables(std::vector<std::string> names) const {
    MultiPoly r(std::move(names));
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), vars_[i]);
      if (it == r.vars_.end() || *it != vars_[i]) throw Error("variable set is not a superset");
      pos[i] = static_cast<std::size_t>(it - r.vars_.begin());
    }
    for (const auto& [m, c] : terms_) {
      Monomial n(r.vars_.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) n[pos[i]] = m[i];
      r.terms_.emplace(std::move(n), c);
    }
    return r;
  }

  // Drops variables that appear in no term.
  MultiPoly compact() const {
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (const auto& [m, c] : terms_) {
        if (m[i]) {
          used.push_back(vars_[i]);
          break;
        }
      }
    }
    MultiPoly r(used);
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::binary_search(used.begin(), used.end(), vars_[i])) n.push_back(m[i]);
      }
      r.terms_.emplace(std::move(n), c);
    }
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    unify(o);
    MultiPoly b = o.with_variables(vars_);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    unify(o);
    MultiPoly b = o.with_variables(vars_);
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> names = merged(a.vars_, b.vars_);
    MultiPoly x = a.with_variables(names);
    MultiPoly y = b.with_variables(names);
    MultiPoly r(names);
    Monomial m(names.size());
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> names = merged(a.vars_, b.vars_);
    MultiPoly x = a.with_variables(names);
    MultiPoly y = b.with_variables(names);
    if (x.terms_.size() != y.terms_.size()) return false;
    auto it = y.terms_.begin();
    for (const auto& [m, c] : x.terms_) {
      if (m != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  bool is_zero_poly() const { return terms_.empty(); }

  // Maximum total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(degree_of(m)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree_of(t.first) == d; });
  }

  // Ring homomorphism into T; every variable that occurs must be assigned.
  template <class T>
  T evaluate(const std::map<std::string, T>& point) const {
    std::vector<const T*> vals(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it != point.end()) vals[i] = &it->second;
    }
    T total(0);
    for (const auto& [m, c] : terms_) {
      T t(c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!vals[i]) throw Error("no value supplied for variable " + vars_[i]);
        for (std::uint32_t k = 0; k < m[i]; ++k) t = t * *vals[i];
      }
      total = total + t;
    }
    return total;
  }

  template <class T>
  T evaluate_all(const T& x) const {
    std::map<std::string, T> point;
    for (const auto& v : vars_) point.emplace(v, x);
    return evaluate(point);
  }

  // Replaces the variable by a polynomial.
  MultiPoly substitute_var(const std::string& name, const MultiPoly& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return *this;
    const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    std::map<std::uint32_t, MultiPoly> powers;
    MultiPoly result;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest[k] = 0;
      MultiPoly t(vars_);
      t.terms_.emplace(rest, c);
      auto pit = powers.find(m[k]);
      if (pit == powers.end()) {
        MultiPoly p(C(1));
        for (std::uint32_t i = 0; i < m[k]; ++i) p *= value;
        pit = powers.emplace(m[k], std::move(p)).first;
      }
      result += t * pit->second;
    }
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    return result.compact().with_variables(merged(rest, value.vars_));
  }

  template <class D, class F>
  MultiPoly<D> map_coefficients(F&& f) const {
    MultiPoly<D> r(vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  // Leading term in lexicographic order.
  std::pair<Monomial, C> leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(it->second) + ")";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!it->first[i]) continue;
        out += "*" + vars_[i];
        if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
      }
    }
    return out;
  }

  std::size_t index_of(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) throw Error("unknown variable " + v);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  static std::uint32_t degree_of(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
  }

  static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
  }

 private:
  template <class D>
  friend class MultiPoly;

  void unify(const MultiPoly& o) {
    std::vector<std::string> names = merged(vars_, o.vars_);
    if (names.size() != vars_.size()) *this = with_variables(names);
  }

  std::vector<std::string> vars_;
  std::map<Monomial, C> terms_;
};

template <class C>
bool is_zero(const MultiPoly<C>& p) {
  return p.is_zero_poly();
}

template <class C>
std::string to_string(const MultiPoly<C>& p) {
  return p.str();
}

template <class C>
MultiPoly<C> pow(const MultiPoly<C>& p, unsigned k) {
  MultiPoly<C> r(C(1));
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

// Multivariate division in lexicographic order. The full remainder is
// collected and reported when it is nonzero.
template <class C>
MultiPoly<C> exact_divide(const MultiPoly<C>& num, const MultiPoly<C>& den) {
  if (is_zero(den)) throw Error("polynomial division by zero");
  std::vector<std::string> names = MultiPoly<C>::merged(num.variables(), den.variables());
  MultiPoly<C> r = num.with_variables(names);
  MultiPoly<C> d = den.with_variables(names);
  MultiPoly<C> q(names);
  MultiPoly<C> rem(names);
  const auto [dm, dc] = d.leading_term();
  while (!is_zero(r)) {
    auto [rm, rc] = r.leading_term();
    bool divisible = true;
    Monomial qm(rm.size());
    for (std::size_t i = 0; i < rm.size(); ++i) {
      if (rm[i] < dm[i]) {
        divisible = false;
        break;
      }
      qm[i] = rm[i] - dm[i];
    }
    C qc;
    if (divisible) {
      try {
        qc = exact_div(rc, dc);
      } catch (const InexactDivision&) {
        divisible = false;
      }
    }
    if (!divisible) {
      rem.add_term(rm, rc);
      r.add_term(rm, -rc);
      continue;
    }
    MultiPoly<C> t(names);
    t.add_term(qm, qc);
    q += t;
    r -= t * d;
  }
  if (!is_zero(rem)) throw InexactDivision("polynomial division", rem.str());
  return q;
}

}  // namespace galois_trees
