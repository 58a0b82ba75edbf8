#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "galois_trees/bigint.hpp"

namespace galois_trees {

namespace detail {

struct CyclotomicTables {
  int m = 1;
  int phi = 1;
  std::vector<long long> modulus;               // monic Phi_m, low to high, length phi+1
  std::vector<std::vector<long long>> powers;   // x^k mod Phi_m for 0 <= k < m
};

inline std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

inline std::vector<long long> cyclotomic_polynomial(int m, std::map<int, std::vector<long long>>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d, memo));
  }
  memo[m] = p;
  return p;
}

inline std::shared_ptr<const CyclotomicTables> build_tables(int m) {
  auto t = std::make_shared<CyclotomicTables>();
  t->m = m;
  std::map<int, std::vector<long long>> memo;
  std::vector<long long> p = cyclotomic_polynomial(m, memo);
  t->modulus = p;
  t->phi = static_cast<int>(p.size()) - 1;
  t->powers.resize(m);
  std::vector<long long> cur(t->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    t->powers[k] = cur;
    // multiply by x and reduce
    std::vector<long long> next(t->phi, 0);
    long long top = cur[t->phi - 1];
    for (int i = t->phi - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < t->phi; ++i) next[i] -= top * t->modulus[i];
    cur = next;
  }
  return t;
}

inline const CyclotomicTables& cyclotomic_tables(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_tables(m)).first;
  return *it->second;
}

}  // namespace detail

inline int euler_phi(int m) { return detail::cyclotomic_tables(m).phi; }

// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
// Values with phi(m) = 1 are ordinary integers and mix with any conductor.
class CycInt {
 public:
  CycInt() : m_(1), c_(1) {}
  CycInt(int n) : m_(1), c_{BigInt(n)} {}
  CycInt(long n) : m_(1), c_{BigInt(n)} {}
  CycInt(const BigInt& n) : m_(1), c_{n} {}

  CycInt(int conductor, std::vector<BigInt> coefficients) : m_(conductor), c_(std::move(coefficients)) {
    if (m_ < 1) throw Error("conductor must be >= 1");
    if (static_cast<int>(c_.size()) != euler_phi(m_)) {
      throw Error("cyclotomic coefficient vector has length " + std::to_string(c_.size()) + ", expected " +
                  std::to_string(euler_phi(m_)));
    }
    normalize_conductor();
  }

  static CycInt integer(int conductor, const BigInt& n) {
    std::vector<BigInt> c(euler_phi(conductor), 0);
    c[0] = n;
    return CycInt(conductor, std::move(c));
  }

  // zeta_m^power
  static CycInt root(int m, long long power) {
    if (m < 1) throw Error("conductor must be >= 1");
    const auto& t = detail::cyclotomic_tables(m);
    long long k = ((power % m) + m) % m;
    std::vector<BigInt> c(t.phi);
    for (int i = 0; i < t.phi; ++i) c[i] = static_cast<long>(t.powers[k][i]);
    return CycInt(m, std::move(c));
  }

  int conductor() const { return m_; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  bool is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return false;
    }
    return true;
  }

  BigInt integer_value() const {
    if (!is_integer()) throw Error("cyclotomic value " + str() + " is not a rational integer");
    return c_[0];
  }

  // The same value written over conductor m (allowed when this is an integer).
  CycInt with_conductor(int m) const {
    if (m == m_) return *this;
    if (!is_integer()) {
      throw Error("cannot mix cyclotomic conductors " + std::to_string(m_) + " and " + std::to_string(m));
    }
    return integer(m, c_[0]);
  }

  CycInt& operator+=(const CycInt& o) {
    int m = common(o);
    *this = with_conductor(m);
    CycInt b = o.with_conductor(m);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }

  CycInt& operator-=(const CycInt& o) {
    int m = common(o);
    *this = with_conductor(m);
    CycInt b = o.with_conductor(m);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }

  CycInt operator-() const {
    CycInt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.is_integer() || b.is_integer()) {
      const CycInt& s = a.is_integer() ? a : b;
      const CycInt& v = a.is_integer() ? b : a;
      CycInt r = v;
      for (auto& x : r.c_) x *= s.c_[0];
      return r;
    }
    int m = a.common(b);
    const auto& t = detail::cyclotomic_tables(m);
    const int phi = t.phi;
    std::vector<BigInt> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < phi; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    for (int k = 2 * phi - 2; k >= phi; --k) {
      if (sgn(prod[k]) == 0) continue;
      BigInt top = prod[k];
      for (int i = 0; i < phi; ++i) {
        long long coef = t.modulus[i];
        if (coef != 0) prod[k - phi + i] -= top * static_cast<long>(coef);
      }
      prod[k] = 0;
    }
    prod.resize(phi);
    return CycInt(m, std::move(prod));
  }

  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    if (a.is_integer() && b.is_integer()) return a.c_[0] == b.c_[0];
    return false;
  }

  // zeta -> zeta^a for gcd(a, m) = 1
  CycInt galois(long long a) const {
    if (c_.size() == 1) return *this;
    if (std::gcd(static_cast<long long>(m_), a) != 1) throw Error("galois exponent must be a unit mod m");
    const auto& t = detail::cyclotomic_tables(m_);
    std::vector<BigInt> out(t.phi, 0);
    for (int i = 0; i < t.phi; ++i) {
      if (sgn(c_[i]) == 0) continue;
      long long k = ((a * i) % m_ + m_) % m_;
      for (int j = 0; j < t.phi; ++j) {
        if (t.powers[k][j] != 0) out[j] += c_[i] * static_cast<long>(t.powers[k][j]);
      }
    }
    return CycInt(m_, std::move(out));
  }

  CycInt conj() const { return galois(m_ - 1); }

  // Product of all Galois conjugates other than the identity.
  CycInt conjugate_product() const {
    CycInt r(1);
    for (int a = 2; a < m_; ++a) {
      if (std::gcd(a, m_) == 1) r *= galois(a);
    }
    return r;
  }

  BigInt norm() const {
    if (c_.size() == 1) return c_[0];
    return (*this * conjugate_product()).integer_value();
  }

  std::complex<long double> to_complex() const {
    std::complex<long double> z = 0;
    const long double tau = 2 * std::numbers::pi_v<long double>;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      long double ang = tau * static_cast<long double>(i) / m_;
      z += static_cast<long double>(c_[i].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  std::string str() const {
    if (c_.size() == 1) return c_[0].get_str();
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].get_str();
    }
    return s + "]_" + std::to_string(m_);
  }

  friend std::ostream& operator<<(std::ostream& os, const CycInt& z) { return os << z.str(); }

 private:
  int common(const CycInt& o) const {
    if (m_ == o.m_) return m_;
    if (o.is_integer()) return m_;
    if (is_integer()) return o.m_;
    throw Error("cannot mix cyclotomic conductors " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }

  void normalize_conductor() {
    // conductor 2 is the integers again
    if (m_ == 2) m_ = 1;
  }

  int m_;
  std::vector<BigInt> c_;
};

inline bool is_zero(const CycInt& z) {
  for (const auto& x : z.coefficients()) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

inline std::string to_string(const CycInt& z) { return z.str(); }

inline CycInt exact_div(const CycInt& a, const CycInt& b) {
  if (is_zero(b)) throw Error("division by zero");
  if (b.is_integer()) {
    BigInt d = b.integer_value();
    std::vector<BigInt> q(a.coefficients().size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const BigInt& x = a.coefficients()[i];
      if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
        throw InexactDivision("cyclotomic division " + a.str() + " / " + b.str(), BigInt(x % d).get_str());
      }
      mpz_divexact(q[i].get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return CycInt(a.conductor(), std::move(q));
  }
  CycInt bstar = b.conjugate_product();
  BigInt n = (b * bstar).integer_value();
  CycInt num = a * bstar;
  try {
    return exact_div(num, CycInt(n));
  } catch (const InexactDivision& e) {
    throw InexactDivision("cyclotomic division " + a.str() + " / " + b.str(), e.remainder());
  }
}

// (1 - zeta^k)(1 - zeta^-k) = 2 - zeta^k - zeta^-k
inline CycInt weight_of_root(int m, long long power) {
  return CycInt(2) - CycInt::root(m, power) - CycInt::root(m, -power);
}

}  // namespace galois_trees
