#pragma once

#include <gmpxx.h>

#include <string>

#include "galois_trees/error.hpp"

namespace galois_trees {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) throw Error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    BigInt r = a % b;
    throw InexactDivision("integer division " + a.get_str() + " / " + b.get_str(), r.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// The integer value of a rational known to be integral.
inline BigInt to_integer(const Rational& q) {
  if (q.get_den() != 1) throw InexactDivision("rational is not an integer", q.get_str());
  return q.get_num();
}

}  // namespace galois_trees
