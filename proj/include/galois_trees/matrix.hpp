#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "galois_trees/bigint.hpp"
#include "galois_trees/error.hpp"
#include "galois_trees/polynomial.hpp"

namespace galois_trees {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error("matrix product shape mismatch");
    Matrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i) {
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k) {
      if (!(a.a_[k] == b.a_[k])) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  // Deletes one row and one column.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m(r_ - 1, c_ - 1);
    for (std::size_t i = 0, ii = 0; i < r_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, jj = 0; j < c_; ++j) {
        if (j == col) continue;
        m(ii, jj++) = (*this)(i, j);
      }
      ++ii;
    }
    return m;
  }

  template <class D, class F>
  Matrix<D> map(F&& f) const {
    Matrix<D> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    }
    return m;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw Error("matrix shape mismatch");
  }

  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<T> a_;
};

namespace detail {

template <class T>
void bareiss_step(T& aij, const T& akk, const T& aik, const T& akj, const T& prev) {
  T t = aij * akk;
  if (!is_zero(aik) && !is_zero(akj)) t -= aik * akj;
  aij = exact_div(t, prev);
}

inline void bareiss_step(BigInt& aij, const BigInt& akk, const BigInt& aik, const BigInt& akj, const BigInt& prev) {
  mpz_mul(aij.get_mpz_t(), aij.get_mpz_t(), akk.get_mpz_t());
  mpz_submul(aij.get_mpz_t(), aik.get_mpz_t(), akj.get_mpz_t());
  mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
}

}  // namespace detail

// Fraction-free Gaussian elimination; T must be an integral domain with exact_div.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return T(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) detail::bareiss_step(m(i, j), m(k, k), m(i, k), m(k, j), prev);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Expansion by minors over column subsets, O(2^n n) ring operations and no
// division; usable over any commutative ring for n up to about 20.
template <class T>
T det_expansion(const Matrix<T>& m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 24) throw Error("expansion by minors limited to 24x24");
  if (n == 0) return T(1);
  std::vector<T> dp(std::size_t{1} << n, T(0));
  std::vector<char> live(dp.size(), 0);
  dp[0] = T(1);
  live[0] = 1;
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j) || is_zero(m(row, j))) continue;
      // sign from the number of already used columns to the right of j
      const int inversions = std::popcount(mask >> (j + 1));
      T term = dp[mask] * m(row, j);
      const std::uint32_t next = mask | (1u << j);
      if (inversions % 2) {
        dp[next] -= term;
      } else {
        dp[next] += term;
      }
      live[next] = 1;
    }
  }
  return dp.back();
}

// Upper bound on the degree of det from row and column degree sums.
template <class C>
int det_degree_bound(const Matrix<UniPoly<C>>& m) {
  long long rows = 0;
  long long cols = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    rows += d;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) d = std::max(d, m(i, j).degree());
    cols += d;
  }
  return static_cast<int>(std::min(rows, cols));
}

// Determinant of a matrix of univariate polynomials: Bareiss at the integer
// points a, a+1, ..., a+D, then Newton forward differences. All steps stay
// inside the coefficient ring; the final division by D! is exact.
template <class C>
UniPoly<C> det_interpolate(const Matrix<UniPoly<C>>& m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const int degree = det_degree_bound(m);
  const long a = -static_cast<long>(degree / 2);
  const std::size_t npts = static_cast<std::size_t>(degree) + 1;
  std::vector<C> y(npts);

  auto eval_at = [&](std::size_t k) {
    const C x(static_cast<long>(a + static_cast<long>(k)));
    Matrix<C> mk = m.template map<C>([&](const UniPoly<C>& p) { return p.evaluate(x); });
    y[k] = det_bareiss(std::move(mk));
  };
  const std::size_t workers =
      std::min<std::size_t>(npts, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1 || m.rows() < 12) {
    for (std::size_t k = 0; k < npts; ++k) eval_at(k);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < npts; k += workers) eval_at(k);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  // forward differences: y[k] becomes Delta^k y_0
  for (std::size_t k = 1; k < npts; ++k) {
    for (std::size_t i = npts - 1; i >= k; --i) y[i] = y[i] - y[i - 1];
  }
  BigInt dfact = 1;
  for (int k = 2; k <= degree; ++k) dfact *= k;
  // sum_k Delta^k y_0 * (D!/k!) * (s-a)(s-a-1)...(s-a-k+1)
  UniPoly<C> falling(C(1));
  UniPoly<C> acc;
  BigInt scale = dfact;
  for (std::size_t k = 0; k < npts; ++k) {
    if (k > 0) {
      falling *= UniPoly<C>(std::vector<C>{C(-(a + static_cast<long>(k) - 1)), C(1)});
      scale = exact_div(scale, BigInt(static_cast<long>(k)));
    }
    if (!is_zero(y[k])) acc += falling * UniPoly<C>(C(y[k] * C(scale)));
  }
  std::vector<C> coeffs = acc.coefficients();
  for (auto& c : coeffs) c = exact_div(c, C(dfact));
  return UniPoly<C>(std::move(coeffs));
}

inline Matrix<BigInt> to_bigint_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix<BigInt> m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace galois_trees
