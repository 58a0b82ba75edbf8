#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "galois_trees/bigint.hpp"
#include "galois_trees/matrix.hpp"

namespace galois_trees {

struct SmithForm {
  // d_1 | d_2 | ... , length min(rows, cols), zeros last
  std::vector<BigInt> diagonal;
  // U * M * V = diag, both unimodular; present only when requested
  std::optional<Matrix<BigInt>> left;
  std::optional<Matrix<BigInt>> right;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return sgn(d) != 0; }));
  }
};

namespace detail {

class SmithReducer {
 public:
  SmithReducer(Matrix<BigInt> m, bool transforms) : a_(std::move(m)), track_(transforms) {
    if (track_) {
      u_ = Matrix<BigInt>::identity(a_.rows());
      v_ = Matrix<BigInt>::identity(a_.cols());
    }
  }

  SmithForm run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (sgn(a_(i, t)) == 0) continue;
          BigInt q = a_(i, t) / a_(t, t);
          add_row(i, t, -q);
          if (sgn(a_(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (sgn(a_(t, j)) == 0) continue;
          BigInt q = a_(t, j) / a_(t, t);
          add_col(j, t, -q);
          if (sgn(a_(t, j)) != 0) clean = false;
        }
        if (!clean) {
          place_pivot(t);
          continue;
        }
        // divisibility: fold an offending row into the pivot row
        std::size_t bad = a_.rows();
        for (std::size_t i = t + 1; i < a_.rows() && bad == a_.rows(); ++i) {
          for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
          }
        }
        if (bad == a_.rows()) break;
        add_row(t, bad, BigInt(1));
      }
      if (sgn(a_(t, t)) < 0) scale_row(t);
    }
    SmithForm f;
    for (std::size_t t = 0; t < n; ++t) f.diagonal.push_back(a_(t, t));
    if (track_) {
      f.left = std::move(u_);
      f.right = std::move(v_);
    }
    return f;
  }

 private:
  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0;
    std::size_t bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (sgn(a_(i, j)) == 0) continue;
        if (!found || mpz_cmpabs(a_(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
          best = a_(i, j);
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    a_.swap_rows(t, bi);
    if (track_) u_.swap_rows(t, bi);
    a_.swap_cols(t, bj);
    if (track_) v_.swap_cols(t, bj);
    return true;
  }

  // row_i += k * row_src
  void add_row(std::size_t i, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (sgn(a_(src, j)) != 0) mpz_addmul(a_(i, j).get_mpz_t(), k.get_mpz_t(), a_(src, j).get_mpz_t());
    }
    if (!track_) return;
    for (std::size_t j = 0; j < u_.cols(); ++j) {
      if (sgn(u_(src, j)) != 0) mpz_addmul(u_(i, j).get_mpz_t(), k.get_mpz_t(), u_(src, j).get_mpz_t());
    }
  }

  void add_col(std::size_t j, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (sgn(a_(i, src)) != 0) mpz_addmul(a_(i, j).get_mpz_t(), k.get_mpz_t(), a_(i, src).get_mpz_t());
    }
    if (!track_) return;
    for (std::size_t i = 0; i < v_.rows(); ++i) {
      if (sgn(v_(i, src)) != 0) mpz_addmul(v_(i, j).get_mpz_t(), k.get_mpz_t(), v_(i, src).get_mpz_t());
    }
  }

  void scale_row(std::size_t t) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(t, j) = -a_(t, j);
    if (!track_) return;
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
  }

  Matrix<BigInt> a_;
  bool track_;
  Matrix<BigInt> u_;
  Matrix<BigInt> v_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const Matrix<BigInt>& m, bool with_transforms = false) {
  return detail::SmithReducer(m, with_transforms).run();
}

}  // namespace galois_trees
