#pragma once

// Exact dense linear algebra over the integers and rationals.
//
// Every routine here is a free function over Eigen::MatrixBase and works for
// any exact ring scalar with truncating division (std::int64_t, mpz_int) or
// any exact field scalar (mpq_rational). Nothing rounds.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace g2sum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = DenseMatrix<Integer>;
using IntegerVector = DenseVector<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant with row pivoting.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  DenseMatrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return Scalar(sign * m(n - 1, n - 1));
}

/// U * A * V == S with U, V unimodular and S diagonal, s_0 | s_1 | ... .
template <typename Scalar>
struct SmithDecomposition {
  DenseMatrix<Scalar> U;
  DenseMatrix<Scalar> S;
  DenseMatrix<Scalar> V;

  DenseVector<Scalar> diagonal() const { return S.diagonal(); }
};

/// Smith normal form by repeated pivoting on the entry of least absolute value.
/// Diagonal entries come out non-negative.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  SmithDecomposition<Scalar> out{DenseMatrix<Scalar>::Identity(rows, rows), input,
                                 DenseMatrix<Scalar>::Identity(cols, cols)};
  auto& S = out.S;
  auto& U = out.U;
  auto& V = out.V;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      // pivot: least nonzero |entry| of the trailing block
      Eigen::Index pi = -1, pj = -1;
      Scalar best(0);
      for (Eigen::Index j = t; j < cols; ++j) {
        for (Eigen::Index i = t; i < rows; ++i) {
          if (S(i, j) == 0) continue;
          Scalar a = abs_value(S(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return out;  // trailing block is zero
      if (pi != t) {
        S.row(t).swap(S.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        S.col(t).swap(S.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        const Scalar q = S(i, t) / S(t, t);
        S.row(i) -= q * S.row(t);
        U.row(i) -= q * U.row(t);
        if (S(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        const Scalar q = S(t, j) / S(t, t);
        S.col(j) -= q * S.col(t);
        V.col(j) -= q * V.col(t);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      S.row(t) += S.row(bad);
      U.row(t) += U.row(bad);
    }
    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return out;
}

/// Diagonalizes a symmetric matrix by congruence over the rationals and
/// returns the pivots. Zero diagonals are repaired by mixing in another row
/// and column (e_i -> e_i + e_j). Throws std::domain_error when singular.
template <typename Derived>
RationalVector congruence_pivots(const Eigen::MatrixBase<Derived>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("congruence of non-square matrix");
  RationalMatrix m = input.template cast<Rational>();
  const Eigen::Index n = m.rows();
  RationalVector pivots(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // all trailing diagonals vanish; look for an off-diagonal entry
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = k; i < n && oi < 0; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
          if (m(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi < 0) throw std::domain_error("degenerate quadratic form");
      m.row(oi) += m.row(oj);
      m.col(oi) += m.col(oj);
      p = oi;
    }
    if (p != k) {
      m.row(k).swap(m.row(p));
      m.col(k).swap(m.col(p));
    }
    const Rational pivot = m(k, k);
    pivots(k) = pivot;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return pivots;
}

}  // namespace g2sum
