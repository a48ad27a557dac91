#pragma once

// Dense exact linear algebra on Eigen containers with exact scalars.
//
// Eigen supplies storage, block access and products; elimination routines
// live here because Eigen's decompositions assume an ordered, inexact field.

#include <Eigen/Dense>

#include "fpp/cyclotomic.hpp"
#include "fpp/exact_scalars.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

// Conjugation is handled explicitly by fpp::conjugate_transpose, so Eigen
// treats CycElt as a real-like field element.
template <>
struct NumTraits<fpp::CycElt> : GenericNumTraits<fpp::CycElt> {
  using Real = fpp::CycElt;
  using NonInteger = fpp::CycElt;
  using Literal = fpp::CycElt;
  using Nested = fpp::CycElt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace fpp {

template <class Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Rat conj(const Rat& q) { return q; }
inline CycElt conj(const CycElt& a) { return a.conj(); }

template <class Derived>
auto conjugate_transpose(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Derived::ColsAtCompileTime, Derived::RowsAtCompileTime> out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class A, class B>
bool exact_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Determinant by Gaussian elimination over the exact field.
template <class Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_determinant: matrix is not square");
  MatX<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = Scalar(1) / a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      Scalar f = a(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

/// Solves A X = B exactly for square nonsingular A; throws SingularMatrix.
template <class DA, class DB>
MatX<typename DA::Scalar> exact_solve(const Eigen::MatrixBase<DA>& lhs, const Eigen::MatrixBase<DB>& rhs) {
  using Scalar = typename DA::Scalar;
  if (lhs.rows() != lhs.cols() || lhs.rows() != rhs.rows())
    throw std::invalid_argument("exact_solve: dimension mismatch");
  const Eigen::Index n = lhs.rows();
  MatX<Scalar> a = lhs;
  MatX<Scalar> b = rhs;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) throw SingularMatrix("exact_solve: matrix is singular");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      b.row(pivot).swap(b.row(col));
    }
    Scalar inv = Scalar(1) / a(col, col);
    for (Eigen::Index c = col; c < n; ++c) a(col, c) *= inv;
    for (Eigen::Index c = 0; c < b.cols(); ++c) b(col, c) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      Scalar f = a(r, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      for (Eigen::Index c = 0; c < b.cols(); ++c) b(r, c) -= f * b(col, c);
    }
  }
  return b;
}

template <class Derived>
MatX<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return exact_solve(m, MatX<Scalar>::Identity(m.rows(), m.rows()));
}

/// Matrix product with an explicit triple loop; avoids Eigen's blocked kernels
/// for scalars whose arithmetic allocates.
template <class A, class B>
MatX<typename A::Scalar> exact_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("exact_product: dimension mismatch");
  MatX<Scalar> out = MatX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace fpp
