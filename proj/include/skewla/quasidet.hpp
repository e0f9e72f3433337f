#pragma once

#include "skewla/elimination.hpp"

#include <optional>
#include <vector>

namespace skewla {

/// Selector of a quasideterminant of an n x n matrix, 0-based. The quasideterminant
/// at (i, j) expands around entry a(j, i) and inverts to entry (i, j) of the inverse.
struct QuasidetIndex {
  Eigen::Index i;
  Eigen::Index j;
};

/// Matrix with row `row` and column `col` removed.
template <typename D>
Matrix<typename D::Scalar> minor_without(const Eigen::MatrixBase<D>& a, Eigen::Index row, Eigen::Index col) {
  using S = typename D::Scalar;
  Matrix<S> out(a.rows() - 1, a.cols() - 1);
  for (Eigen::Index r = 0, ro = 0; r < a.rows(); ++r) {
    if (r == row) continue;
    for (Eigen::Index c = 0, co = 0; c < a.cols(); ++c) {
      if (c == col) continue;
      out(ro, co++) = a(r, c);
    }
    ++ro;
  }
  return out;
}

/// Quasideterminant of a square matrix.
///
///   RC: a(j,i) - r * M^{-1} * c
///   CR: a(j,i) - c * M^{-1} * r
///
/// where r is row j without column i, c is column i without row j and M is a
/// without row j and column i; products and the minor inverse use `kind`. The
/// minor is inverted by Gaussian elimination. Throws UndefinedQuasideterminant
/// when M is kind-singular.
template <typename D>
typename D::Scalar quasidet(const Eigen::MatrixBase<D>& a, QuasidetIndex idx, Product kind,
                            double tol = kDefaultTol) {
  using S = typename D::Scalar;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ShapeError("quasidet needs a square matrix, got " + shape_string(n, a.cols()));
  if (n == 0) throw ShapeError("quasidet of an empty matrix");
  if (idx.i < 0 || idx.i >= n || idx.j < 0 || idx.j >= n) throw ShapeError("quasidet index out of range");
  if (n == 1) return a(0, 0);

  const Matrix<S> minor = minor_without(a, idx.j, idx.i);
  Matrix<S> minor_inv;
  try {
    minor_inv = inverse(minor, kind, tol);
  } catch (const SingularMatrix& e) {
    throw UndefinedQuasideterminant("minor without row " + std::to_string(idx.j) + " and column " +
                                    std::to_string(idx.i) + " is singular (rank " +
                                    std::to_string(e.rank()) + ")");
  }

  Matrix<S> row(1, n - 1);
  for (Eigen::Index c = 0, k = 0; c < n; ++c)
    if (c != idx.i) row(0, k++) = a(idx.j, c);
  Matrix<S> col(n - 1, 1);
  for (Eigen::Index r = 0, k = 0; r < n; ++r)
    if (r != idx.j) col(k++, 0) = a(r, idx.i);

  const Matrix<S> coupling = kind == Product::RC ? rc(rc(row, minor_inv), col) : cr(cr(col, minor_inv), row);
  return S(a(idx.j, idx.i) - coupling(0, 0));
}

/// All n^2 quasideterminants; entries whose minor is singular are nullopt.
template <typename S>
class QuasidetMatrix {
 public:
  explicit QuasidetMatrix(Eigen::Index n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}

  Eigen::Index size() const { return n_; }
  const std::optional<S>& operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }
  std::optional<S>& operator()(Eigen::Index i, Eigen::Index j) {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }

 private:
  Eigen::Index n_;
  std::vector<std::optional<S>> entries_;
};

template <typename D>
QuasidetMatrix<typename D::Scalar> quasidet_matrix(const Eigen::MatrixBase<D>& a, Product kind,
                                                   double tol = kDefaultTol) {
  using S = typename D::Scalar;
  if (a.rows() != a.cols()) throw ShapeError("quasidet needs a square matrix, got " + shape_string(a.rows(), a.cols()));
  QuasidetMatrix<S> out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      try {
        out(i, j) = quasidet(a, {i, j}, kind, tol);
      } catch (const UndefinedQuasideterminant&) {
        out(i, j).reset();
      }
    }
  }
  return out;
}

/// The four 2 x 2 quasideterminants written out as closed formulas, with entry
/// (i, j) placed so that it inverts to entry (i, j) of the inverse. Division by a
/// zero entry makes the corresponding formula undefined (nullopt).
///
/// RC:  [ a11 - a12 a22^-1 a21    a21 - a22 a12^-1 a11 ]
///      [ a12 - a11 a21^-1 a22    a22 - a21 a11^-1 a12 ]
/// CR:  [ a11 - a21 a22^-1 a12    a21 - a11 a12^-1 a22 ]
///      [ a12 - a22 a21^-1 a11    a22 - a12 a11^-1 a21 ]
template <typename D>
QuasidetMatrix<typename D::Scalar> quasidet_2x2_closed_form(const Eigen::MatrixBase<D>& a, Product kind) {
  using S = typename D::Scalar;
  if (a.rows() != 2 || a.cols() != 2) throw ShapeError("closed form needs a 2x2 matrix");
  const S a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
  auto term = [](const S& base, const S& left, const S& mid, const S& right) -> std::optional<S> {
    if (is_exact_zero(mid)) return std::nullopt;
    return S(base - left * scalar_inverse(mid) * right);
  };
  QuasidetMatrix<S> q(2);
  if (kind == Product::RC) {
    q(0, 0) = term(a11, a12, a22, a21);
    q(0, 1) = term(a21, a22, a12, a11);
    q(1, 0) = term(a12, a11, a21, a22);
    q(1, 1) = term(a22, a21, a11, a12);
  } else {
    q(0, 0) = term(a11, a21, a22, a12);
    q(0, 1) = term(a21, a11, a12, a22);
    q(1, 0) = term(a12, a22, a21, a11);
    q(1, 1) = term(a22, a12, a11, a21);
  }
  return q;
}

}  // namespace skewla
