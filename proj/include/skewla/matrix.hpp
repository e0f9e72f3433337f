#pragma once

#include "skewla/errors.hpp"
#include "skewla/scalar_traits.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace skewla {

/// Dense matrix over a division-algebra scalar. Entry (i, j) is a^i_j: i selects
/// the row, j the column.
template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// The two matrix products of the biring.
///   RC (row-column):  (a b)^i_j = sum_k a^i_k b^k_j
///   CR (column-row):  (a b)^i_j = sum_k a^k_j b^i_k
/// In both, each summand keeps the a-factor on the left.
enum class Product { RC, CR };

inline Product other(Product p) { return p == Product::RC ? Product::CR : Product::RC; }
inline const char* to_string(Product p) { return p == Product::RC ? "rc" : "cr"; }

inline std::string shape_string(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <typename S>
Matrix<S> identity(Eigen::Index n) {
  return Matrix<S>::Identity(n, n);
}

template <typename S>
Matrix<S> diagonal(const std::vector<S>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Matrix<S> d = Matrix<S>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

/// Row-column product.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> rc(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (a.cols() != b.rows()) {
    throw ShapeError("rc product needs a.cols == b.rows, got " + shape_string(a.rows(), a.cols()) +
                     " and " + shape_string(b.rows(), b.cols()));
  }
  Matrix<S> out = Matrix<S>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

/// Column-row product. The result has b.rows() rows and a.cols() columns.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> cr(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (a.rows() != b.cols()) {
    throw ShapeError("cr product needs a.rows == b.cols, got " + shape_string(a.rows(), a.cols()) +
                     " and " + shape_string(b.rows(), b.cols()));
  }
  Matrix<S> out = Matrix<S>::Zero(b.rows(), a.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      S acc(0);
      for (Eigen::Index k = 0; k < a.rows(); ++k) acc += a(k, j) * b(i, k);
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> mul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                                Product kind) {
  return kind == Product::RC ? rc(a, b) : cr(a, b);
}

/// a^0 = E_n, a^k = a^{k-1} * a under the chosen product.
template <typename D>
Matrix<typename D::Scalar> power(const Eigen::MatrixBase<D>& a, int k, Product kind) {
  using S = typename D::Scalar;
  if (a.rows() != a.cols()) {
    throw ShapeError("power needs a square matrix, got " + shape_string(a.rows(), a.cols()));
  }
  if (k < 0) throw PreconditionError("power exponent must be non-negative");
  Matrix<S> out = identity<S>(a.rows());
  for (int step = 0; step < k; ++step) out = mul(out, a, kind);
  return out;
}

/// b * M: every entry multiplied by b on the left.
template <typename D>
Matrix<typename D::Scalar> left_scale(const typename D::Scalar& b, const Eigen::MatrixBase<D>& m) {
  using S = typename D::Scalar;
  Matrix<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = b * m(i, j);
  return out;
}

/// M * b: every entry multiplied by b on the right.
template <typename D>
Matrix<typename D::Scalar> right_scale(const Eigen::MatrixBase<D>& m, const typename D::Scalar& b) {
  using S = typename D::Scalar;
  Matrix<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * b;
  return out;
}

template <typename D>
double max_magnitude(const Eigen::MatrixBase<D>& m) {
  double out = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, scalar_magnitude(m(i, j)));
  return out;
}

template <typename D>
bool is_zero_matrix(const Eigen::MatrixBase<D>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_exact_zero(m(i, j))) return false;
  return true;
}

/// Entrywise mode-aware equality. Float mode compares each entry against
/// tol * (1 + max magnitude of both operands).
template <typename DA, typename DB>
bool approx_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                  double tol = kDefaultTol) {
  using S = typename DA::Scalar;
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    const double scale = std::max(max_magnitude(a), max_magnitude(b));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (!residual_vanishes<S>(S(a(i, j) - b(i, j)), scale, tol)) return false;
    return true;
  }
}

template <typename D>
bool is_diagonal(const Eigen::MatrixBase<D>& m, double tol = kDefaultTol) {
  using S = typename D::Scalar;
  const double scale = max_magnitude(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && !residual_vanishes<S>(m(i, j), scale, tol)) return false;
  return true;
}

/// Converts the scalar type entrywise (e.g. exact quaternions to float ones).
template <typename To, typename D, typename F>
Matrix<To> cast_matrix(const Eigen::MatrixBase<D>& m, F&& convert) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = convert(m(i, j));
  return out;
}

}  // namespace skewla
