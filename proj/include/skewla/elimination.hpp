#pragma once

#include "skewla/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace skewla {

/// Where the unknown vector sits in a linear system: v * a = y (Left) or
/// a * v = y (Right), under the chosen product.
enum class VectorSide { Left, Right };

template <typename S>
struct SolveResult {
  /// One solution of the system (zero for homogeneous systems).
  Matrix<S> particular;
  /// Basis of the homogeneous solutions. For systems whose unknowns carry
  /// coefficients on the right of the matrix entries (a^i_k v^k) the set is a
  /// right A-space; otherwise a left A-space.
  std::vector<Matrix<S>> kernel;
};

namespace detail {

/// Row reduction over A or over the opposite ring A^op.
///
/// With Reversed = false the unknowns of the system appear as sum_k m^r_k v_k and
/// rows are combined with left multipliers (row <- p^{-1} row, row <- row - m row).
/// With Reversed = true the unknowns appear as sum_k v_k m^r_k; the same routine
/// runs in A^op, which turns every multiplier into a right multiplier.
template <bool Reversed, typename S>
S ring_mul(const S& x, const S& y) {
  if constexpr (Reversed) {
    return y * x;
  } else {
    return x * y;
  }
}

template <typename S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<Eigen::Index> pivot_cols;
};

/// Reduced row echelon form. Pivots are searched only in the first `coef_cols`
/// columns, so an augmented right-hand side rides along untouched by pivoting.
///
/// Exact mode: first nonzero entry in the column. Float mode: the entry of largest
/// magnitude; it counts as zero when below tol * (max magnitude of its original row).
template <bool Reversed, typename S>
Echelon<S> reduce(Matrix<S> m, Eigen::Index coef_cols, double tol) {
  const Eigen::Index rows = m.rows();
  std::vector<double> row_scale(static_cast<std::size_t>(rows), 0.0);
  if constexpr (!is_exact_v<S>) {
    for (Eigen::Index r = 0; r < rows; ++r)
      row_scale[static_cast<std::size_t>(r)] = max_magnitude(m.row(r).head(coef_cols));
  }

  std::vector<Eigen::Index> pivots;
  Eigen::Index prow = 0;
  for (Eigen::Index col = 0; col < coef_cols && prow < rows; ++col) {
    std::optional<Eigen::Index> best;
    if constexpr (is_exact_v<S>) {
      for (Eigen::Index r = prow; r < rows; ++r) {
        if (!is_exact_zero(m(r, col))) {
          best = r;
          break;
        }
      }
    } else {
      double best_mag = 0.0;
      for (Eigen::Index r = prow; r < rows; ++r) {
        const double mag = scalar_magnitude(m(r, col));
        if (mag > tol * row_scale[static_cast<std::size_t>(r)] && mag > best_mag) {
          best = r;
          best_mag = mag;
        }
      }
    }
    if (!best) {
      if constexpr (!is_exact_v<S>) {
        for (Eigen::Index r = prow; r < rows; ++r) m(r, col) = S(0);
      }
      continue;
    }
    if (*best != prow) {
      m.row(prow).swap(m.row(*best));
      std::swap(row_scale[static_cast<std::size_t>(prow)], row_scale[static_cast<std::size_t>(*best)]);
    }

    const S pinv = scalar_inverse(S(m(prow, col)));
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(prow, c) = ring_mul<Reversed>(pinv, S(m(prow, c)));
    m(prow, col) = S(1);

    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == prow || is_exact_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        m(r, c) -= ring_mul<Reversed>(factor, S(m(prow, c)));
      }
      m(r, col) = S(0);
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

/// Solves sum_k m^r_k v_k = y_r (Reversed = false) or sum_k v_k m^r_k = y_r
/// (Reversed = true). Unknowns and right-hand side are columns.
template <bool Reversed, typename S>
SolveResult<S> solve_system(const Matrix<S>& m, const Matrix<S>& y, double tol) {
  const Eigen::Index n = m.cols();
  Matrix<S> aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = y.col(0);
  const auto ech = reduce<Reversed>(std::move(aug), n, tol);
  const auto& r = ech.reduced;

  const auto rank = static_cast<Eigen::Index>(ech.pivot_cols.size());
  const double scale = std::max(max_magnitude(m), max_magnitude(y));
  for (Eigen::Index row = rank; row < r.rows(); ++row) {
    if (!residual_vanishes<S>(r(row, n), scale, tol)) {
      throw NoSolution("inconsistent linear system (rank " + std::to_string(rank) + ")");
    }
  }

  SolveResult<S> out;
  out.particular = Matrix<S>::Zero(n, 1);
  for (Eigen::Index p = 0; p < rank; ++p) out.particular(ech.pivot_cols[static_cast<std::size_t>(p)], 0) = r(p, n);

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Matrix<S> v = Matrix<S>::Zero(n, 1);
    v(f, 0) = S(1);
    for (Eigen::Index p = 0; p < rank; ++p) v(ech.pivot_cols[static_cast<std::size_t>(p)], 0) = -r(p, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Number of pivots of non-commutative elimination under the product. RC reduces
/// rows with left multipliers; CR is the RC rank of the transpose.
template <typename D>
int rank(const Eigen::MatrixBase<D>& a, Product kind, double tol = kDefaultTol) {
  using S = typename D::Scalar;
  Matrix<S> m = kind == Product::RC ? Matrix<S>(a) : Matrix<S>(a.transpose());
  const Eigen::Index cols = m.cols();
  return static_cast<int>(detail::reduce<false>(std::move(m), cols, tol).pivot_cols.size());
}

template <typename D>
bool is_singular(const Eigen::MatrixBase<D>& a, Product kind, double tol = kDefaultTol) {
  if (a.rows() != a.cols()) {
    throw ShapeError("singularity needs a square matrix, got " + shape_string(a.rows(), a.cols()));
  }
  return rank(a, kind, tol) < a.rows();
}

/// Two-sided inverse under the product: mul(a, inv) = mul(inv, a) = E_n.
/// RC uses Gauss-Jordan on [a | E]; CR is transpose(inverse(transpose(a), RC)).
/// Throws SingularMatrix carrying the achieved rank.
template <typename D>
Matrix<typename D::Scalar> inverse(const Eigen::MatrixBase<D>& a, Product kind,
                                   double tol = kDefaultTol) {
  using S = typename D::Scalar;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ShapeError("inverse needs a square matrix, got " + shape_string(n, a.cols()));
  if (kind == Product::CR) return inverse(Matrix<S>(a.transpose()), Product::RC, tol).transpose();

  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity<S>(n);
  auto ech = detail::reduce<false>(std::move(aug), n, tol);
  const auto r = static_cast<int>(ech.pivot_cols.size());
  if (r < n) {
    throw SingularMatrix(r, "matrix is " + std::string(to_string(kind)) + "-singular (rank " +
                                std::to_string(r) + " < " + std::to_string(n) + ")");
  }
  return ech.reduced.rightCols(n);
}

/// Solves v * a = y (VectorSide::Left) or a * v = y (VectorSide::Right) under the
/// product. Shapes follow the product: for RC, v is a row on the left and a column
/// on the right; for CR, v is a column on the left and a row on the right.
template <typename DA, typename DY>
SolveResult<typename DA::Scalar> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DY>& y,
                                       VectorSide side, Product kind, double tol = kDefaultTol) {
  using S = typename DA::Scalar;
  // Every case reduces to sum_k m^r_k v_k = y_r or sum_k v_k m^r_k = y_r with
  // m = a or a^T; vectors are handled as columns and transposed back.
  const bool transpose_matrix = (kind == Product::RC) == (side == VectorSide::Left);
  const bool vector_is_row = (kind == Product::RC) == (side == VectorSide::Left);
  const bool unknown_on_left = side == VectorSide::Left;

  const Matrix<S> m = transpose_matrix ? Matrix<S>(a.transpose()) : Matrix<S>(a);
  const Matrix<S> rhs = vector_is_row ? Matrix<S>(y.transpose()) : Matrix<S>(y);
  if (rhs.cols() != 1 || rhs.rows() != m.rows()) {
    throw ShapeError(std::string("solve: right-hand side ") + shape_string(y.rows(), y.cols()) +
                     " does not match matrix " + shape_string(a.rows(), a.cols()) + " under " +
                     to_string(kind));
  }
  auto res = unknown_on_left ? detail::solve_system<true>(m, rhs, tol)
                             : detail::solve_system<false>(m, rhs, tol);
  if (vector_is_row) {
    res.particular.transposeInPlace();
    for (auto& v : res.kernel) v.transposeInPlace();
  }
  return res;
}

}  // namespace skewla
