#pragma once

#include "skewla/algebra.hpp"
#include "skewla/elimination.hpp"

#include <vector>

namespace skewla {

/// Side on which the eigenvalue multiplies the eigenvector (left: b v, right: v b).
/// For eigenspaces and basis changes it also names the vector-space side.
enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// Whether the eigenvector of a (side, kind) pair is a row. Left-RC and right-CR
/// eigenvectors are rows; right-RC and left-CR eigenvectors are columns.
inline bool eigenvector_is_row(Side side, Product kind) {
  return (side == Side::Left) == (kind == Product::RC);
}

/// Candidate eigenpair. The defining equality is
///   left:  v * a = b v        right: a * v = v b
/// with * the product `kind`.
template <typename S>
struct EigenPair {
  S value;
  Matrix<S> vector;
  Side side;
  Product kind;
};

template <typename S>
void check_eigen_shapes(Eigen::Index n, const EigenPair<S>& p) {
  const bool row = eigenvector_is_row(p.side, p.kind);
  const bool ok = row ? (p.vector.rows() == 1 && p.vector.cols() == n)
                      : (p.vector.rows() == n && p.vector.cols() == 1);
  if (!ok) {
    throw ShapeError(std::string(to_string(p.side)) + "-" + to_string(p.kind) + " eigenvector must be a " +
                     (row ? "1x" : "") + std::to_string(n) + (row ? "" : "x1") + " " + (row ? "row" : "column") +
                     ", got " + shape_string(p.vector.rows(), p.vector.cols()));
  }
}

/// Difference of the two sides of the defining equality.
template <typename D, typename S = typename D::Scalar>
Matrix<S> eigen_residual(const Eigen::MatrixBase<D>& a, const EigenPair<S>& p) {
  if (a.rows() != a.cols()) throw ShapeError("eigen check needs a square matrix, got " + shape_string(a.rows(), a.cols()));
  check_eigen_shapes(a.rows(), p);
  if (p.side == Side::Left) return mul(p.vector, a, p.kind) - left_scale(p.value, p.vector);
  return mul(a, p.vector, p.kind) - right_scale(p.vector, p.value);
}

/// True iff the defining equality holds for a nonzero vector (exactly, or within
/// tol relative to |a||v| + |b||v| in float mode).
template <typename D, typename S = typename D::Scalar>
bool eigen_check(const Eigen::MatrixBase<D>& a, const EigenPair<S>& p, double tol = kDefaultTol) {
  const Matrix<S> res = eigen_residual(a, p);
  if (is_zero_matrix(p.vector)) return false;
  const double vmag = max_magnitude(p.vector);
  const double scale = (max_magnitude(a) * static_cast<double>(a.rows()) + scalar_magnitude(p.value)) * vmag;
  for (Eigen::Index i = 0; i < res.rows(); ++i)
    for (Eigen::Index j = 0; j < res.cols(); ++j)
      if (!residual_vanishes<S>(res(i, j), scale, tol)) return false;
  return true;
}

/// b is an eigenvalue of f under `kind` iff f - b E_n is kind-singular.
template <typename D, typename S = typename D::Scalar>
bool is_matrix_eigenvalue(const Eigen::MatrixBase<D>& f, const S& b, Product kind, double tol = kDefaultTol) {
  if (f.rows() != f.cols()) throw ShapeError("eigenvalue test needs a square matrix");
  const Matrix<S> shifted = f - left_scale(b, identity<S>(f.rows()));
  return is_singular(shifted, kind, tol);
}

namespace detail {

template <typename S>
using CoeffMatrix = Matrix<coeff_t<S>>;

/// Real coordinates of a matrix, flattened row-major then by basis component.
template <typename S>
std::vector<coeff_t<S>> real_coords(const Matrix<S>& m) {
  constexpr int dim = ScalarTraits<S>::real_dim;
  std::vector<coeff_t<S>> out;
  out.reserve(static_cast<std::size_t>(m.size() * dim));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (int r = 0; r < dim; ++r) out.push_back(ScalarTraits<S>::coord(m(i, j), r));
  return out;
}

template <typename S>
Matrix<S> from_real_coords(const CoeffMatrix<S>& x, Eigen::Index rows, Eigen::Index cols) {
  constexpr int dim = ScalarTraits<S>::real_dim;
  Matrix<S> out = Matrix<S>::Zero(rows, cols);
  Eigen::Index at = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      for (int r = 0; r < dim; ++r) out(i, j) += S(ScalarTraits<S>::basis(r) * S(x(at++, 0)));
  return out;
}

/// Kernel of a real-linear map given on matrices of shape rows x cols.
template <typename S, typename Map>
std::vector<CoeffMatrix<S>> real_kernel(Map&& map, Eigen::Index rows, Eigen::Index cols, double tol) {
  using C = coeff_t<S>;
  constexpr int dim = ScalarTraits<S>::real_dim;
  const Eigen::Index unknowns = rows * cols * dim;
  Matrix<C> system;
  for (Eigen::Index u = 0; u < unknowns; ++u) {
    Matrix<S> probe = Matrix<S>::Zero(rows, cols);
    const Eigen::Index entry = u / dim;
    probe(entry / cols, entry % cols) = ScalarTraits<S>::basis(static_cast<int>(u % dim));
    const auto image = real_coords<S>(map(probe));
    if (system.size() == 0) system = Matrix<C>::Zero(static_cast<Eigen::Index>(image.size()), unknowns);
    for (std::size_t r = 0; r < image.size(); ++r) system(static_cast<Eigen::Index>(r), u) = image[r];
  }
  const Matrix<C> zero = Matrix<C>::Zero(system.rows(), 1);
  return solve_system<false>(system, zero, tol).kernel;
}

/// Real rank of a set of real coordinate vectors.
template <typename C>
int real_span_rank(const std::vector<Matrix<C>>& vecs, double tol) {
  if (vecs.empty()) return 0;
  Matrix<C> m(vecs.front().rows(), static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t k = 0; k < vecs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vecs[k];
  return rank(m, Product::RC, tol);
}

template <typename S>
CoeffMatrix<S> as_coord_column(const Matrix<S>& m) {
  const auto coords = real_coords<S>(m);
  CoeffMatrix<S> out(static_cast<Eigen::Index>(coords.size()), 1);
  for (std::size_t k = 0; k < coords.size(); ++k) out(static_cast<Eigen::Index>(k), 0) = coords[k];
  return out;
}

}  // namespace detail

/// Real basis of Z(A, b), the centralizer of b.
template <typename S>
std::vector<S> centralizer_basis(const S& b, double tol = kDefaultTol) {
  Matrix<S> bm(1, 1);
  bm(0, 0) = b;
  const auto kernel = detail::real_kernel<S>(
      [&](const Matrix<S>& c) { return Matrix<S>(rc(c, bm) - rc(bm, c)); }, 1, 1, tol);
  std::vector<S> out;
  for (const auto& k : kernel) out.push_back(detail::from_real_coords<S>(k, 1, 1)(0, 0));
  return out;
}

/// Basis of the solution set of the (side, kind) eigen equality for value b.
///
/// The equalities are only real-linear in v. Their solution set is closed under
/// v -> v z (right variants) or v -> z v (left variants) for z in Z(A, b), so the
/// basis returned is a basis over that centralizer acting on the eigenvalue's side.
/// For central b this is an ordinary A-basis. An empty basis means b is not an
/// eigenvalue of that kind.
template <typename D, typename S = typename D::Scalar>
std::vector<Matrix<S>> eigenspace(const Eigen::MatrixBase<D>& f, const S& b, Side side, Product kind,
                                  double tol = kDefaultTol) {
  const Eigen::Index n = f.rows();
  if (n != f.cols()) throw ShapeError("eigenspace needs a square matrix");
  const Matrix<S> a = f;
  const bool row = eigenvector_is_row(side, kind);
  const Eigen::Index rows = row ? 1 : n;
  const Eigen::Index cols = row ? n : 1;

  auto residual = [&](const Matrix<S>& v) { return eigen_residual(a, EigenPair<S>{b, v, side, kind}); };
  const auto solutions = detail::real_kernel<S>(residual, rows, cols, tol);
  const auto centralizer = centralizer_basis(b, tol);

  using C = coeff_t<S>;
  std::vector<Matrix<C>> span;
  std::vector<Matrix<S>> basis;
  for (const auto& w : solutions) {
    auto candidate = span;
    candidate.push_back(w);
    if (detail::real_span_rank(candidate, tol) == static_cast<int>(span.size())) continue;
    const Matrix<S> v = detail::from_real_coords<S>(w, rows, cols);
    basis.push_back(v);
    for (const S& z : centralizer) {
      const Matrix<S> moved = side == Side::Right ? right_scale(v, z) : left_scale(z, v);
      auto grown = span;
      grown.push_back(detail::as_coord_column<S>(moved));
      if (detail::real_span_rank(grown, tol) > static_cast<int>(span.size())) span = std::move(grown);
    }
  }
  return basis;
}

/// A pair (f, g) with g kind-nonsingular.
template <typename S>
struct PairSpec {
  Matrix<S> f;
  Matrix<S> g;
};

/// How the eigenvalue is transported through g:
///   ScaledRight: f - (g b) * g^{-1}      ScaledLeft: f - g^{-1} * (b g)
/// where g b right-multiplies every entry of g by b and b g left-multiplies.
enum class PairForm { ScaledRight, ScaledLeft };

inline PairForm default_pair_form(Product kind) {
  return kind == Product::RC ? PairForm::ScaledRight : PairForm::ScaledLeft;
}

template <typename S>
Matrix<S> pair_matrix(const PairSpec<S>& pair, const S& b, Product kind, PairForm form, double tol = kDefaultTol) {
  const Eigen::Index n = pair.f.rows();
  if (n != pair.f.cols() || pair.g.rows() != n || pair.g.cols() != n) {
    throw ShapeError("pair matrices must be square of equal size");
  }
  Matrix<S> ginv;
  try {
    ginv = inverse(pair.g, kind, tol);
  } catch (const SingularMatrix& e) {
    throw PreconditionError("pair matrix g is " + std::string(to_string(kind)) + "-singular (rank " +
                            std::to_string(e.rank()) + ")");
  }
  const Matrix<S> transported = form == PairForm::ScaledRight ? mul(right_scale(pair.g, b), ginv, kind)
                                                              : mul(ginv, left_scale(b, pair.g), kind);
  return pair.f - transported;
}

/// b is an eigenvalue of the pair (f, g) iff the transported difference is
/// kind-singular. With the default form this reads f - (g b) g^{-1} for RC and
/// f - g^{-1} (b g) for CR.
template <typename S>
bool pair_eigen_check(const PairSpec<S>& pair, const S& b, Product kind, PairForm form, double tol = kDefaultTol) {
  return is_singular(pair_matrix(pair, b, kind, form, tol), kind, tol);
}

template <typename S>
bool pair_eigen_check(const PairSpec<S>& pair, const S& b, Product kind, double tol = kDefaultTol) {
  return pair_eigen_check(pair, b, kind, default_pair_form(kind), tol);
}

template <typename S>
class NotDiagonalizable : public DomainError {
 public:
  explicit NotDiagonalizable(Matrix<S> result)
      : DomainError("not_diagonalizable", "transformed matrix is not diagonal"), result_(std::move(result)) {}
  const Matrix<S>& result() const { return result_; }

 private:
  Matrix<S> result_;
};

/// u * a * u^{-1} (left) or u^{-1} * a * u (right) under `kind`, required to be
/// diagonal. Throws NotDiagonalizable<S> with the transformed matrix otherwise.
template <typename DA, typename DU, typename S = typename DA::Scalar>
Matrix<S> diagonalize_via(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DU>& u, Product kind, Side side,
                          double tol = kDefaultTol) {
  if (a.rows() != a.cols() || u.rows() != a.rows() || u.cols() != a.cols()) {
    throw ShapeError("diagonalize_via needs n x n matrices");
  }
  Matrix<S> uinv;
  try {
    uinv = inverse(u, kind, tol);
  } catch (const SingularMatrix& e) {
    throw PreconditionError("transformation u is singular (rank " + std::to_string(e.rank()) + ")");
  }
  Matrix<S> out = side == Side::Left ? mul(mul(u, a, kind), uinv, kind) : mul(mul(uinv, a, kind), u, kind);
  if (!is_diagonal(out, tol)) throw NotDiagonalizable<S>(std::move(out));
  return out;
}

/// Matrix with prescribed eigen data: u^{-1} d u (left) or u d u^{-1} (right).
/// The rows or columns of u (per eigenvector_is_row) are then eigenvectors for the
/// diagonal entries of d.
template <typename S>
Matrix<S> constructed_matrix(const Matrix<S>& u, const Matrix<S>& d, Side side, Product kind, double tol = kDefaultTol) {
  const Matrix<S> uinv = inverse(u, kind, tol);
  return side == Side::Left ? mul(mul(uinv, d, kind), u, kind) : mul(mul(u, d, kind), uinv, kind);
}

template <typename S>
std::vector<EigenPair<S>> constructed_eigenpairs(const Matrix<S>& u, const Matrix<S>& d, Side side, Product kind) {
  std::vector<EigenPair<S>> out;
  const bool row = eigenvector_is_row(side, kind);
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    Matrix<S> v = row ? Matrix<S>(u.row(i)) : Matrix<S>(u.col(i));
    out.push_back({S(d(i, i)), std::move(v), side, kind});
  }
  return out;
}

/// Moves an eigenpair along the similarity class of its value:
///   left:  (c b c^{-1}, c v)      right: (c^{-1} b c, v c)
/// The result satisfies the same defining equality for the same matrix.
template <typename S>
EigenPair<S> conjugate_eigen(const EigenPair<S>& p, const S& c) {
  if (is_exact_zero(c)) throw PreconditionError("conjugating element must be nonzero");
  const S cinv = scalar_inverse(c);
  if (p.side == Side::Left) return {S(c * p.value * cinv), left_scale(c, p.vector), p.side, p.kind};
  return {S(cinv * p.value * c), right_scale(p.vector, c), p.side, p.kind};
}

template <typename D, typename S = typename D::Scalar>
bool commutes_with_all(const S& c, const Eigen::MatrixBase<D>& a, double tol = kDefaultTol) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!in_center(c, S(a(i, j)), tol)) return false;
  return true;
}

/// Keeps the value and scales the vector on the side opposite the eigenvalue
/// (v c for left pairs, c v for right pairs), then re-checks the equality. The
/// outcome matches whether c commutes with every entry of a.
template <typename D, typename S = typename D::Scalar>
bool scaling_preserves(const EigenPair<S>& p, const S& c, const Eigen::MatrixBase<D>& a, double tol = kDefaultTol) {
  EigenPair<S> scaled = p;
  scaled.vector = p.side == Side::Left ? right_scale(p.vector, c) : left_scale(c, p.vector);
  return eigen_check(a, scaled, tol);
}

/// Linear independence with coefficients on the given side: sum a_i v_i (left)
/// or sum v_i a_i (right). Vectors of any common shape are flattened.
template <typename S>
bool independent(const std::vector<Matrix<S>>& vectors, Side side, double tol = kDefaultTol) {
  if (vectors.empty()) return true;
  const Eigen::Index len = vectors.front().size();
  Matrix<S> stacked(static_cast<Eigen::Index>(vectors.size()), len);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto& v = vectors[k];
    if (v.rows() != vectors.front().rows() || v.cols() != vectors.front().cols()) {
      throw ShapeError("independence test needs vectors of equal shape");
    }
    for (Eigen::Index e = 0; e < len; ++e) stacked(static_cast<Eigen::Index>(k), e) = v(e / v.cols(), e % v.cols());
  }
  // Left-combinations of rows: RC row rank. Right-combinations: RC column rank,
  // which is the RC rank of the matrix whose columns are the vectors.
  const Matrix<S> m = side == Side::Left ? stacked : Matrix<S>(stacked.transpose());
  return rank(m, Product::RC, tol) == static_cast<int>(vectors.size());
}

/// Matrix of an endomorphism after the passive transformation g:
/// g f g^{-1} for left spaces, g^{-1} f g for right spaces.
template <typename S>
Matrix<S> basis_change_endo(const Matrix<S>& f, const Matrix<S>& g, Product kind, Side space_side,
                            double tol = kDefaultTol) {
  Matrix<S> ginv;
  try {
    ginv = inverse(g, kind, tol);
  } catch (const SingularMatrix& e) {
    throw PreconditionError("passive transformation is singular (rank " + std::to_string(e.rank()) + ")");
  }
  return space_side == Side::Left ? mul(mul(g, f, kind), ginv, kind) : mul(mul(ginv, f, kind), g, kind);
}

/// Matrix of the similarity transformation E_n b after the basis change g:
/// (g b) * g^{-1}.
template <typename S>
Matrix<S> similarity_matrix(const Matrix<S>& g, const S& b, Product kind, double tol = kDefaultTol) {
  Matrix<S> ginv;
  try {
    ginv = inverse(g, kind, tol);
  } catch (const SingularMatrix& e) {
    throw PreconditionError("passive transformation is singular (rank " + std::to_string(e.rank()) + ")");
  }
  return mul(right_scale(g, b), ginv, kind);
}

template <typename S>
struct SpectrumEntry {
  EigenPair<S> pair;
  /// The defining equality holds.
  bool verified = false;
  /// f - b E_n is kind-singular.
  bool matrix_singular = false;
  /// The pair (f, u) is singular in the transport form matching the side
  /// (left: f - u^{-1}(b u), right: f - (u b) u^{-1}).
  bool pair_singular = false;
};

template <typename S>
struct SpectrumReport {
  Matrix<S> matrix;
  Side side;
  Product kind;
  std::vector<SpectrumEntry<S>> entries;
};

/// Builds the matrix with eigen data (u, d) and verifies every eigenpair.
template <typename S>
SpectrumReport<S> spectrum(const Matrix<S>& u, const Matrix<S>& d, Side side, Product kind, double tol = kDefaultTol) {
  if (u.rows() != u.cols() || d.rows() != u.rows() || d.cols() != u.cols()) {
    throw ShapeError("spectrum construction needs n x n matrices u and d");
  }
  if (!is_diagonal(d, tol)) throw PreconditionError("d must be diagonal");
  if (is_singular(u, kind, tol)) throw PreconditionError("u must be nonsingular");
  SpectrumReport<S> report{constructed_matrix(u, d, side, kind, tol), side, kind, {}};
  const PairSpec<S> pair{report.matrix, u};
  const PairForm form = side == Side::Left ? PairForm::ScaledLeft : PairForm::ScaledRight;
  for (auto& p : constructed_eigenpairs(u, d, side, kind)) {
    SpectrumEntry<S> e{p};
    e.verified = eigen_check(report.matrix, p, tol);
    e.matrix_singular = is_matrix_eigenvalue(report.matrix, p.value, kind, tol);
    e.pair_singular = pair_eigen_check(pair, p.value, kind, form, tol);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace skewla
