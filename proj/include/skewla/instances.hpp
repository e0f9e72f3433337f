#pragma once

#include "skewla/ode.hpp"
#include "skewla/random.hpp"

namespace skewla {

/// A matrix with known eigen data: a is built from (u, d) for one (side, kind).
template <typename S>
struct EigenInstance {
  Matrix<S> u;
  Matrix<S> d;
  Matrix<S> a;
  Side side;
  Product kind;
  std::vector<EigenPair<S>> pairs;
};

/// Random instance with non-real diagonal entries in d and a random nonsingular u.
template <typename T>
EigenInstance<Quaternion<T>> random_eigen_instance(Random& rng, Eigen::Index n, Side side, Product kind) {
  using Q = Quaternion<T>;
  EigenInstance<Q> inst;
  inst.u = random_invertible<Q>(rng, n, kind);
  inst.d = Matrix<Q>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) inst.d(i, i) = random_nonreal<T>(rng);
  inst.a = constructed_matrix(inst.u, inst.d, side, kind);
  inst.side = side;
  inst.kind = kind;
  inst.pairs = constructed_eigenpairs(inst.u, inst.d, side, kind);
  return inst;
}

/// Element alpha + beta * b of the centralizer of a non-real b.
template <typename T>
Quaternion<T> random_in_centralizer(Random& rng, const Quaternion<T>& b) {
  const T alpha = random_scalar<T>(rng, 1.0);
  const T beta = random_scalar<T>(rng, 1.0);
  return Quaternion<T>(alpha) + b.imag() * Quaternion<T>(beta);
}

/// Input of a closed-form ODE solution: system matrix, value b and column c.
template <typename S>
struct OdeInstance {
  Matrix<S> a;
  S b;
  Matrix<S> c;
  SolutionForm form;
};

/// Fills in the first column of a so that c * a = c b (right_exp) or
/// c * a = b c (left_exp) holds under the CR product:
///   a^i_1 = (c^1)^{-1} (target^i - sum_{k>1} c^k a^i_k).
template <typename S>
void complete_ode_matrix(Matrix<S>& a, const S& b, const Matrix<S>& c, SolutionForm form) {
  const S c1inv = scalar_inverse(S(c(0, 0)));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    S acc = form == SolutionForm::LeftExp ? S(b * c(i, 0)) : S(c(i, 0) * b);
    for (Eigen::Index k = 1; k < a.cols(); ++k) acc -= c(k, 0) * a(i, k);
    a(i, 0) = c1inv * acc;
  }
}

enum class OdeInstanceKind {
  /// Entries of a commute with b.
  Center,
  /// c = p c' with c' in Z(A, b); entries of a generic.
  Eigencolumn,
  /// Left-CR eigencolumn datum for the left_exp form.
  LeftExp,
  /// Right datum holds but neither center condition does.
  Violating,
};

/// Draws from `draw` until the magnitude reaches `floor`.
template <typename F>
auto draw_at_least(double floor, F&& draw) {
  for (;;) {
    auto s = draw();
    if (scalar_magnitude(s) >= floor) return s;
  }
}

template <typename T>
OdeInstance<Quaternion<T>> random_ode_instance(Random& rng, Eigen::Index n, OdeInstanceKind kind) {
  using Q = Quaternion<T>;
  OdeInstance<Q> inst;
  inst.b = random_nonreal<T>(rng, 1.0);
  inst.form = kind == OdeInstanceKind::LeftExp ? SolutionForm::LeftExp : SolutionForm::RightExp;
  inst.c = Matrix<Q>(n, 1);
  inst.a = random_matrix<Q>(rng, n, n, 1.0);

  switch (kind) {
    case OdeInstanceKind::Center: {
      const Q p = draw_at_least(0.25, [&] { return random_scalar<Q>(rng, 1.0); });
      for (Eigen::Index i = 0; i < n; ++i) inst.c(i, 0) = random_in_centralizer(rng, inst.b);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k) inst.a(i, k) = random_in_centralizer(rng, inst.b);
      inst.c(0, 0) = draw_at_least(0.25, [&] { return random_in_centralizer(rng, inst.b); });
      complete_ode_matrix(inst.a, inst.b, inst.c, inst.form);
      inst.c = left_scale(p, inst.c);
      break;
    }
    case OdeInstanceKind::Eigencolumn: {
      const Q p = draw_at_least(0.25, [&] { return random_scalar<Q>(rng, 1.0); });
      for (Eigen::Index i = 0; i < n; ++i) inst.c(i, 0) = p * random_in_centralizer(rng, inst.b);
      inst.c(0, 0) = p * draw_at_least(0.25, [&] { return random_in_centralizer(rng, inst.b); });
      complete_ode_matrix(inst.a, inst.b, inst.c, inst.form);
      break;
    }
    case OdeInstanceKind::LeftExp:
    case OdeInstanceKind::Violating: {
      for (Eigen::Index i = 0; i < n; ++i) inst.c(i, 0) = random_nonzero<Q>(rng, 1.0);
      inst.c(0, 0) = draw_at_least(0.25, [&] { return random_scalar<Q>(rng, 1.0); });
      complete_ode_matrix(inst.a, inst.b, inst.c, inst.form);
      break;
    }
  }
  return inst;
}

/// The fixed violating example: a = [[i, 0], [-k - j, 1]], b = i, c = (1, j).
/// c * a = c b holds, b does not commute with -k - j, and j is not in Z(A, i).
inline OdeInstance<QuaternionD> violating_ode_example() {
  using Q = QuaternionD;
  OdeInstance<Q> inst;
  inst.a = Matrix<Q>(2, 2);
  inst.a << Q::i(), Q(0.0), Q(-Q::k() - Q::j()), Q(1.0);
  inst.b = Q::i();
  inst.c = Matrix<Q>(2, 1);
  inst.c << Q(1.0), Q::j();
  inst.form = SolutionForm::RightExp;
  return inst;
}

}  // namespace skewla
