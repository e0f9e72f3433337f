#pragma once

#include "skewla/eigenpairs.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace skewla {

/// Grid residual bound for accepted closed-form solutions.
inline constexpr double kSolutionTol = 1e-8;
/// Number of equispaced points on [0, 2] used for residual checks.
inline constexpr int kResidualGridPoints = 21;
inline constexpr double kResidualGridEnd = 2.0;

namespace detail {

template <typename S>
void require_float(const char* what) {
  if constexpr (is_exact_v<S>) {
    throw UnsupportedMode(std::string(what) + " is transcendental and unavailable in exact mode");
  }
}

template <typename T>
struct is_quaternion : std::false_type {};
template <typename T>
struct is_quaternion<Quaternion<T>> : std::true_type {};

}  // namespace detail

/// e^{x} for float scalars by a 40-term Horner series after scaling x down to
/// norm <= 1/2, followed by repeated squaring.
template <typename S>
S exp_series(const S& x) {
  if constexpr (is_exact_v<S>) {
    detail::require_float<S>("exponential");
    return x;
  } else {
    int squarings = 0;
    double norm = scalar_magnitude(x);
    while (norm > 0.5) {
      norm /= 2.0;
      ++squarings;
    }
    const S y = x * S(std::ldexp(1.0, -squarings));
    S sum(1);
    for (int k = 40; k >= 1; --k) sum = S(1) + y * sum * S(1.0 / k);
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
  }
}

/// e^{a t} for a quaternion a = w + v: e^{wt}(cos(|v|t) + v/|v| sin(|v|t)).
template <typename T>
Quaternion<T> exp_closed_form(const Quaternion<T>& a, double t) {
  if constexpr (is_exact_v<T>) {
    detail::require_float<T>("exponential");
    return a;
  } else {
    const T vn = std::sqrt(a.imag_norm2());
    const T scale = std::exp(a.real() * t);
    if (vn == T(0)) return Quaternion<T>(scale);
    const T s = scale * std::sin(vn * t) / vn;
    return {scale * std::cos(vn * t), a.x() * s, a.y() * s, a.z() * s};
  }
}

/// e^{a t}. Quaternions use the closed form, other float scalars the series.
template <typename S>
S exp_scalar(const S& a, double t) {
  if constexpr (is_exact_v<S>) {
    detail::require_float<S>("exponential");
    return a;
  } else if constexpr (detail::is_quaternion<S>::value) {
    return exp_closed_form(a, t);
  } else {
    return exp_series(S(a * S(t)));
  }
}

/// Residuals of the three forms of the exponent conjugation identity:
///   |c e^{c^-1 a c t} - e^{at} c|,  |c e^{c^-1 a c t} c^-1 - e^{at}|,
///   |e^{c^-1 a c t} - c^-1 e^{at} c|.
template <typename S>
std::array<double, 3> conj_exp_residuals(const S& a, const S& c, double t) {
  detail::require_float<S>("exponential");
  if (is_exact_zero(c)) throw PreconditionError("conjugating element must be nonzero");
  const S cinv = scalar_inverse(c);
  const S conj = exp_scalar(S(cinv * a * c), t);
  const S plain = exp_scalar(a, t);
  return {scalar_magnitude(S(c * conj - plain * c)), scalar_magnitude(S(c * conj * cinv - plain)),
          scalar_magnitude(S(conj - cinv * plain * c))};
}

/// Terms n = 0..order of the two truncated series c (c^-1 a c)^n t^n / n! and
/// a^n c t^n / n!. They agree termwise, so exact scalars give identical lists.
template <typename S, typename Coeff = coeff_t<S>>
std::array<std::vector<S>, 2> conj_series_terms(const S& a, const S& c, const Coeff& t, int order) {
  if (is_exact_zero(c)) throw PreconditionError("conjugating element must be nonzero");
  if (order < 0) throw PreconditionError("series order must be non-negative");
  const S cinv = scalar_inverse(c);
  const S b = cinv * a * c;
  std::array<std::vector<S>, 2> out;
  S bpow(1), apow(1);
  Coeff factor(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      bpow = bpow * b;
      apow = apow * a;
      factor = factor * t / Coeff(n);
    }
    out[0].push_back(c * bpow * S(factor));
    out[1].push_back(apow * c * S(factor));
  }
  return out;
}

/// b commutes with every entry of a.
template <typename S>
bool center_condition(const Matrix<S>& a, const S& b, double tol = kDefaultTol) {
  return commutes_with_all(b, a, tol);
}

/// There are p != 0 and c'^i in Z(A, b) with c^i = p c'^i. Decided by testing
/// (c^{i0})^{-1} c^i in Z(A, b), where c^{i0} is the first nonzero entry.
template <typename S>
bool eigencolumn_center_condition(const Matrix<S>& c, const S& b, double tol = kDefaultTol) {
  const double cmax = max_magnitude(c);
  const S* lead = nullptr;
  for (Eigen::Index k = 0; k < c.size() && lead == nullptr; ++k) {
    const S& entry = c.data()[k];
    if (is_exact_v<S> ? !is_exact_zero(entry) : scalar_magnitude(entry) > tol * cmax) lead = &entry;
  }
  if (lead == nullptr) throw PreconditionError("eigencolumn must be nonzero");
  const S lead_inv = scalar_inverse(*lead);
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (!in_center(S(lead_inv * c.data()[k]), b, tol)) return false;
  return true;
}

enum class SolutionForm { RightExp, LeftExp, Scalar };

inline const char* to_string(SolutionForm f) {
  switch (f) {
    case SolutionForm::RightExp: return "right_exp";
    case SolutionForm::LeftExp: return "left_exp";
    default: return "scalar";
  }
}

/// Closed-form solution.
///   RightExp: x^i(t) = c^i e^{bt}      LeftExp: x^i(t) = e^{bt} c^i
///   Scalar:   x(t) = c1 e^{bt} c2 with b = c1^{-1} a c1
/// The vector forms solve dx/dt = x * a (CR product, dx^i/dt = sum_k x^k a^i_k)
/// for a column x; the scalar form solves dx/dt = a x.
template <typename S>
struct ClosedFormSolution {
  SolutionForm form;
  S b;
  Matrix<S> c;  // n x 1 column; 1 x 1 holding c2 for the scalar form
  S c1 = S(1);

  Matrix<S> operator()(double t) const {
    const S e = exp_scalar(b, t);
    switch (form) {
      case SolutionForm::RightExp: return right_scale(c, e);
      case SolutionForm::LeftExp: return left_scale(e, c);
      default: return left_scale(S(c1 * e), c);
    }
  }

  /// Analytic derivative, using b e^{bt} = e^{bt} b.
  Matrix<S> derivative(double t) const {
    const S e = exp_scalar(b, t);
    switch (form) {
      case SolutionForm::RightExp: return right_scale(c, S(b * e));
      case SolutionForm::LeftExp: return left_scale(S(b * e), c);
      default: return left_scale(S(c1 * b * e), c);
    }
  }
};

/// Right-hand side of dx/dt = x * a (CR) for a column x.
template <typename S>
Matrix<S> system_rhs(const Matrix<S>& a, const Matrix<S>& x) {
  return cr(x, a);
}

/// |x'(t) - x(t) * a| for a vector solution, or |x'(t) - a x(t)| for the scalar
/// form (a is then 1 x 1), relative to 1 + |x'(t)|.
template <typename S, typename Sol>
double solution_residual(const Matrix<S>& a, const Sol& sol, double t, bool scalar_equation = false) {
  const Matrix<S> x = sol(t);
  const Matrix<S> dx = sol.derivative(t);
  const Matrix<S> rhs = scalar_equation ? left_scale(S(a(0, 0)), x) : system_rhs(a, x);
  return max_magnitude(Matrix<S>(dx - rhs)) / (1.0 + max_magnitude(dx));
}

/// Largest residual over the 21-point grid on [0, 2].
template <typename S, typename Sol>
double grid_residual(const Matrix<S>& a, const Sol& sol, bool scalar_equation = false) {
  double worst = 0.0;
  for (int k = 0; k < kResidualGridPoints; ++k) {
    const double t = kResidualGridEnd * k / (kResidualGridPoints - 1);
    worst = std::max(worst, solution_residual(a, sol, t, scalar_equation));
  }
  return worst;
}

/// The closed form without any precondition checks.
template <typename S>
ClosedFormSolution<S> naive_solution(const S& b, const Matrix<S>& c, SolutionForm form) {
  if (form == SolutionForm::Scalar) throw PreconditionError("use scalar_solution for the scalar form");
  if (c.cols() != 1) throw ShapeError("solution datum c must be a column, got " + shape_string(c.rows(), c.cols()));
  return {form, b, c, S(1)};
}

/// Checked construction of a closed-form solution of dx/dt = x * a (CR).
///
/// RightExp needs c * a = c b together with the center condition or the
/// eigencolumn center condition. LeftExp needs c * a = b c (left CR eigencolumn).
/// Failures throw RejectedSolution naming the condition ("eigen_equation",
/// "center_condition" or "residual").
template <typename S>
ClosedFormSolution<S> build_solution(const Matrix<S>& a, const S& b, const Matrix<S>& c, SolutionForm form,
                                     double tol = kDefaultTol) {
  detail::require_float<S>("closed-form solution");
  if (a.rows() != a.cols()) throw ShapeError("system matrix must be square, got " + shape_string(a.rows(), a.cols()));
  if (c.rows() != a.rows() || c.cols() != 1) {
    throw ShapeError("solution datum c must be a " + shape_string(a.rows(), 1) + " column, got " +
                     shape_string(c.rows(), c.cols()));
  }
  if (is_zero_matrix(c)) throw PreconditionError("solution datum c must be nonzero");

  auto sol = naive_solution(b, c, form);
  if (form == SolutionForm::RightExp) {
    const Matrix<S> res = cr(c, a) - right_scale(c, b);
    const double scale = max_magnitude(c) * (max_magnitude(a) * static_cast<double>(a.rows()) + scalar_magnitude(b));
    for (Eigen::Index k = 0; k < res.size(); ++k) {
      if (!residual_vanishes<S>(res.data()[k], scale, tol)) {
        throw RejectedSolution("eigen_equation", "c * a = c b does not hold");
      }
    }
    if (!center_condition(a, b, tol) && !eigencolumn_center_condition(c, b, tol)) {
      throw RejectedSolution("center_condition",
                             "b is not central for the entries of a and c is not a multiple of a Z(A,b) column");
    }
  } else if (!eigen_check(a, EigenPair<S>{b, c, Side::Left, Product::CR}, tol)) {
    throw RejectedSolution("eigen_equation", "c * a = b c does not hold");
  }
  const double residual = grid_residual(a, sol);
  if (residual > kSolutionTol) {
    throw RejectedSolution("residual", "grid residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return sol;
}

/// x(t) = c1 e^{c1^-1 a c1 t} c2, a solution of dx/dt = a x.
template <typename S>
ClosedFormSolution<S> scalar_solution(const S& a, const S& c1, const S& c2) {
  detail::require_float<S>("closed-form solution");
  if (is_exact_zero(c1)) throw PreconditionError("c1 must be nonzero");
  Matrix<S> c(1, 1);
  c(0, 0) = c2;
  return {SolutionForm::Scalar, S(scalar_inverse(c1) * a * c1), c, c1};
}

/// e^{-at} c1 e^{c1^-1 a c1 t}, constant in t.
template <typename S>
S scalar_solution_constant(const S& a, const S& c1, double t) {
  return exp_scalar(S(-a), t) * c1 * exp_scalar(S(scalar_inverse(c1) * a * c1), t);
}

/// A vector solution seen through the passive transformation f:
/// y(t) = x(t) * g (CR) with g = f^{-1}, solving dy/dt = y * (f * a * f^{-1}).
/// Repeated transformations compose into g.
template <typename S>
struct TransformedSolution {
  ClosedFormSolution<S> base;
  Matrix<S> g;

  Matrix<S> operator()(double t) const { return cr(base(t), g); }
  Matrix<S> derivative(double t) const { return cr(base.derivative(t), g); }
};

template <typename S>
TransformedSolution<S> transform_solution(const TransformedSolution<S>& sol, const Matrix<S>& f,
                                          double tol = kDefaultTol) {
  if (sol.base.form != SolutionForm::RightExp) throw PreconditionError("transform_solution needs a right_exp solution");
  Matrix<S> finv;
  try {
    finv = inverse(f, Product::CR, tol);
  } catch (const SingularMatrix& e) {
    throw PreconditionError("transformation f is CR-singular (rank " + std::to_string(e.rank()) + ")");
  }
  if (finv.rows() != sol.g.cols()) throw ShapeError("transformation size does not match the solution");
  return {sol.base, cr(sol.g, finv)};
}

template <typename S>
TransformedSolution<S> transform_solution(const ClosedFormSolution<S>& sol, const Matrix<S>& f,
                                          double tol = kDefaultTol) {
  return transform_solution(TransformedSolution<S>{sol, identity<S>(sol.c.rows())}, f, tol);
}

/// System matrix after the passive transformation f: f * a * f^{-1} (CR).
template <typename S>
Matrix<S> transformed_system(const Matrix<S>& a, const Matrix<S>& f, double tol = kDefaultTol) {
  return mul(mul(f, a, Product::CR), inverse(f, Product::CR, tol), Product::CR);
}

namespace detail {

template <typename S, typename X, typename F>
std::vector<X> rk4(const X& x0, double t_end, double h, F&& rhs) {
  if (!(h > 0.0)) throw PreconditionError("step size must be positive");
  if (t_end < 0.0) throw PreconditionError("end time must be non-negative");
  const auto steps = static_cast<long>(std::ceil(t_end / h - 1e-9));
  const double step = steps > 0 ? t_end / static_cast<double>(steps) : 0.0;
  std::vector<X> out{x0};
  out.reserve(static_cast<std::size_t>(steps + 1));
  X x = x0;
  for (long s = 0; s < steps; ++s) {
    const S half(step / 2), full(step), sixth(step / 6), two(2);
    const X k1 = rhs(x);
    const X k2 = rhs(X(x + k1 * half));
    const X k3 = rhs(X(x + k2 * half));
    const X k4 = rhs(X(x + k3 * full));
    x = x + X(k1 + k2 * two + k3 * two + k4) * sixth;
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Classical fourth-order trajectory of dx/dt = x * a (CR) for a column x. The
/// step is shrunk slightly so the last point lands on t_end.
template <typename S>
std::vector<Matrix<S>> rk4_integrate(const Matrix<S>& a, const Matrix<S>& x0, double t_end, double h) {
  detail::require_float<S>("numerical integration");
  if (x0.rows() != a.rows() || x0.cols() != 1) throw ShapeError("initial value must be a column matching a");
  return detail::rk4<S>(x0, t_end, h, [&](const Matrix<S>& x) { return system_rhs(a, x); });
}

/// Classical fourth-order trajectory of dx/dt = a x for a scalar x.
template <typename S>
std::vector<S> rk4_integrate_scalar(const S& a, const S& x0, double t_end, double h) {
  detail::require_float<S>("numerical integration");
  return detail::rk4<S>(x0, t_end, h, [&](const S& x) { return S(a * x); });
}

}  // namespace skewla
