#pragma once

#include "skewla/quaternion.hpp"
#include "skewla/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

namespace skewla {

/// Relative tolerance for float-mode equality decisions.
inline constexpr double kDefaultTol = 1e-9;

/// Division-algebra contract. Every scalar type used with the library provides a
/// specialization: exactness, the real coefficient field, a real basis of the
/// algebra (for real-linear reformulations) and a magnitude for tolerance tests.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  using Coeff = double;
  static constexpr bool is_exact = false;
  static constexpr bool is_commutative = true;
  static constexpr int real_dim = 1;
  static double magnitude(double s) { return std::abs(s); }
  static double inverse(double s) { return 1.0 / s; }
  static Coeff coord(double s, int) { return s; }
  static double basis(int) { return 1.0; }
};

template <>
struct ScalarTraits<Rational> {
  using Coeff = Rational;
  static constexpr bool is_exact = true;
  static constexpr bool is_commutative = true;
  static constexpr int real_dim = 1;
  static double magnitude(const Rational& s) { return std::abs(to_double(s)); }
  static Rational inverse(const Rational& s) { return Rational(1) / s; }
  static Coeff coord(const Rational& s, int) { return s; }
  static Rational basis(int) { return Rational(1); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using Coeff = double;
  static constexpr bool is_exact = false;
  static constexpr bool is_commutative = true;
  static constexpr int real_dim = 2;
  static double magnitude(const std::complex<double>& s) { return std::abs(s); }
  static std::complex<double> inverse(const std::complex<double>& s) { return 1.0 / s; }
  static Coeff coord(const std::complex<double>& s, int k) { return k == 0 ? s.real() : s.imag(); }
  static std::complex<double> basis(int k) {
    return k == 0 ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
  }
};

template <typename T>
struct ScalarTraits<Quaternion<T>> {
  using Coeff = T;
  static constexpr bool is_exact = ScalarTraits<T>::is_exact;
  static constexpr bool is_commutative = false;
  static constexpr int real_dim = 4;
  static double magnitude(const Quaternion<T>& s) { return skewla::magnitude(s); }
  static Quaternion<T> inverse(const Quaternion<T>& s) { return s.inverse(); }
  static Coeff coord(const Quaternion<T>& s, int k) { return s[k]; }
  static Quaternion<T> basis(int k) {
    switch (k) {
      case 0: return Quaternion<T>(T(1));
      case 1: return Quaternion<T>::i();
      case 2: return Quaternion<T>::j();
      default: return Quaternion<T>::k();
    }
  }
};

template <typename S>
inline constexpr bool is_exact_v = ScalarTraits<S>::is_exact;

template <typename S>
using coeff_t = typename ScalarTraits<S>::Coeff;

template <typename S>
double scalar_magnitude(const S& s) { return ScalarTraits<S>::magnitude(s); }

template <typename S>
S scalar_inverse(const S& s) { return ScalarTraits<S>::inverse(s); }

/// Exact zero test; in float mode a value is zero only if it is bit-zero.
template <typename S>
bool is_exact_zero(const S& s) { return s == S(0); }

/// Decides whether a residual vanishes: exactly in exact mode, or within
/// tol * (1 + scale) in float mode.
template <typename S>
bool residual_vanishes(const S& residual, double scale, double tol = kDefaultTol) {
  if constexpr (is_exact_v<S>) {
    return is_exact_zero(residual);
  } else {
    return scalar_magnitude(residual) <= tol * (1.0 + scale);
  }
}

/// Mode-aware scalar equality (exact, or relative to the operands' magnitudes).
template <typename S>
bool scalar_equal(const S& a, const S& b, double tol = kDefaultTol) {
  return residual_vanishes<S>(a - b, std::max(scalar_magnitude(a), scalar_magnitude(b)), tol);
}

}  // namespace skewla
