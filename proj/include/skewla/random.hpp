#pragma once

#include "skewla/elimination.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace skewla {

/// Seeded source of random scalars and matrices for property checks and the
/// CLI corpus. Identical seeds give identical sequences on every platform:
/// only the raw engine output is used, never the std distributions.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  bool chance(int numerator, int denominator) { return integer(0, denominator - 1) < numerator; }

  /// Small rational p/q with |p| <= 3 and q in {1, 2, 3}.
  Rational small_rational() { return Rational(integer(-3, 3)) / Rational(integer(1, 3)); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random scalar of type S: small rationals in exact mode, components in
/// [-1, 1] rescaled to norm at most max_norm in float mode.
template <typename S>
S random_scalar(Random& rng, double max_norm = 2.0);

template <>
inline Rational random_scalar<Rational>(Random& rng, double) {
  return rng.small_rational();
}

template <>
inline double random_scalar<double>(Random& rng, double max_norm) {
  return rng.uniform(-max_norm, max_norm);
}

template <>
inline Quaternion<Rational> random_scalar<Quaternion<Rational>>(Random& rng, double) {
  return {rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational()};
}

template <>
inline Quaternion<double> random_scalar<Quaternion<double>>(Random& rng, double max_norm) {
  Quaternion<double> q(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  const double n = magnitude(q);
  const double radius = max_norm * rng.unit();
  if (n == 0.0) return q;
  const double s = radius / n;
  return {q.w() * s, q.x() * s, q.y() * s, q.z() * s};
}

template <typename S>
S random_nonzero(Random& rng, double max_norm = 2.0) {
  for (;;) {
    S s = random_scalar<S>(rng, max_norm);
    if (scalar_magnitude(s) > 1e-3 * max_norm) return s;
  }
}

/// Nonzero scalar with a nonzero imaginary part (a non-real quaternion).
template <typename T>
Quaternion<T> random_nonreal(Random& rng, double max_norm = 2.0) {
  for (;;) {
    auto q = random_nonzero<Quaternion<T>>(rng, max_norm);
    if (to_double(q.imag_norm2()) > 1e-6 * max_norm * max_norm) return q;
  }
}

template <typename S>
Matrix<S> random_matrix(Random& rng, Eigen::Index rows, Eigen::Index cols, double max_norm = 2.0) {
  Matrix<S> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(rng, max_norm);
  return m;
}

/// Random kind-nonsingular n x n matrix (by rejection).
template <typename S>
Matrix<S> random_invertible(Random& rng, Eigen::Index n, Product kind, double max_norm = 2.0) {
  for (;;) {
    Matrix<S> m = random_matrix<S>(rng, n, n, max_norm);
    if constexpr (is_exact_v<S>) {
      if (!is_singular(m, kind)) return m;
    } else {
      // Keep float instances well conditioned: reject near-singular draws.
      if (!is_singular(m, kind, 1e-3)) return m;
    }
  }
}

template <typename S>
Matrix<S> random_diagonal(Random& rng, Eigen::Index n, double max_norm = 2.0) {
  Matrix<S> d = Matrix<S>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = random_scalar<S>(rng, max_norm);
  return d;
}

}  // namespace skewla
