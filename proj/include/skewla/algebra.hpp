#pragma once

#include "skewla/scalar_traits.hpp"

#include <optional>

namespace skewla {

/// True iff c lies in Z(A, b), the centralizer of b: cb = bc exactly, or
/// |cb - bc| <= tol * (1 + |b||c|) in float mode.
template <typename S>
bool in_center(const S& c, const S& b, double tol = kDefaultTol) {
  const S commutator = c * b - b * c;
  return residual_vanishes<S>(commutator, scalar_magnitude(b) * scalar_magnitude(c), tol);
}

/// Returns c != 0 with a = c^{-1} b c, or nullopt if a and b are not similar.
///
/// Quaternions are similar iff they share real part and norm. The witness is
/// built without square roots so it stays exact over the rationals: for
/// imaginary parts u (of a) and v (of b) with |u| = |v|, c = u + v satisfies
/// c u = v c; when u = -v any imaginary c orthogonal to u works.
template <typename T>
std::optional<Quaternion<T>> similar_witness(const Quaternion<T>& a, const Quaternion<T>& b,
                                             double tol = kDefaultTol) {
  using Q = Quaternion<T>;
  const double scale = 1.0 + magnitude(a) + magnitude(b);
  auto same = [&](const T& lhs, const T& rhs) {
    if constexpr (is_exact_v<T>) {
      return lhs == rhs;
    } else {
      return std::abs(lhs - rhs) <= tol * scale * scale;
    }
  };
  if (!same(a.real(), b.real()) || !same(a.imag_norm2(), b.imag_norm2())) return std::nullopt;

  const Q u = a.imag();
  const Q v = b.imag();
  if (u.is_zero() || (!is_exact_v<T> && magnitude(u) <= tol * scale)) return Q(T(1));

  Q c = u + v;
  if (!c.is_zero() && (is_exact_v<T> || magnitude(c) > tol * scale * magnitude(u))) return c;

  // u = -v: take u x e for the basis axis e least aligned with u.
  const T ax = u.x() < 0 ? -u.x() : u.x();
  const T ay = u.y() < 0 ? -u.y() : u.y();
  const T az = u.z() < 0 ? -u.z() : u.z();
  Q axis = Q::k();
  if (ax <= ay && ax <= az) axis = Q::i();
  else if (ay <= az) axis = Q::j();
  // For imaginary u, e: imag(u e) = u x e, which is orthogonal to u.
  return (u * axis).imag();
}

/// Similarity for commutative reductions: a ~ b iff a = b.
template <typename S>
  requires ScalarTraits<S>::is_commutative
std::optional<S> similar_witness(const S& a, const S& b, double tol = kDefaultTol) {
  if (scalar_equal(a, b, tol)) return S(1);
  return std::nullopt;
}

/// Canonical invariants of the similarity class of a quaternion: real part and
/// squared norm of the imaginary part. Two quaternions are similar iff these agree.
template <typename T>
struct SimilarityClass {
  T real;
  T imag_norm2;
};

template <typename T>
SimilarityClass<T> similarity_class(const Quaternion<T>& q) {
  return {q.real(), q.imag_norm2()};
}

}  // namespace skewla
