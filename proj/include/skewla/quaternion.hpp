#pragma once

#include <Eigen/Core>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace skewla {

/// Quaternion w + x i + y j + z k over a coefficient field T (double or Rational).
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is not commutative, so
/// every product in this library is written with its factor order spelled out.
template <typename T>
class Quaternion {
 public:
  using Coeff = T;

  Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
  Quaternion(T w) : w_(std::move(w)), x_(0), y_(0), z_(0) {}  // NOLINT: reals embed implicitly
  Quaternion(int w) : w_(w), x_(0), y_(0), z_(0) {}           // NOLINT: Eigen writes Scalar(0)
  Quaternion(T w, T x, T y, T z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion i() { return {T(0), T(1), T(0), T(0)}; }
  static Quaternion j() { return {T(0), T(0), T(1), T(0)}; }
  static Quaternion k() { return {T(0), T(0), T(0), T(1)}; }

  const T& w() const { return w_; }
  const T& x() const { return x_; }
  const T& y() const { return y_; }
  const T& z() const { return z_; }

  /// Coefficient by position 0..3 (w, x, y, z).
  const T& operator[](int idx) const {
    switch (idx) {
      case 0: return w_;
      case 1: return x_;
      case 2: return y_;
      default: return z_;
    }
  }

  T real() const { return w_; }
  Quaternion imag() const { return {T(0), x_, y_, z_}; }
  Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
  T norm2() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
  T imag_norm2() const { return x_ * x_ + y_ * y_ + z_ * z_; }
  bool is_zero() const { return w_ == 0 && x_ == 0 && y_ == 0 && z_ == 0; }
  bool is_real() const { return x_ == 0 && y_ == 0 && z_ == 0; }

  /// Two-sided inverse conj(q)/|q|^2.
  Quaternion inverse() const {
    const T n = norm2();
    if (n == 0) throw std::domain_error("inverse of zero quaternion");
    return {w_ / n, -x_ / n, -y_ / n, -z_ / n};
  }

  Quaternion& operator+=(const Quaternion& o) {
    w_ += o.w_; x_ += o.x_; y_ += o.y_; z_ += o.z_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w_ -= o.w_; x_ -= o.x_; y_ -= o.y_; z_ -= o.z_;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w_, -a.x_, -a.y_, -a.z_}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w_ << ", " << q.x_ << ", " << q.y_ << ", " << q.z_ << ')';
  }

 private:
  T w_, x_, y_, z_;
};

using QuaternionD = Quaternion<double>;

/// Euclidean magnitude as a double, used only for tolerance decisions.
template <typename T>
double magnitude(const Quaternion<T>& q) {
  return std::sqrt(static_cast<double>(q.norm2()));
}

}  // namespace skewla

namespace Eigen {

template <typename T>
struct NumTraits<skewla::Quaternion<T>> : GenericNumTraits<skewla::Quaternion<T>> {
  using Real = T;
  using NonInteger = skewla::Quaternion<T>;
  using Literal = skewla::Quaternion<T>;
  using Nested = skewla::Quaternion<T>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4 * NumTraits<T>::ReadCost,
    AddCost = 4 * NumTraits<T>::AddCost,
    MulCost = 16 * NumTraits<T>::MulCost + 12 * NumTraits<T>::AddCost
  };
  static inline Real epsilon() { return NumTraits<T>::epsilon(); }
  static inline Real dummy_precision() { return NumTraits<T>::dummy_precision(); }
  static inline int digits10() { return NumTraits<T>::digits10(); }
};

}  // namespace Eigen
