#pragma once

// Independent reference computations for the unit tests.

#include "skewla/quaternion.hpp"
#include "skewla/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace oracle {

using skewla::Quaternion;
using skewla::Rational;
using cd = std::complex<double>;

/// q = alpha + beta j  ->  [[alpha, beta], [-conj(beta), conj(alpha)]], a ring
/// homomorphism from the quaternions into 2 x 2 complex matrices.
template <typename T>
Eigen::Matrix2cd complex_block(const Quaternion<T>& q) {
  const cd alpha(skewla::to_double(q.w()), skewla::to_double(q.x()));
  const cd beta(skewla::to_double(q.y()), skewla::to_double(q.z()));
  Eigen::Matrix2cd m;
  m << alpha, beta, -std::conj(beta), std::conj(alpha);
  return m;
}

template <typename M>
Eigen::MatrixXcd complex_embed(const M& a) {
  Eigen::MatrixXcd out(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block<2, 2>(2 * i, 2 * j) = complex_block(a(i, j));
  return out;
}

/// Rank of a rational matrix by plain fraction-field elimination.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c] / m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[k][cc] -= f * m[r][cc];
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Real 4 x 4 matrix of the map c -> c a - b c on quaternion coordinates.
inline std::vector<std::vector<Rational>> conjugator_system(const Quaternion<Rational>& a,
                                                            const Quaternion<Rational>& b) {
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (int col = 0; col < 4; ++col) {
    Quaternion<Rational> e;
    if (col == 0) e = Quaternion<Rational>(Rational(1));
    if (col == 1) e = Quaternion<Rational>::i();
    if (col == 2) e = Quaternion<Rational>::j();
    if (col == 3) e = Quaternion<Rational>::k();
    const auto img = e * a - b * e;
    for (int row = 0; row < 4; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = img[row];
  }
  return m;
}

/// a and b are similar iff some c != 0 solves c a = b c.
inline bool similar_by_search(const Quaternion<Rational>& a, const Quaternion<Rational>& b) {
  return rational_rank(conjugator_system(a, b)) < 4;
}

}  // namespace oracle
