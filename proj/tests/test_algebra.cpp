#include "oracles.hpp"
#include "skewla/algebra.hpp"
#include "skewla/random.hpp"

#include <gtest/gtest.h>

using namespace skewla;
using Q = Quaternion<Rational>;

namespace {

Q q(int w, int x, int y, int z) { return {Rational(w), Rational(x), Rational(y), Rational(z)}; }

}  // namespace

TEST(Quaternion, MultiplicationTable) {
  const Q i = Q::i(), j = Q::j(), k = Q::k(), one(Rational(1));
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(j * j, -one);
  EXPECT_EQ(k * k, -one);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * j * k, -one);
}

TEST(Quaternion, RingLawsExact) {
  Random rng(11);
  for (int n = 0; n < 10000; ++n) {
    const Q p = random_scalar<Q>(rng), s = random_scalar<Q>(rng), r = random_scalar<Q>(rng);
    ASSERT_EQ((p * s) * r, p * (s * r));
    ASSERT_EQ(p * (s + r), p * s + p * r);
    ASSERT_EQ((s + r) * p, s * p + r * p);
    ASSERT_EQ(Q(Rational(1)) * p, p);
  }
}

TEST(Quaternion, TwoSidedInverseExact) {
  Random rng(12);
  for (int n = 0; n < 1000; ++n) {
    const Q p = random_nonzero<Q>(rng);
    ASSERT_EQ(p * p.inverse(), Q(Rational(1)));
    ASSERT_EQ(p.inverse() * p, Q(Rational(1)));
  }
  EXPECT_THROW(Q().inverse(), std::domain_error);
}

TEST(Quaternion, ComplexBlockIsHomomorphism) {
  Random rng(13);
  for (int n = 0; n < 200; ++n) {
    const QuaternionD p = random_scalar<QuaternionD>(rng), s = random_scalar<QuaternionD>(rng);
    const Eigen::Matrix2cd lhs = oracle::complex_block(p * s);
    const Eigen::Matrix2cd rhs = oracle::complex_block(p) * oracle::complex_block(s);
    ASSERT_LT((lhs - rhs).norm(), 1e-12);
  }
}

TEST(InCenter, Examples) {
  Random rng(14);
  for (int n = 0; n < 50; ++n) EXPECT_TRUE(in_center(Q(Rational(1)), random_scalar<Q>(rng)));
  EXPECT_FALSE(in_center(Q::j(), Q::i()));
  EXPECT_TRUE(in_center(q(3, 2, 0, 0), Q::i()));
}

TEST(InCenter, FloatToleranceIsRelative) {
  const QuaternionD b(0, 1e6, 0, 0);
  const QuaternionD c(1, 1e6 * (1 + 1e-15), 0, 0);
  EXPECT_TRUE(in_center(c, b));
  EXPECT_FALSE(in_center(QuaternionD::j(), QuaternionD::i()));
}

TEST(SimilarWitness, Examples) {
  const auto self = similar_witness(q(1, 2, 3, 4), q(1, 2, 3, 4));
  ASSERT_TRUE(self.has_value());
  const Q a = q(1, 2, 3, 4);
  EXPECT_EQ(self->inverse() * a * *self, a);

  const auto ij = similar_witness(Q::i(), Q::j());
  ASSERT_TRUE(ij.has_value());
  EXPECT_EQ(ij->inverse() * Q::j() * *ij, Q::i());

  EXPECT_FALSE(similar_witness(Q::i(), q(0, 2, 0, 0)).has_value());
}

TEST(SimilarWitness, OppositeImaginaryParts) {
  for (const Q& u : {Q::i(), Q::j(), Q::k(), q(0, 1, 2, 2), q(3, 0, 4, 0)}) {
    const Q v = Q(u.real()) - u.imag();
    const auto c = similar_witness(u, v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->inverse() * v * *c, u);
  }
}

TEST(SimilarWitness, AgreesWithConjugatorSearch) {
  // Small grid so that similar pairs are common.
  Random rng(15);
  int similar = 0;
  for (int n = 0; n < 3000; ++n) {
    auto grid = [&] { return Rational(rng.integer(-2, 2)); };
    const Q a(grid(), grid(), grid(), grid());
    const Q b(a.real(), grid(), grid(), grid());
    const auto c = similar_witness(a, b);
    ASSERT_EQ(c.has_value(), oracle::similar_by_search(a, b)) << a << " vs " << b;
    if (c) {
      ++similar;
      ASSERT_FALSE(c->is_zero());
      ASSERT_EQ(c->inverse() * b * *c, a);
    }
  }
  EXPECT_GT(similar, 100);
}

TEST(SimilarWitness, FloatMode) {
  Random rng(16);
  for (int n = 0; n < 500; ++n) {
    const QuaternionD b = random_scalar<QuaternionD>(rng);
    const QuaternionD c = random_nonzero<QuaternionD>(rng);
    const QuaternionD a = c.inverse() * b * c;
    const auto w = similar_witness(a, b);
    ASSERT_TRUE(w.has_value());
    EXPECT_LT(magnitude(w->inverse() * b * *w - a), 1e-12);
  }
}

TEST(SimilarityClass, ConjugationPreservesInvariants) {
  Random rng(17);
  for (int n = 0; n < 1000; ++n) {
    const Q b = random_scalar<Q>(rng);
    const Q c = random_nonzero<Q>(rng);
    const auto before = similarity_class(b);
    const auto after = similarity_class(Q(c.inverse() * b * c));
    ASSERT_EQ(before.real, after.real);
    ASSERT_EQ(before.imag_norm2, after.imag_norm2);
  }
}

TEST(CommutativeScalars, WitnessIsEquality) {
  EXPECT_EQ(similar_witness(2.0, 2.0), std::optional<double>(1.0));
  EXPECT_FALSE(similar_witness(2.0, 3.0).has_value());
  EXPECT_TRUE(in_center(std::complex<double>(1, 2), std::complex<double>(3, -1)));
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(parse_rational("5")), "5/1");
  EXPECT_EQ(format_rational(parse_rational("0/7")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}
