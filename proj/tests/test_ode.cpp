#include "skewla/instances.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace skewla;
using QD = QuaternionD;
using MD = Matrix<QD>;

namespace {

const double kPi = std::numbers::pi;
const QD I = QD::i(), J = QD::j(), K = QD::k();

MD diag2(const QD& a, const QD& b) { return diagonal<QD>({a, b}); }

MD column(std::initializer_list<QD> entries) {
  MD c(static_cast<Eigen::Index>(entries.size()), 1);
  Eigen::Index k = 0;
  for (const auto& e : entries) c(k++, 0) = e;
  return c;
}

double dist(const QD& a, const QD& b) { return magnitude(a - b); }

}  // namespace

TEST(Exp, Examples) {
  EXPECT_EQ(exp_scalar(QD(0.0), 1.7), QD(1.0));
  EXPECT_LT(dist(exp_scalar(I, kPi), QD(-1.0)), 1e-15);
  EXPECT_LT(dist(exp_scalar(J, kPi / 2), J), 1e-15);
  EXPECT_LT(dist(exp_series(QD(J * QD(kPi / 2))), J), 1e-12);
}

TEST(Exp, ClosedFormMatchesSeries) {
  Random rng(81);
  for (int n = 0; n < 1000; ++n) {
    const QD a = random_scalar<QD>(rng);
    const double t = rng.uniform(0, 2);
    const QD closed = exp_scalar(a, t);
    const QD series = exp_series(QD(a * QD(t)));
    ASSERT_LT(dist(closed, series), 1e-12 * (1 + magnitude(closed)));
  }
}

TEST(Exp, CommutativeScalarsUseSeries) {
  EXPECT_NEAR(exp_scalar(1.0, 1.0), std::exp(1.0), 1e-14);
  const auto z = exp_scalar(std::complex<double>(0, 1), kPi);
  EXPECT_LT(std::abs(z + 1.0), 1e-14);
}

TEST(Exp, ExactModeUnsupported) {
  EXPECT_THROW(exp_scalar(Quaternion<Rational>::i(), 1.0), UnsupportedMode);
}

TEST(Exp, DerivativeIsFirstOrder) {
  Random rng(82);
  for (int n = 0; n < 20; ++n) {
    const QD a = random_scalar<QD>(rng);
    const double t = rng.uniform(0, 2);
    auto err = [&](double delta) {
      const QD fd = (exp_scalar(a, t + delta) - exp_scalar(a, t)) * QD(1.0 / delta);
      return magnitude(fd - a * exp_scalar(a, t));
    };
    const double ratio = err(1e-4) / err(1e-5);
    EXPECT_GT(ratio, 8.0);
    EXPECT_LT(ratio, 12.0);
  }
}

TEST(ConjExp, Examples) {
  for (double r : conj_exp_residuals(K + QD(0.5), QD(1.0), 1.3)) EXPECT_LT(r, 1e-15);
  // j e^{-it} = e^{it} j = j cos t + k sin t.
  const double t = 1.0;
  const QD lhs = J * exp_scalar(QD(-I), t);
  EXPECT_LT(dist(lhs, exp_scalar(I, t) * J), 1e-15);
  EXPECT_LT(dist(lhs, J * QD(std::cos(t)) + K * QD(std::sin(t))), 1e-15);
  for (double r : conj_exp_residuals(I, J, t)) EXPECT_LT(r, 1e-15);
  EXPECT_THROW(conj_exp_residuals(I, QD(0.0), t), PreconditionError);
}

TEST(ConjExp, RandomSamples) {
  Random rng(83);
  for (int n = 0; n < 1000; ++n) {
    const QD a = random_scalar<QD>(rng);
    const QD c = random_nonzero<QD>(rng);
    const double t = rng.uniform(0, 2);
    for (double r : conj_exp_residuals(a, c, t)) ASSERT_LT(r, 1e-9);
  }
}

TEST(ConjExp, TruncatedSeriesAgreeExactly) {
  using Q = Quaternion<Rational>;
  Random rng(84);
  for (int n = 0; n < 100; ++n) {
    const Q a = random_scalar<Q>(rng);
    const Q c = random_nonzero<Q>(rng);
    const Rational t = rng.small_rational();
    const auto terms = conj_series_terms(a, c, t, 8);
    ASSERT_EQ(terms[0], terms[1]);
  }
}

TEST(Conditions, CenterCondition) {
  Random rng(85);
  const MD real = random_matrix<double>(rng, 3, 3).cast<QD>();
  EXPECT_TRUE(center_condition(real, random_scalar<QD>(rng)));
  EXPECT_FALSE(center_condition(diag2(I, QD(1.0)), J));
  MD complex(2, 2);
  complex << QD(1, 2, 0, 0), QD(0, -1, 0, 0), QD(3.0), QD(0.5, 0.5, 0, 0);
  EXPECT_TRUE(center_condition(complex, I));
}

TEST(Conditions, EigencolumnCenterCondition) {
  EXPECT_TRUE(eigencolumn_center_condition(column({QD(1.0), QD(0.0), QD(0.0)}), J));
  EXPECT_FALSE(eigencolumn_center_condition(column({QD(1.0), J}), I));
  Random rng(86);
  for (int n = 0; n < 50; ++n) {
    const QD b = random_nonreal<double>(rng);
    const QD p = random_nonzero<QD>(rng);
    const MD c = column({p * random_in_centralizer(rng, b), p * random_in_centralizer(rng, b)});
    EXPECT_TRUE(eigencolumn_center_condition(c, b));
  }
  EXPECT_THROW(eigencolumn_center_condition(column({QD(0.0), QD(0.0)}), I), PreconditionError);
}

TEST(BuildSolution, OneByOneReal) {
  Random rng(87);
  MD a(1, 1);
  a << QD(0.7);
  const MD c = column({random_nonzero<QD>(rng)});
  const auto sol = build_solution(a, QD(0.7), c, SolutionForm::RightExp);
  EXPECT_LT(grid_residual(a, sol), 1e-12);
  EXPECT_LT(dist(sol(1.0)(0, 0), c(0, 0) * QD(std::exp(0.7))), 1e-12);
}

TEST(BuildSolution, LeftExpOnDiagonal) {
  const MD a = diag2(I, J);
  const auto sol = build_solution(a, I, column({QD(1.0), QD(0.0)}), SolutionForm::LeftExp);
  for (double t : {0.0, 0.5, 1.9}) {
    EXPECT_LT(dist(sol(t)(0, 0), exp_scalar(I, t)), 1e-15);
    EXPECT_EQ(sol(t)(1, 0), QD(0.0));
  }
  EXPECT_LT(grid_residual(a, sol), 1e-12);
}

TEST(BuildSolution, GeneratedInstancesAreAcceptedAndMatchRk4) {
  Random rng(88);
  for (auto kind : {OdeInstanceKind::Center, OdeInstanceKind::Eigencolumn, OdeInstanceKind::LeftExp}) {
    for (int n = 0; n < 10; ++n) {
      const auto inst = random_ode_instance<double>(rng, rng.integer(1, 4), kind);
      const auto sol = build_solution(inst.a, inst.b, inst.c, inst.form);
      ASSERT_LE(grid_residual(inst.a, sol), kSolutionTol);
      const auto traj = rk4_integrate(inst.a, sol(0.0), 1.0, 1e-3);
      ASSERT_LT(max_magnitude(MD(traj.back() - sol(1.0))), 1e-6);
    }
  }
}

TEST(BuildSolution, CenterInstancesSatisfyCenterCondition) {
  Random rng(89);
  for (int n = 0; n < 10; ++n) {
    const auto inst = random_ode_instance<double>(rng, 3, OdeInstanceKind::Center);
    EXPECT_TRUE(center_condition(inst.a, inst.b));
    const auto ec = random_ode_instance<double>(rng, 3, OdeInstanceKind::Eigencolumn);
    EXPECT_FALSE(center_condition(ec.a, ec.b));
    EXPECT_TRUE(eigencolumn_center_condition(ec.c, ec.b));
  }
}

TEST(BuildSolution, ViolatingExampleIsRejected) {
  const auto inst = violating_ode_example();
  EXPECT_TRUE(approx_equal(cr(inst.c, inst.a), right_scale(inst.c, inst.b)));
  try {
    build_solution(inst.a, inst.b, inst.c, inst.form);
    FAIL() << "expected RejectedSolution";
  } catch (const RejectedSolution& e) {
    EXPECT_EQ(e.condition(), "center_condition");
  }
  EXPECT_GT(grid_residual(inst.a, naive_solution(inst.b, inst.c, inst.form)), 1e-3);
}

TEST(BuildSolution, GeneratedViolatorsAreRejected) {
  Random rng(90);
  for (int n = 0; n < 20; ++n) {
    const auto inst = random_ode_instance<double>(rng, rng.integer(2, 4), OdeInstanceKind::Violating);
    EXPECT_THROW(build_solution(inst.a, inst.b, inst.c, inst.form), RejectedSolution);
    EXPECT_GT(grid_residual(inst.a, naive_solution(inst.b, inst.c, inst.form)), 1e-3);
  }
}

TEST(BuildSolution, WrongEigenDatum) {
  try {
    build_solution(diag2(I, J), J, column({QD(1.0), QD(0.0)}), SolutionForm::LeftExp);
    FAIL();
  } catch (const RejectedSolution& e) {
    EXPECT_EQ(e.condition(), "eigen_equation");
  }
  EXPECT_THROW(build_solution(diag2(I, J), I, column({QD(0.0), QD(0.0)}), SolutionForm::LeftExp),
               PreconditionError);
}

TEST(ScalarSolution, SolvesScalarEquationAndFormsRightSpace) {
  Random rng(91);
  for (int n = 0; n < 50; ++n) {
    const QD a = random_scalar<QD>(rng);
    MD am(1, 1);
    am << a;
    const auto x1 = scalar_solution(a, random_nonzero<QD>(rng), random_scalar<QD>(rng));
    const auto x2 = scalar_solution(a, random_nonzero<QD>(rng), random_scalar<QD>(rng));
    ASSERT_LT(grid_residual(am, x1, true), 1e-9);
    const QD q = random_scalar<QD>(rng);
    struct Combined {
      const ClosedFormSolution<QD>& x1;
      const ClosedFormSolution<QD>& x2;
      QD q;
      MD operator()(double t) const { return x1(t) + right_scale(x2(t), q); }
      MD derivative(double t) const { return x1.derivative(t) + right_scale(x2.derivative(t), q); }
    } sum{x1, x2, q};
    ASSERT_LT(grid_residual(am, sum, true), 1e-9);
  }
}

TEST(ScalarSolution, ConstantFactor) {
  Random rng(92);
  for (int n = 0; n < 20; ++n) {
    const QD a = random_scalar<QD>(rng);
    const QD c1 = random_nonzero<QD>(rng);
    for (int k = 0; k < kResidualGridPoints; ++k) {
      const double t = kResidualGridEnd * k / (kResidualGridPoints - 1);
      const double h = 1e-5;
      const QD fd = (scalar_solution_constant(a, c1, t + h) - scalar_solution_constant(a, c1, t)) * QD(1 / h);
      ASSERT_LT(magnitude(fd), 1e-6 * (1 + magnitude(c1)));
    }
  }
}

TEST(Transform, IdentityAndRoundTrip) {
  Random rng(93);
  for (int n = 0; n < 20; ++n) {
    const auto inst = random_ode_instance<double>(rng, 3, OdeInstanceKind::Eigencolumn);
    const auto sol = build_solution(inst.a, inst.b, inst.c, inst.form);
    const auto same = transform_solution(sol, identity<QD>(3));
    const MD f = random_invertible<QD>(rng, 3, Product::CR);
    const auto there = transform_solution(sol, f);
    const auto back = transform_solution(there, inverse(f, Product::CR));
    for (double t : {0.0, 0.7, 2.0}) {
      ASSERT_TRUE(approx_equal(same(t), sol(t), 1e-14));
      ASSERT_LT(max_magnitude(MD(back(t) - sol(t))), 1e-10 * (1 + max_magnitude(sol(t))));
    }
    const MD moved = transformed_system(inst.a, f);
    ASSERT_LE(grid_residual(moved, there), kSolutionTol);
  }
}

TEST(Transform, RealTransformationKeepsResidual) {
  Random rng(94);
  const auto inst = random_ode_instance<double>(rng, 2, OdeInstanceKind::Center);
  const auto sol = build_solution(inst.a, inst.b, inst.c, inst.form);
  MD f(2, 2);
  f << QD(std::cos(0.3)), QD(-std::sin(0.3)), QD(std::sin(0.3)), QD(std::cos(0.3));
  const auto moved = transform_solution(sol, f);
  EXPECT_LE(grid_residual(transformed_system(inst.a, f), moved), kSolutionTol);
  EXPECT_THROW(transform_solution(sol, MD(MD::Zero(2, 2))), PreconditionError);
}

TEST(Rk4, Examples) {
  const MD zero = MD::Zero(2, 2);
  const MD x0 = column({I, J});
  const auto still = rk4_integrate(zero, x0, 1.0, 0.1);
  EXPECT_EQ(still.back(), x0);

  const auto scalar = rk4_integrate_scalar(I, QD(1.0), kPi, 1e-3);
  EXPECT_LT(dist(scalar.back(), QD(-1.0)), 1e-6);

  const auto sys = rk4_integrate(diag2(I, J), column({QD(1.0), QD(1.0)}), 1.0, 1e-3);
  EXPECT_LT(dist(sys.back()(0, 0), exp_scalar(I, 1.0)), 1e-6);
  EXPECT_LT(dist(sys.back()(1, 0), exp_scalar(J, 1.0)), 1e-6);

  EXPECT_THROW(rk4_integrate(zero, x0, 1.0, 0.0), PreconditionError);
  EXPECT_THROW(rk4_integrate_scalar(I, QD(1.0), 1.0, -1.0), PreconditionError);
}
