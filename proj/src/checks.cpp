#include "skewla/checks.hpp"

#include "skewla/eigenpairs.hpp"
#include "skewla/instances.hpp"
#include "skewla/ode.hpp"
#include "skewla/quasidet.hpp"
#include "skewla/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace skewla {

namespace {

using Q = Quaternion<Rational>;
using MQ = Matrix<Q>;
using QD = QuaternionD;
using MD = Matrix<QD>;

constexpr Product kKinds[] = {Product::RC, Product::CR};
constexpr Side kSides[] = {Side::Left, Side::Right};

std::uint64_t sub_seed(std::uint64_t seed, int id) { return seed * 1000003ULL + static_cast<std::uint64_t>(id); }

CheckResult timed(int id, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

namespace checks {

CheckResult biring_axioms(std::uint64_t seed) {
  auto r = timed(1, "biring axioms", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 1));
    long failures = 0;
    for (int s = 0; s < 1000; ++s) {
      const auto n = rng.integer(1, 4);
      const MQ a = random_matrix<Q>(rng, n, n), b = random_matrix<Q>(rng, n, n), c = random_matrix<Q>(rng, n, n);
      const MQ e = identity<Q>(n);
      for (Product k : kKinds) {
        const bool ok = mul(mul(a, b, k), c, k) == mul(a, mul(b, c, k), k) &&
                        mul(a, MQ(b + c), k) == MQ(mul(a, b, k) + mul(a, c, k)) &&
                        mul(MQ(a + b), c, k) == MQ(mul(a, c, k) + mul(b, c, k)) && mul(e, a, k) == a &&
                        mul(a, e, k) == a;
        if (!ok) ++failures;
      }
      ++r.samples;
    }
    r.pass = failures == 0;
    r.detail = cat(r.samples, " triples x 2 products, ", failures, " violations");
  });
  if (r.seconds >= 10.0) {
    r.pass = false;
    r.detail += cat(", took ", r.seconds, " s (limit 10 s)");
  }
  return r;
}

CheckResult transpose_duality(std::uint64_t seed) {
  return timed(2, "transpose duality", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 2));
    long failures = 0;
    for (int s = 0; s < 1000; ++s) {
      const auto p = rng.integer(1, 4), q = rng.integer(1, 4), m = rng.integer(1, 4);
      const MQ a = random_matrix<Q>(rng, p, q);
      const MQ b = random_matrix<Q>(rng, m, p);
      const MQ dual = rc(MQ(a.transpose()), MQ(b.transpose())).transpose();
      if (cr(a, b) != dual) ++failures;
      ++r.samples;
    }
    r.pass = failures == 0;
    r.detail = cat(r.samples, " pairs, ", failures, " mismatches");
  });
}

CheckResult quasidet_inverse(std::uint64_t seed) {
  return timed(3, "quasideterminant inverse identity", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 3));
    const Q one(1);
    long defined = 0, undefined = 0, failures = 0, closed_checked = 0, closed_failures = 0;
    for (int s = 0; s < 200; ++s) {
      const auto n = rng.integer(1, 4);
      const Product kind = kKinds[s % 2];
      MQ a = random_invertible<Q>(rng, n, kind);
      if (n > 1 && rng.chance(1, 3)) {
        MQ sparse = a;
        sparse(rng.integer(0, n - 1), rng.integer(0, n - 1)) = Q();
        if (!is_singular(sparse, kind)) a = sparse;
      }
      const MQ inv = inverse(a, kind);
      const auto qm = quasidet_matrix(a, kind);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (qm(i, j).has_value() == is_exact_zero(inv(i, j))) ++failures;
          if (!qm(i, j)) {
            ++undefined;
            continue;
          }
          ++defined;
          if (*qm(i, j) * inv(i, j) != one || inv(i, j) * *qm(i, j) != one) ++failures;
        }
      }
      if (n == 2) {
        const auto cf = quasidet_2x2_closed_form(a, kind);
        for (Eigen::Index i = 0; i < 2; ++i)
          for (Eigen::Index j = 0; j < 2; ++j) {
            ++closed_checked;
            if (cf(i, j) != qm(i, j)) ++closed_failures;
          }
      }
      ++r.samples;
    }
    // Extra 2 x 2 samples, with zeros, for the literal formulas.
    for (int s = 0; s < 200; ++s) {
      MQ a = random_matrix<Q>(rng, 2, 2);
      if (rng.chance(1, 3)) a(rng.integer(0, 1), rng.integer(0, 1)) = Q();
      for (Product kind : kKinds) {
        const auto qm = quasidet_matrix(a, kind);
        const auto cf = quasidet_2x2_closed_form(a, kind);
        for (Eigen::Index i = 0; i < 2; ++i)
          for (Eigen::Index j = 0; j < 2; ++j) {
            ++closed_checked;
            if (cf(i, j) != qm(i, j)) ++closed_failures;
          }
      }
    }
    r.pass = failures == 0 && closed_failures == 0 && defined > 0;
    r.detail = cat(r.samples, " matrices, ", defined, " defined / ", undefined, " undefined entries, ", failures,
                   " identity failures; 2x2 closed form ", closed_checked - closed_failures, "/", closed_checked,
                   " entries match");
  });
}

CheckResult eigen_implication(std::uint64_t seed) {
  return timed(4, "eigen implication (f - bE singular)", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 4));
    long pairs = 0, verified = 0, singular = 0, pair_form = 0;
    for (int s = 0; s < 500; ++s) {
      const Side side = kSides[s % 2];
      const Product kind = kKinds[(s / 2) % 2];
      const auto n = rng.integer(1, 4);
      const auto inst = random_eigen_instance<Rational>(rng, n, side, kind);
      const PairSpec<Q> spec{inst.a, inst.u};
      const PairForm form = side == Side::Left ? PairForm::ScaledLeft : PairForm::ScaledRight;
      for (const auto& p : inst.pairs) {
        ++pairs;
        if (eigen_check(inst.a, p)) ++verified;
        if (is_matrix_eigenvalue(inst.a, p.value, kind)) ++singular;
        if (pair_eigen_check(spec, p.value, kind, form)) ++pair_form;
      }
      ++r.samples;
    }
    r.pass = verified == pairs && singular == pairs;
    r.detail = cat(r.samples, " instances, ", pairs, " eigenpairs (", verified, " verified): f - bE singular for ",
                   singular, "/", pairs, "; pair form with u singular for ", pair_form, "/", pairs);
  });
}

CheckResult conjugacy_and_commutation(std::uint64_t seed) {
  return timed(5, "conjugacy closure and commutation criterion", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 5));
    long closure_failures = 0, criterion_failures = 0, commuting = 0, non_commuting = 0, instances = 0;
    while (instances < 100) {
      const Side side = kSides[instances % 2];
      const Product kind = kKinds[(instances / 2) % 2];
      const auto n = rng.integer(1, 3);
      const auto inst = random_eigen_instance<Rational>(rng, n, side, kind);
      bool nonreal = false;
      for (Eigen::Index k = 0; k < inst.a.size(); ++k) nonreal = nonreal || !inst.a.data()[k].is_real();
      if (!nonreal) continue;
      ++instances;
      for (const auto& p : inst.pairs) {
        for (int m = 0; m < 20; ++m) {
          Q c;
          switch (m % 3) {
            case 0: c = Q(draw_at_least(0.1, [&] { return random_scalar<Rational>(rng); })); break;
            case 1: c = draw_at_least(0.1, [&] { return random_in_centralizer<Rational>(rng, Q(inst.a(0, 0))); }); break;
            default: c = random_nonzero<Q>(rng); break;
          }
          if (!eigen_check(inst.a, conjugate_eigen(p, c))) ++closure_failures;
          const bool commutes = commutes_with_all(c, inst.a);
          (commutes ? commuting : non_commuting)++;
          if (scaling_preserves(p, c, inst.a) != commutes) ++criterion_failures;
          ++r.samples;
        }
      }
    }
    r.pass = closure_failures == 0 && criterion_failures == 0;
    r.detail = cat(instances, " instances, ", r.samples, " (pair, c) samples (", commuting, " commuting, ",
                   non_commuting, " not): ", closure_failures, " closure failures, ", criterion_failures,
                   " criterion failures");
  });
}

CheckResult central_pair_reduction(std::uint64_t seed) {
  return timed(6, "central pair reduction", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 6));
    long failures = 0, singular = 0;
    for (int s = 0; s < 200; ++s) {
      const Product kind = kKinds[s % 2];
      const auto n = rng.integer(1, 4);
      const Q b = random_scalar<Q>(rng);
      MQ f;
      if (s % 4 < 2) {
        // f - bE singular by construction: a product through n - 1 dimensions.
        MQ f0 = MQ::Zero(n, n);
        if (n > 1) {
          const MQ p = random_matrix<Q>(rng, n, n - 1), q = random_matrix<Q>(rng, n - 1, n);
          f0 = kind == Product::RC ? rc(p, q) : cr(q, p);
        }
        f = f0 + left_scale(b, identity<Q>(n));
      } else {
        f = random_matrix<Q>(rng, n, n);
      }
      const Matrix<Rational> g_real = random_invertible<Rational>(rng, n, kind);
      const MQ g = cast_matrix<Q>(g_real, [](const Rational& x) { return Q(x); });
      const bool expected = is_matrix_eigenvalue(f, b, kind);
      if (expected) ++singular;
      const PairSpec<Q> spec{f, g};
      if (pair_eigen_check(spec, b, kind, PairForm::ScaledRight) != expected) ++failures;
      if (pair_eigen_check(spec, b, kind, PairForm::ScaledLeft) != expected) ++failures;
      ++r.samples;
    }
    r.pass = failures == 0;
    r.detail = cat(r.samples, " instances (", singular, " with f - bE singular), ", failures, " disagreements");
  });
}

CheckResult commutative_regression(std::uint64_t seed) {
  return timed(7, "commutative regression", [&](CheckResult& r) {
    constexpr double tol = 1e-8;
    Random rng(sub_seed(seed, 7));
    long failures = 0, independence_failures = 0;
    std::string first_failure;
    auto fail = [&](const std::string& what) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    };
    for (int s = 0; s < 100; ++s) {
      std::vector<double> lambdas;
      while (lambdas.size() < 4) {
        const double x = rng.uniform(-3.0, 3.0);
        if (std::all_of(lambdas.begin(), lambdas.end(), [&](double y) { return std::abs(x - y) > 0.3; }))
          lambdas.push_back(x);
      }
      Eigen::MatrixXd p(4, 4);
      do {
        for (Eigen::Index k = 0; k < p.size(); ++k) p.data()[k] = rng.uniform(-1.0, 1.0);
      } while (std::abs(p.determinant()) < 0.05);
      const Eigen::MatrixXd a = p * Eigen::VectorXd::Map(lambdas.data(), 4).asDiagonal() * p.inverse();

      // Classical right eigenvectors of a and left eigenvectors (of a^T).
      const Eigen::EigenSolver<Eigen::MatrixXd> right(a), left(Eigen::MatrixXd(a.transpose()));
      const Matrix<double> f = a;
      std::vector<Matrix<double>> by_variant[4];
      for (int k = 0; k < 4; ++k) {
        const double lambda = right.eigenvalues()(k).real();
        Eigen::Index lk = 0;
        (left.eigenvalues().real().array() - lambda).abs().minCoeff(&lk);
        const Matrix<double> col = right.eigenvectors().col(k).real();
        const Matrix<double> row = left.eigenvectors().col(lk).real().transpose();
        int variant = 0;
        for (Side side : kSides) {
          for (Product kind : kKinds) {
            const Matrix<double>& v = eigenvector_is_row(side, kind) ? row : col;
            if (!eigen_check(f, EigenPair<double>{lambda, v, side, kind}, tol)) fail("classical pair rejected");
            if (!is_matrix_eigenvalue(f, lambda, kind, tol)) fail("classical value not singular");
            const auto space = eigenspace(f, lambda, side, kind, tol);
            if (space.size() != 1) {
              fail("eigenspace dimension " + std::to_string(space.size()));
            } else {
              // The computed basis vector is parallel to the classical one.
              const Matrix<double> both = eigenvector_is_row(side, kind)
                                              ? Matrix<double>((Matrix<double>(2, 4) << space[0], v).finished())
                                              : Matrix<double>((Matrix<double>(4, 2) << space[0], v).finished());
              if (rank(both, Product::RC, tol) != 1) fail("eigenspace misses the classical vector");
              by_variant[variant].push_back(space[0]);
            }
            ++variant;
          }
        }
        // A value away from the spectrum is no eigenvalue in any notion.
        double away = lambda + 0.1;
        if (std::any_of(lambdas.begin(), lambdas.end(), [&](double y) { return std::abs(away - y) < 0.05; }))
          away = lambda - 0.1;
        for (Product kind : kKinds)
          if (is_matrix_eigenvalue(f, away, kind, tol)) fail("non-eigenvalue reported singular");
      }
      int variant = 0;
      for (Side side : kSides) {
        for (Product kind : kKinds) {
          (void)kind;
          if (by_variant[variant].size() == 4 && !independent(by_variant[variant], side, tol)) ++independence_failures;
          ++variant;
        }
      }
      ++r.samples;
    }
    r.pass = failures == 0 && independence_failures == 0;
    r.detail = cat(r.samples, " real 4x4 matrices, 4 notions each: ", failures, " mismatches, ",
                   independence_failures, " dependent eigenvector sets");
    if (!first_failure.empty()) r.detail += " (first: " + first_failure + ")";
  });
}

CheckResult exponent_identity(std::uint64_t seed) {
  return timed(8, "exponent conjugation identity", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 8));
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const QD a = random_scalar<QD>(rng, 2.0);
      const QD c = random_nonzero<QD>(rng, 2.0);
      const double t = rng.uniform(0.0, 2.0);
      for (double v : conj_exp_residuals(a, c, t)) worst = std::max(worst, v);
      ++r.samples;
    }
    long series_failures = 0, series_samples = 0;
    for (int s = 0; s < 200; ++s) {
      const Q a = random_scalar<Q>(rng);
      const Q c = random_nonzero<Q>(rng);
      const Rational t = Rational(rng.integer(0, 4)) / Rational(2);
      const auto terms = conj_series_terms(a, c, t, 8);
      Q lhs, rhs;
      for (std::size_t n = 0; n < terms[0].size(); ++n) {
        lhs = lhs + terms[0][n];
        rhs = rhs + terms[1][n];
        if (terms[0][n] != terms[1][n] || lhs != rhs) ++series_failures;
      }
      ++series_samples;
    }
    r.pass = worst < 1e-9 && series_failures == 0;
    r.detail = cat(r.samples, " float samples, worst residual ", worst, "; ", series_samples,
                   " exact series to order 8, ", series_failures, " mismatches");
  });
}

CheckResult ode_solutions(std::uint64_t seed) {
  return timed(9, "ODE closed-form solutions", [&](CheckResult& r) {
    Random rng(sub_seed(seed, 9));
    long accepted = 0, rejected = 0, residual_failures = 0, rk4_failures = 0;
    double worst_residual = 0.0, worst_rk4 = 0.0;
    for (int s = 0; s < 150; ++s) {
      const auto kind = static_cast<OdeInstanceKind>(s % 3);
      const auto n = rng.integer(1, 4);
      const auto inst = random_ode_instance<double>(rng, n, kind);
      ClosedFormSolution<QD> sol;
      try {
        sol = build_solution(inst.a, inst.b, inst.c, inst.form);
      } catch (const RejectedSolution&) {
        ++rejected;
        ++r.samples;
        continue;
      }
      ++accepted;
      const double residual = grid_residual(inst.a, sol);
      worst_residual = std::max(worst_residual, residual);
      if (residual > kSolutionTol) ++residual_failures;
      const auto traj = rk4_integrate(inst.a, sol(0.0), 1.0, 1e-3);
      const double gap = max_magnitude(MD(traj.back() - sol(1.0)));
      worst_rk4 = std::max(worst_rk4, gap);
      if (gap > 1e-6) ++rk4_failures;
      ++r.samples;
    }
    const auto bad = violating_ode_example();
    bool violator_rejected = false;
    try {
      build_solution(bad.a, bad.b, bad.c, bad.form);
    } catch (const RejectedSolution&) {
      violator_rejected = true;
    }
    const double naive = grid_residual(bad.a, naive_solution(bad.b, bad.c, bad.form));

    long random_violators = 0, random_rejected = 0, random_large = 0;
    for (int s = 0; s < 50; ++s) {
      const auto v = random_ode_instance<double>(rng, rng.integer(2, 4), OdeInstanceKind::Violating);
      if (center_condition(v.a, v.b) || eigencolumn_center_condition(v.c, v.b)) continue;
      ++random_violators;
      try {
        build_solution(v.a, v.b, v.c, v.form);
      } catch (const RejectedSolution&) {
        ++random_rejected;
      }
      if (grid_residual(v.a, naive_solution(v.b, v.c, v.form)) > 1e-3) ++random_large;
    }

    r.pass = rejected == 0 && residual_failures == 0 && rk4_failures == 0 && violator_rejected && naive > 1e-3;
    r.detail = cat(accepted, "/", r.samples, " constructed instances accepted, worst grid residual ", worst_residual,
                   ", worst RK4 gap ", worst_rk4, "; violating example ", violator_rejected ? "rejected" : "accepted",
                   " with naive residual ", naive, "; random violators: ", random_rejected, "/", random_violators,
                   " rejected, ", random_large, " with naive residual > 1e-3");
  });
}

}  // namespace checks

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  return {checks::biring_axioms(seed),          checks::transpose_duality(seed),
          checks::quasidet_inverse(seed),       checks::eigen_implication(seed),
          checks::conjugacy_and_commutation(seed), checks::central_pair_reduction(seed),
          checks::commutative_regression(seed), checks::exponent_identity(seed),
          checks::ode_solutions(seed)};
}

}  // namespace skewla
