#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vecopt/subproblem.hpp"

namespace vecopt {
namespace {

TEST(SteepestDirection, ScalarCaseIsNegativeGradient) {
  Matrix jac(1, 2);
  jac << 2.0, 0.0;
  const auto r = steepest_direction(jac, ConeOrder::nonneg_orthant(1));
  EXPECT_EQ(r.v, Vector((Vector(2) << -2.0, 0.0).finished()));
  EXPECT_DOUBLE_EQ(r.theta, -2.0);
  EXPECT_DOUBLE_EQ(r.h_at_v, -4.0);
  EXPECT_EQ(r.lambda, Vector::Ones(1));
}

TEST(SteepestDirection, OpposingGradientsAreCritical) {
  Matrix jac(2, 2);
  jac << 1.0, 0.0, -1.0, 0.0;
  const auto r = steepest_direction(jac, ConeOrder::nonneg_orthant(2));
  EXPECT_EQ(r.v.norm(), 0.0);
  EXPECT_EQ(r.theta, 0.0);
  EXPECT_TRUE(is_critical(r.theta, 5.0 * std::ldexp(1.0, -26)));
}

TEST(SteepestDirection, OrthogonalGradients) {
  // Grid search over λ ∈ [0, 1] (step 1e-4) puts the minimum of
  // ½‖λ e_1 + (1 − λ) e_2‖² at λ = ½.
  Matrix jac = Matrix::Identity(2, 2);
  Vector best;
  const double grid = oracle::dual_grid_min(jac.transpose(), &best);
  EXPECT_NEAR(best[0], 0.5, 1e-6);
  const auto r = steepest_direction(jac, ConeOrder::nonneg_orthant(2));
  EXPECT_NEAR(r.lambda[0], 0.5, 1e-15);
  EXPECT_NEAR(r.v[0], -0.5, 1e-15);
  EXPECT_NEAR(r.v[1], -0.5, 1e-15);
  EXPECT_NEAR(r.theta, -0.25, 1e-15);
  EXPECT_NEAR(r.theta, -grid, 1e-12);
  EXPECT_NEAR(r.h_at_v, -0.5, 1e-15);
}

TEST(SteepestDirection, ZeroJacobian) {
  const auto r =
      steepest_direction(Matrix::Zero(3, 4), ConeOrder::nonneg_orthant(3));
  EXPECT_EQ(r.v, Vector::Zero(4));
  EXPECT_EQ(r.theta, 0.0);
  EXPECT_TRUE(r.lambda.isApprox(Vector::Constant(3, 1.0 / 3.0)));
}

TEST(SteepestDirection, InputErrors) {
  EXPECT_THROW(steepest_direction(Matrix::Zero(2, 2),
                                  ConeOrder::nonneg_orthant(3)),
               InputError);
  EXPECT_THROW(steepest_direction(Matrix::Identity(2, 2),
                                  ConeOrder::nonneg_orthant(2), 0.0),
               ConfigError);
}

TEST(SteepestDirection, InvariantsAndOracles) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> objectives(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = objectives(rng);
    const int n = dim(rng);
    const Matrix jac = oracle::uniform_matrix(rng, m, n, -2.0, 2.0);
    const ConeOrder cone = ConeOrder::nonneg_orthant(m);
    const auto r = steepest_direction(jac, cone);

    EXPECT_LE(r.theta, 0.0);
    EXPECT_GE(r.lambda.minCoeff(), 0.0);
    EXPECT_NEAR(r.lambda.sum(), 1.0, 1e-10);
    EXPECT_TRUE(r.v.isApprox(-(jac.transpose() * r.lambda), 1e-12) ||
                r.v.norm() < 1e-14);
    EXPECT_NEAR(r.h_at_v + 0.5 * r.v.squaredNorm(), r.theta, 1e-10);
    if (r.v.norm() > 1e-8) {
      EXPECT_LE(r.h_at_v, -0.5 * r.v.squaredNorm() + 1e-12);
      EXPECT_LT(r.theta, 0.0);
    }

    const Matrix G = jac.transpose();
    EXPECT_NEAR(r.theta, -oracle::dual_grid_min(G), 1e-6);
    // θ is a dual value, so it bounds every primal value from below; the
    // primal objective at v reaching θ certifies optimality.
    const double primal_at_v =
        (G.transpose() * r.v).maxCoeff() + 0.5 * r.v.squaredNorm();
    EXPECT_NEAR(primal_at_v, r.theta, 1e-10);
    if (trial < 15) {
      EXPECT_LE(r.theta, oracle::primal_grid_min(G) + 1e-12)
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(SteepestDirection, ManyGeneratorsUseTheIterativeSolver) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix w = oracle::uniform_matrix(rng, 6, 3, 0.05, 1.0);
    const ConeOrder cone = ConeOrder::polyhedral(w);
    const Matrix jac = oracle::uniform_matrix(rng, 3, 4, -5.0, 5.0);
    const auto r = steepest_direction(jac, cone);
    const Matrix G = jac.transpose() * cone.generators().transpose();
    // KKT: every (Qλ)_j ≥ λᵀQλ, with equality on the support.
    const Vector grad = G.transpose() * G * r.lambda;
    const double level = r.lambda.dot(grad);
    const double scale = 1.0 + (G.transpose() * G).diagonal().maxCoeff();
    EXPECT_GE(grad.minCoeff(), level - 1e-10 * scale);
    EXPECT_LE(r.gap, 1e-12 * scale);
    EXPECT_NEAR(r.h_at_v + 0.5 * r.v.squaredNorm(), r.theta, 1e-10);
  }
}

TEST(SteepestDirection, ThreeObjectivesMatchDualGrid) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix jac = oracle::uniform_matrix(rng, 3, 2, -5.0, 5.0);
    const auto r = steepest_direction(jac, ConeOrder::nonneg_orthant(3));
    EXPECT_NEAR(r.theta, -oracle::dual_grid_min(jac.transpose()), 1e-6);
  }
}

TEST(IsCritical, StoppingRule) {
  const double tol = 5.0 * std::ldexp(1.0, -26);
  EXPECT_NEAR(tol, 7.45e-8, 1e-10);
  EXPECT_TRUE(is_critical(0.0, tol));
  EXPECT_FALSE(is_critical(-1e-3, tol));
  EXPECT_TRUE(is_critical(-1e-9, tol));
}

TEST(ProjectToSimplex, KnownProjections) {
  Vector y(3);
  y << 0.2, 0.3, 0.5;
  EXPECT_TRUE(project_to_simplex(y).isApprox(y));
  y << 2.0, 0.0, 0.0;
  EXPECT_TRUE(project_to_simplex(y).isApprox(Vector::Unit(3, 0)));
  y << 1.0, 1.0, -5.0;
  Vector expected(3);
  expected << 0.5, 0.5, 0.0;
  EXPECT_TRUE(project_to_simplex(y).isApprox(expected));
}

}  // namespace
}  // namespace vecopt
