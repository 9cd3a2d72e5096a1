#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vecopt/problem.hpp"
#include "vecopt/subproblem.hpp"

namespace vecopt {
namespace {

TEST(Suite, Shape) {
  const auto& problems = suite();
  ASSERT_GE(problems.size(), 10u);
  std::set<std::string> names;
  bool convex = false, nonconvex = false, three_objectives = false;
  int max_n = 0;
  for (const auto& p : problems) {
    EXPECT_TRUE(names.insert(p.name).second) << p.name;
    EXPECT_TRUE(p.m == 2 || p.m == 3) << p.name;
    EXPECT_GE(p.n, 2) << p.name;
    EXPECT_LE(p.n, 200) << p.name;
    ASSERT_EQ(p.lower.size(), p.n);
    EXPECT_TRUE((p.lower.array() < p.upper.array()).all()) << p.name;
    EXPECT_FALSE(p.reference.empty());
    convex |= p.convex;
    nonconvex |= !p.convex;
    three_objectives |= p.m == 3;
    max_n = std::max(max_n, p.n);
  }
  EXPECT_TRUE(convex && nonconvex && three_objectives);
  EXPECT_EQ(max_n, 200);
  EXPECT_NE(find_problem("jos1"), nullptr);
  EXPECT_EQ(find_problem("nope"), nullptr);
}

TEST(EvaluateF, CountsAndDeterminism) {
  const VectorProblem& p = *find_problem("jos1");
  EvalCounters c;
  const Vector x = Vector::Zero(p.n);
  const Vector f1 = evaluate_F(p, x, c);
  const Vector f2 = evaluate_F(p, x, c);
  EXPECT_EQ(c.f_evals, 2);
  EXPECT_EQ(c.j_evals, 0);
  EXPECT_EQ(f1, f2);
  EXPECT_EQ(f1[0], 0.0);
  EXPECT_DOUBLE_EQ(f1[1], 0.5 * 4.0 * p.n);
  EXPECT_THROW(evaluate_F(p, Vector::Zero(p.n + 1), c), InputError);
}

TEST(EvaluateF, Jos1HandValueInTwoDimensions) {
  // ½‖x − a_i‖² with a_1 = 0, a_2 = (2, 2), x = 0 → (0, 4)
  VectorProblem p = *find_problem("jos1");
  p.n = 2;
  p.lower = Vector::Constant(2, -2);
  p.upper = Vector::Constant(2, 4);
  EvalCounters c;
  const Vector f = evaluate_F(p, Vector::Zero(2), c);
  EXPECT_EQ(f[0], 0.0);
  EXPECT_DOUBLE_EQ(f[1], 4.0);
}

TEST(EvaluateF, NonFiniteOutputCarriesPoint) {
  VectorProblem p;
  p.name = "bad";
  p.n = 1;
  p.m = 1;
  p.eval_F = [](const Vector&) { return Vector::Constant(1, std::nan("")); };
  p.eval_J = [](const Vector&) { return Matrix::Constant(1, 1, 1.0 / 0.0); };
  EvalCounters c;
  const Vector x = Vector::Constant(1, 3.0);
  try {
    evaluate_F(p, x, c);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_EQ(e.point(), x);
  }
  EXPECT_THROW(evaluate_J(p, x, c), EvaluationError);
  EXPECT_EQ(c.f_evals, 1);
  EXPECT_EQ(c.j_evals, 1);
}

TEST(EvaluateJ, QuadraticRowsAreShiftedPoints) {
  const VectorProblem& p = *find_problem("jos1");
  EvalCounters c;
  Vector x(p.n);
  x << 0.3, -1.0, 2.0, 0.0, 5.0;
  const Matrix jac = evaluate_J(p, x, c);
  EXPECT_EQ(c.j_evals, 1);
  EXPECT_EQ(Vector(jac.row(0).transpose()), x);
  EXPECT_EQ(Vector(jac.row(1).transpose()), Vector(x.array() - 2.0));
}

TEST(Suite, AnalyticJacobiansMatchFiniteDifferences) {
  std::mt19937_64 rng(11);
  for (const auto& p : suite()) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      Vector x(p.n);
      for (int i = 0; i < p.n; ++i) {
        x[i] = std::uniform_real_distribution<double>(p.lower[i], p.upper[i])(rng);
      }
      const Matrix fd = oracle::fd_jacobian(p.eval_F, x);
      const Matrix jac = p.eval_J(x);
      worst = std::max(worst, (jac - fd).norm() / std::max(1.0, jac.norm()));
    }
    EXPECT_LE(worst, 1e-5) << p.name;
  }
}

TEST(Suite, Jos1ParetoSetIsTheSegment) {
  // Points on [a_1, a_2] are critical, points off it are not.
  const VectorProblem& p = *find_problem("jos1");
  const ConeOrder cone = ConeOrder::nonneg_orthant(2);
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    const Vector x = Vector::Constant(p.n, 2.0 * t);
    EXPECT_GE(steepest_direction(p.eval_J(x), cone).theta, -1e-20);
  }
  Vector off = Vector::Constant(p.n, 1.0);
  off[0] = 1.5;
  EXPECT_LT(steepest_direction(p.eval_J(off), cone).theta, -1e-3);
}

TEST(SampleStart, DeterministicAndInsideBox) {
  for (const auto& p : suite()) {
    const Vector a = sample_start(p, 42);
    EXPECT_EQ(a, sample_start(p, 42));
    EXPECT_NE(a, sample_start(p, 43));
    EXPECT_TRUE((a.array() >= p.lower.array()).all());
    EXPECT_TRUE((a.array() <= p.upper.array()).all());
  }
}

}  // namespace
}  // namespace vecopt
