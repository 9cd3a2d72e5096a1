#include <gtest/gtest.h>

#include "vecopt/solver.hpp"

namespace vecopt {
namespace {

const VectorProblem& jos1() { return *find_problem("jos1"); }

TEST(Solve, Jos1ConvergesFromRandomStarts) {
  for (auto ls : {LineSearchKind::kWolfe, LineSearchKind::kArmijo,
                  LineSearchKind::kStrongWolfe}) {
    SolverOptions opts;
    opts.linesearch = ls;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto rec = solve(jos1(), sample_start(jos1(), seed), opts);
      EXPECT_EQ(rec.status, RunStatus::kConverged) << to_string(ls);
      EXPECT_GE(rec.theta_final, -kDefaultTolCrit);
      // Pareto set of jos1 is the segment between 0 and 2·1.
      const double t = rec.x_final.mean() / 2.0;
      EXPECT_NEAR((rec.x_final - Vector::Constant(5, 2.0 * t)).norm(), 0.0,
                  1e-3);
      EXPECT_GE(t, -1e-3);
      EXPECT_LE(t, 1.0 + 1e-3);
    }
  }
}

TEST(Solve, CriticalStartStopsImmediately) {
  const Vector x0 = Vector::Zero(5);
  const auto rec = solve(jos1(), x0, SolverOptions{});
  EXPECT_EQ(rec.status, RunStatus::kConverged);
  EXPECT_EQ(rec.iters, 0);
  EXPECT_EQ(rec.f_evals, 1);
  EXPECT_EQ(rec.j_evals, 1);
  EXPECT_EQ(rec.x_final, x0);
}

TEST(Solve, SufficientDescentAndMonotonicity) {
  SolverOptions opts;
  for (const auto& p : suite()) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto rec = solve(p, sample_start(p, seed), opts);
      EXPECT_EQ(rec.descent_violations, 0) << p.name;
      EXPECT_EQ(rec.negative_betas, 0) << p.name;
      for (const auto& it : rec.trace) {
        EXPECT_LE(it.h_d, (1.0 - 2.0 / opts.mu) * it.h_v + 1e-12) << p.name;
        EXPECT_GE(it.beta, 0.0);
        EXPECT_LT(it.phi_decrease, 0.0) << p.name << " k=" << it.k;
        EXPECT_GT(it.alpha, 0.0);
      }
    }
  }
}

TEST(Solve, CounterAccounting) {
  SolverOptions opts;
  opts.linesearch = LineSearchKind::kArmijo;
  const auto a = solve(jos1(), sample_start(jos1(), 7), opts);
  ASSERT_EQ(a.status, RunStatus::kConverged);
  EXPECT_EQ(a.j_evals, a.iters + 1);
  std::int64_t trials = 0;
  for (const auto& it : a.trace) trials += it.ls_trials;
  EXPECT_EQ(a.f_evals, trials + 1);
  EXPECT_EQ(a.ls_trials, trials);

  opts.linesearch = LineSearchKind::kWolfe;
  const auto w = solve(jos1(), sample_start(jos1(), 7), opts);
  ASSERT_EQ(w.status, RunStatus::kConverged);
  EXPECT_GE(w.j_evals, w.iters + 1);
  EXPECT_LE(w.j_evals, w.f_evals);
}

TEST(Solve, ZoutendijkTermsVanish) {
  const auto& p = *find_problem("scaled_quad_50");
  const auto rec = solve(p, sample_start(p, 3), SolverOptions{});
  ASSERT_EQ(rec.status, RunStatus::kConverged);
  EXPECT_LT(rec.zoutendijk_last, 1e-6);
  EXPECT_TRUE(std::isfinite(rec.zoutendijk_sum));
}

TEST(Solve, AllMethodsRunOnJos1) {
  for (auto m : all_direction_methods()) {
    SolverOptions opts;
    opts.method = m;
    opts.linesearch = LineSearchKind::kStrongWolfe;
    const auto rec = solve(jos1(), sample_start(jos1(), 11), opts);
    EXPECT_EQ(rec.status, RunStatus::kConverged) << to_string(m);
  }
}

TEST(Solve, PolyhedralCone) {
  Matrix w(3, 2);
  w << 1.0, 0.0, 0.0, 1.0, 1.0, 1.0;
  const auto cone = ConeOrder::polyhedral(w);
  const auto& p = *find_problem("lov1");
  const auto rec = solve(p, sample_start(p, 2), SolverOptions{}, cone);
  EXPECT_EQ(rec.status, RunStatus::kConverged);
  EXPECT_EQ(rec.descent_violations, 0);
  EXPECT_THROW(solve(*find_problem("mop7"), sample_start(*find_problem("mop7"), 0),
                     SolverOptions{}, cone),
               InputError);
}

TEST(Solve, MaxItersAndOptionValidation) {
  SolverOptions opts;
  opts.max_iters = 1;
  opts.method = DirectionMethod::kSteepest;
  const auto& p = *find_problem("scaled_quad_200");
  const auto rec = solve(p, sample_start(p, 0), opts);
  EXPECT_EQ(rec.status, RunStatus::kMaxIters);
  EXPECT_EQ(rec.iters, 1);

  opts = {};
  opts.mu = 1.5;
  EXPECT_THROW(solve(p, sample_start(p, 0), opts), ConfigError);
  opts = {};
  EXPECT_THROW(solve(p, Vector::Zero(3), opts), InputError);
}

TEST(RunStatus, Names) {
  EXPECT_EQ(to_string(RunStatus::kConverged), "CONVERGED");
  EXPECT_EQ(to_string(RunStatus::kLineSearchFail), "LS_FAIL");
  EXPECT_EQ(parse_run_status("MAX_ITERS"), RunStatus::kMaxIters);
  EXPECT_FALSE(parse_run_status("DONE"));
}

}  // namespace
}  // namespace vecopt
