#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vecopt/cone.hpp"
#include "vecopt/directions.hpp"
#include "vecopt/linesearch.hpp"
#include "vecopt/problem.hpp"
#include "vecopt/subproblem.hpp"

namespace vecopt {

/// 5·√eps with eps = 2^-52, i.e. 5·2^-26 ≈ 7.45e-8.
inline const double kDefaultTolCrit = 5.0 * std::ldexp(1.0, -26);

enum class RunStatus {
  kConverged,
  kMaxIters,
  kLineSearchFail,
  kSubproblemFail,
  kDegenerateBeta,
};

std::string_view to_string(RunStatus status);
std::optional<RunStatus> parse_run_status(std::string_view id);

/// Data of one accepted step, handed to SolverOptions::on_step.
struct StepEvent {
  int k = 0;
  const Vector* x = nullptr;      // x^k
  const Vector* d = nullptr;      // d^k
  const Vector* F_x = nullptr;    // F(x^k)
  const Vector* F_new = nullptr;  // F(x^k + αd^k)
  double h_xd = 0;
  double alpha = 0;
};

struct SolverOptions {
  DirectionMethod method = DirectionMethod::kMPRP;
  LineSearchKind linesearch = LineSearchKind::kWolfe;
  double mu = 2.4;
  int max_iters = 5000;
  double tol_crit = kDefaultTolCrit;
  double subproblem_tol = kDefaultSubproblemTol;
  LineSearchParams ls;
  bool keep_trace = true;
  // Replace a degenerate conjugate parameter by β = 0 instead of stopping.
  bool restart_on_degenerate_beta = true;
  std::function<void(const StepEvent&)> on_step;  // optional observer

  void validate() const;
};

/// One iteration k, recorded after its line search.
struct IterationRecord {
  int k = 0;
  double norm_v = 0;
  double theta = 0;
  double h_v = 0;  // h(x^k, v^k)
  double beta = 0;
  double h_d = 0;  // h(x^k, d^k)
  double norm_d = 0;
  double alpha = 0;
  double phi_decrease = 0;  // φ(F(x^{k+1}) − F(x^k))
  int ls_trials = 0;
  bool restarted = false;
};

struct RunRecord {
  RunStatus status = RunStatus::kMaxIters;
  std::string message;
  int iters = 0;
  std::int64_t f_evals = 0;
  std::int64_t j_evals = 0;
  std::int64_t ls_trials = 0;
  double wall_time_s = 0;
  int restarts = 0;
  Vector x0;
  Vector x_final;
  Vector F_final;
  double theta_final = 0;
  double norm_v_final = 0;
  double min_norm_v = 0;
  // Σ h²(x^k, d^k)/‖d^k‖² and its last term.
  double zoutendijk_sum = 0;
  double zoutendijk_last = 0;
  // Iterations breaking h(x,d) ≤ (1 − 2/μ)h(x,v) + 1e-12 (checked for mprp).
  int descent_violations = 0;
  // Iterations with β < 0 for methods whose β must be nonnegative.
  int negative_betas = 0;
  std::vector<IterationRecord> trace;
};

/**
 * Runs the conjugate gradient iteration from x0 until θ(x^k) ≥ −tol_crit
 * or max_iters steps were taken. The Jacobian is evaluated once per
 * iterate: the Wolfe searches hand back the one computed at the accepted
 * point, Armijo leaves it to the driver. Line-search, subproblem and
 * degenerate-β failures end the run with the matching status, keeping the
 * trace so far.
 */
RunRecord solve(const VectorProblem& p, const Vector& x0,
                const SolverOptions& opts, const ConeOrder& cone);

/// Same with K = ℝ^m_+.
RunRecord solve(const VectorProblem& p, const Vector& x0,
                const SolverOptions& opts);

}  // namespace vecopt
