#include "vecopt/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <optional>
#include <utility>

namespace vecopt {

namespace {

constexpr double kDescentSlack = 1e-12;

constexpr std::array<std::pair<RunStatus, std::string_view>, 5> kStatusNames{{
    {RunStatus::kConverged, "CONVERGED"},
    {RunStatus::kMaxIters, "MAX_ITERS"},
    {RunStatus::kLineSearchFail, "LS_FAIL"},
    {RunStatus::kSubproblemFail, "SUBPROBLEM_FAIL"},
    {RunStatus::kDegenerateBeta, "DEGENERATE_BETA"},
}};

bool requires_nonnegative_beta(DirectionMethod m) {
  return m == DirectionMethod::kMPRP || m == DirectionMethod::kPRPPlus;
}

}  // namespace

std::string_view to_string(RunStatus status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "?";
}

std::optional<RunStatus> parse_run_status(std::string_view id) {
  for (const auto& [s, name] : kStatusNames) {
    if (name == id) return s;
  }
  return std::nullopt;
}

void SolverOptions::validate() const {
  if (method == DirectionMethod::kMPRP && !(mu > 2.0)) {
    throw ConfigError("mu must be greater than 2");
  }
  if (max_iters < 1) throw ConfigError("max_iters must be at least 1");
  if (!(tol_crit > 0.0)) throw ConfigError("tol_crit must be positive");
  if (!(subproblem_tol > 0.0)) {
    throw ConfigError("subproblem tolerance must be positive");
  }
  ls.validate(linesearch);
}

RunRecord solve(const VectorProblem& p, const Vector& x0,
                const SolverOptions& opts) {
  return solve(p, x0, opts, ConeOrder::nonneg_orthant(p.m));
}

RunRecord solve(const VectorProblem& p, const Vector& x0,
                const SolverOptions& opts, const ConeOrder& cone) {
  opts.validate();
  if (cone.dim() != p.m) {
    throw InputError("cone dimension " + std::to_string(cone.dim()) +
                     " does not match problem " + p.name + " with m = " +
                     std::to_string(p.m));
  }
  const auto started = std::chrono::steady_clock::now();
  const double descent_factor = 1.0 - 2.0 / opts.mu;

  RunRecord rec;
  rec.x0 = x0;
  rec.min_norm_v = std::numeric_limits<double>::infinity();
  EvalCounters counters;
  Vector x = x0;
  Vector F = evaluate_F(p, x, counters);
  Matrix J = evaluate_J(p, x, counters);
  std::optional<DirectionState> prev;

  for (int k = 0;; ++k) {
    SteepestResult sd;
    try {
      sd = steepest_direction(J, cone, opts.subproblem_tol);
    } catch (const SubproblemError& e) {
      rec.status = RunStatus::kSubproblemFail;
      rec.message = e.what();
      break;
    }
    rec.theta_final = sd.theta;
    rec.norm_v_final = sd.v.norm();
    rec.min_norm_v = std::min(rec.min_norm_v, rec.norm_v_final);
    if (is_critical(sd.theta, opts.tol_crit)) {
      rec.status = RunStatus::kConverged;
      break;
    }
    if (k >= opts.max_iters) {
      rec.status = RunStatus::kMaxIters;
      break;
    }

    double beta = 0.0;
    bool restarted = false;
    if (prev && opts.method != DirectionMethod::kSteepest) {
      const HValues hv = cross_terms(*prev, J, sd.v, sd.h_at_v, cone);
      try {
        beta = conjugate_parameter(opts.method, hv, opts.mu);
      } catch (const DegenerateBetaError& e) {
        if (!opts.restart_on_degenerate_beta) {
          rec.status = RunStatus::kDegenerateBeta;
          rec.message = e.what();
          break;
        }
        restarted = true;
      }
    }
    Vector d = direction_update(sd.v, beta, prev ? &prev->d_prev : nullptr);
    double h_d = h(J, d, cone);
    if (opts.method == DirectionMethod::kMPRP &&
        h_d > descent_factor * sd.h_at_v + kDescentSlack) {
      ++rec.descent_violations;
    }
    if (!(h_d < 0.0)) {
      // Not a descent direction; fall back to steepest descent.
      d = sd.v;
      h_d = sd.h_at_v;
      beta = 0.0;
      restarted = true;
    }
    if (restarted) ++rec.restarts;
    if (requires_nonnegative_beta(opts.method) && beta < 0.0) {
      ++rec.negative_betas;
    }

    StepResult step;
    try {
      step = line_search(opts.linesearch, p, cone, x, F, d, h_d, opts.ls,
                         counters);
    } catch (const LineSearchError& e) {
      rec.status = RunStatus::kLineSearchFail;
      rec.message = e.what();
      break;
    }
    rec.ls_trials += step.trials;
    if (opts.on_step) {
      opts.on_step(StepEvent{k, &x, &d, &F, &step.F_new, h_d, step.alpha});
    }

    const double norm_d = d.norm();
    rec.zoutendijk_last = h_d * h_d / (norm_d * norm_d);
    rec.zoutendijk_sum += rec.zoutendijk_last;
    if (opts.keep_trace) {
      IterationRecord it;
      it.k = k;
      it.norm_v = rec.norm_v_final;
      it.theta = sd.theta;
      it.h_v = sd.h_at_v;
      it.beta = beta;
      it.h_d = h_d;
      it.norm_d = norm_d;
      it.alpha = step.alpha;
      it.phi_decrease = phi(step.F_new - F, cone);
      it.ls_trials = step.trials;
      it.restarted = restarted;
      rec.trace.push_back(it);
    }

    prev = DirectionState{d, std::move(J), sd.h_at_v, h_d};
    x += step.alpha * d;
    F = std::move(step.F_new);
    J = step.J_new ? std::move(*step.J_new) : evaluate_J(p, x, counters);
    rec.iters = k + 1;
  }

  rec.x_final = std::move(x);
  rec.F_final = std::move(F);
  rec.f_evals = counters.f_evals;
  rec.j_evals = counters.j_evals;
  rec.wall_time_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  return rec;
}

}  // namespace vecopt
