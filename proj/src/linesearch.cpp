#include "vecopt/linesearch.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace vecopt {

namespace {

bool sufficient_decrease(const Vector& F_x, const Vector& F_new, double h_xd,
                         double alpha, double rho, const ConeOrder& cone) {
  return cone_leq(F_new, F_x + (rho * alpha * h_xd) * cone.e(), cone);
}

void check_descent(const Vector& d, double h_xd) {
  if (!(h_xd < 0.0)) {
    throw InputError("line search needs a K-descent direction (h(x,d) < 0)");
  }
  if (d.squaredNorm() == 0.0) throw InputError("line search got d = 0");
}

StepResult wolfe_search(bool strong, const VectorProblem& p,
                        const ConeOrder& cone, const Vector& x,
                        const Vector& F_x, const Vector& d, double h_xd,
                        const LineSearchParams& params,
                        EvalCounters& counters) {
  params.validate(strong ? LineSearchKind::kStrongWolfe : LineSearchKind::kWolfe);
  check_descent(d, h_xd);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = kInf;
  double alpha = std::min(1.0, params.alpha_max);
  StepResult step;

  for (int trial = 1; trial <= params.max_trials; ++trial) {
    step.trials = trial;
    const Vector x_new = x + alpha * d;
    Vector F_new;
    Matrix J_new;
    // Non-finite values count as a failed decrease test.
    try {
      F_new = evaluate_F(p, x_new, counters);
      if (sufficient_decrease(F_x, F_new, h_xd, alpha, params.rho, cone)) {
        J_new = evaluate_J(p, x_new, counters);
      }
    } catch (const EvaluationError&) {
      F_new.resize(0);
    }
    if (J_new.size() == 0) {
      hi = alpha;
      alpha = 0.5 * (lo + hi);
      continue;
    }
    const double h_new = h(J_new, d, cone);
    if (h_new < params.sigma * h_xd) {
      lo = alpha;
      if (hi == kInf) {
        if (alpha >= params.alpha_max) {
          throw LineSearchError(
              "objective appears unbounded below along d (alpha reached " +
              std::to_string(params.alpha_max) + ")");
        }
        alpha = std::min(2.0 * alpha, params.alpha_max);
      } else {
        alpha = 0.5 * (lo + hi);
      }
      continue;
    }
    if (strong && h_new > -params.sigma * h_xd) {
      hi = alpha;
      alpha = 0.5 * (lo + hi);
      continue;
    }
    step.alpha = alpha;
    step.F_new = std::move(F_new);
    step.J_new = std::move(J_new);
    step.h_new_d = h_new;
    return step;
  }
  throw LineSearchError(std::string(strong ? "strong " : "") +
                        "Wolfe search exhausted " +
                        std::to_string(params.max_trials) +
                        " trials, bracket [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
}

}  // namespace

std::string_view to_string(LineSearchKind kind) {
  switch (kind) {
    case LineSearchKind::kArmijo:
      return "armijo";
    case LineSearchKind::kWolfe:
      return "wolfe";
    case LineSearchKind::kStrongWolfe:
      return "strong-wolfe";
  }
  return "?";
}

std::optional<LineSearchKind> parse_line_search(std::string_view id) {
  if (id == "armijo") return LineSearchKind::kArmijo;
  if (id == "wolfe") return LineSearchKind::kWolfe;
  if (id == "strong-wolfe") return LineSearchKind::kStrongWolfe;
  return std::nullopt;
}

void LineSearchParams::validate(LineSearchKind kind) const {
  if (kind == LineSearchKind::kArmijo) {
    if (!(0.0 < rho && rho < 1.0)) {
      throw ConfigError("Armijo search needs 0 < rho < 1");
    }
  } else if (!(0.0 < rho && rho < sigma && sigma < 1.0)) {
    throw ConfigError("Wolfe search needs 0 < rho < sigma < 1");
  }
  if (!(0.0 < delta && delta < 1.0)) {
    throw ConfigError("line search needs 0 < delta < 1");
  }
  if (!(alpha_max > 0.0)) throw ConfigError("alpha_max must be positive");
  if (max_trials < 1) throw ConfigError("max_trials must be at least 1");
}

StepResult armijo(const VectorProblem& p, const ConeOrder& cone,
                  const Vector& x, const Vector& F_x, const Vector& d,
                  double h_xd, const LineSearchParams& params,
                  EvalCounters& counters) {
  params.validate(LineSearchKind::kArmijo);
  check_descent(d, h_xd);
  double alpha = -h_xd / d.squaredNorm();
  StepResult step;
  for (int trial = 1; trial <= params.max_trials; ++trial) {
    step.trials = trial;
    Vector F_new;
    try {
      F_new = evaluate_F(p, x + alpha * d, counters);
    } catch (const EvaluationError&) {
      alpha *= params.delta;
      continue;
    }
    if (sufficient_decrease(F_x, F_new, h_xd, alpha, params.rho, cone)) {
      step.alpha = alpha;
      step.F_new = std::move(F_new);
      return step;
    }
    alpha *= params.delta;
  }
  throw LineSearchError("Armijo backtracking exhausted " +
                        std::to_string(params.max_trials) + " trials");
}

StepResult wolfe_standard(const VectorProblem& p, const ConeOrder& cone,
                          const Vector& x, const Vector& F_x, const Vector& d,
                          double h_xd, const LineSearchParams& params,
                          EvalCounters& counters) {
  return wolfe_search(false, p, cone, x, F_x, d, h_xd, params, counters);
}

StepResult wolfe_strong(const VectorProblem& p, const ConeOrder& cone,
                        const Vector& x, const Vector& F_x, const Vector& d,
                        double h_xd, const LineSearchParams& params,
                        EvalCounters& counters) {
  return wolfe_search(true, p, cone, x, F_x, d, h_xd, params, counters);
}

StepResult line_search(LineSearchKind kind, const VectorProblem& p,
                       const ConeOrder& cone, const Vector& x,
                       const Vector& F_x, const Vector& d, double h_xd,
                       const LineSearchParams& params,
                       EvalCounters& counters) {
  switch (kind) {
    case LineSearchKind::kArmijo:
      return armijo(p, cone, x, F_x, d, h_xd, params, counters);
    case LineSearchKind::kWolfe:
      return wolfe_standard(p, cone, x, F_x, d, h_xd, params, counters);
    case LineSearchKind::kStrongWolfe:
      return wolfe_strong(p, cone, x, F_x, d, h_xd, params, counters);
  }
  throw ConfigError("unknown line search");
}

bool verify_conditions(LineSearchKind kind, const Vector& F_x,
                       const Vector& F_new, double h_xd, double h_new_d,
                       double alpha, double rho, double sigma,
                       const ConeOrder& cone) {
  if (!(alpha > 0.0)) return false;
  if (!sufficient_decrease(F_x, F_new, h_xd, alpha, rho, cone)) return false;
  switch (kind) {
    case LineSearchKind::kArmijo:
      return true;
    case LineSearchKind::kWolfe:
      return h_new_d >= sigma * h_xd;
    case LineSearchKind::kStrongWolfe:
      return std::abs(h_new_d) <= sigma * std::abs(h_xd);
  }
  return false;
}

}  // namespace vecopt
