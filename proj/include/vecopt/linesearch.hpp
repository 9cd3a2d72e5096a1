#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "vecopt/cone.hpp"
#include "vecopt/problem.hpp"

namespace vecopt {

enum class LineSearchKind { kArmijo, kWolfe, kStrongWolfe };

std::string_view to_string(LineSearchKind kind);
std::optional<LineSearchKind> parse_line_search(std::string_view id);

struct LineSearchParams {
  double rho = 1e-4;   // sufficient decrease
  double sigma = 0.1;  // curvature, Wolfe family only
  double delta = 0.5;  // Armijo backtracking factor
  double alpha_max = 1e6;
  int max_trials = 100;

  /// Throws ConfigError unless 0 < rho < sigma < 1 (Armijo: 0 < rho < 1),
  /// 0 < delta < 1, alpha_max > 0 and max_trials ≥ 1.
  void validate(LineSearchKind kind) const;
};

struct StepResult {
  double alpha = 0;
  Vector F_new;
  std::optional<Matrix> J_new;  // set by the Wolfe searches only
  double h_new_d = 0;           // h(x + αd, d); Wolfe searches only
  int trials = 0;               // objective evaluations consumed
};

class LineSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Backtracks over τ, δτ, δ²τ, … with τ = −h(x, d)/‖d‖² until
/// F(x + αd) ⪯_K F(x) + ραh(x, d)e. Never evaluates the Jacobian.
StepResult armijo(const VectorProblem& p, const ConeOrder& cone,
                  const Vector& x, const Vector& F_x, const Vector& d,
                  double h_xd, const LineSearchParams& params,
                  EvalCounters& counters);

/// Standard Wolfe step by expansion from α = 1 and bisection. The Jacobian
/// is evaluated only at trials that already pass sufficient decrease.
StepResult wolfe_standard(const VectorProblem& p, const ConeOrder& cone,
                          const Vector& x, const Vector& F_x, const Vector& d,
                          double h_xd, const LineSearchParams& params,
                          EvalCounters& counters);

/// Same search with the curvature test |h(x + αd, d)| ≤ σ|h(x, d)|.
StepResult wolfe_strong(const VectorProblem& p, const ConeOrder& cone,
                        const Vector& x, const Vector& F_x, const Vector& d,
                        double h_xd, const LineSearchParams& params,
                        EvalCounters& counters);

StepResult line_search(LineSearchKind kind, const VectorProblem& p,
                       const ConeOrder& cone, const Vector& x,
                       const Vector& F_x, const Vector& d, double h_xd,
                       const LineSearchParams& params, EvalCounters& counters);

/// Re-checks the acceptance conditions of `kind` from raw values. For
/// Armijo `h_new_d` is ignored.
bool verify_conditions(LineSearchKind kind, const Vector& F_x,
                       const Vector& F_new, double h_xd, double h_new_d,
                       double alpha, double rho, double sigma,
                       const ConeOrder& cone);

}  // namespace vecopt
