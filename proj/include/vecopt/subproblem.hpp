#pragma once

#include <stdexcept>
#include <string>

#include "vecopt/cone.hpp"

namespace vecopt {

/// Steepest K-descent direction at a point, with its dual certificate.
struct SteepestResult {
  Vector v;          // argmin_d h(x, d) + ½‖d‖²
  double theta = 0;  // optimal value, −½‖v‖²
  double h_at_v = 0; // h(x, v)
  Vector lambda;     // simplex weights, v = −G λ
  double gap = 0;    // primal value at v minus dual value
  Matrix G;          // n x q, columns g_j = Jᵀ w_j
};

class SubproblemError : public std::runtime_error {
 public:
  SubproblemError(const std::string& what, Vector lambda, double gap)
      : std::runtime_error(what), lambda_(std::move(lambda)), gap_(gap) {}
  const Vector& best_lambda() const { return lambda_; }
  double gap() const { return gap_; }

 private:
  Vector lambda_;
  double gap_;
};

/// Relative accuracy of the dual solve.
inline constexpr double kDefaultSubproblemTol = 1e-12;
/// Iteration cap of the projected-gradient dual solver.
inline constexpr int kDualMaxIters = 10'000;

/**
 * Solves min_d h(x, d) + ½‖d‖² for the Jacobian `jac` through its dual
 *
 *   min ½‖Σ_j λ_j g_j‖²  over the unit simplex,  g_j = Jᵀ w_j,
 *
 * and returns v = −Σ λ_j g_j. One generator is closed form, two are an
 * exact scalar quadratic on [0, 1]; more use projected Barzilai-Borwein
 * gradient steps, finished by an exact solve on the identified face.
 *
 * The duality gap is driven below tol · (1 + max_j ‖g_j‖²); the gap has
 * the units of ‖g‖², so the threshold scales with it. Throws
 * SubproblemError when the solver stalls above that threshold.
 */
SteepestResult steepest_direction(const Eigen::Ref<const Matrix>& jac,
                                  const ConeOrder& cone,
                                  double tol = kDefaultSubproblemTol);

/// θ ≥ −tol_crit.
bool is_critical(double theta, double tol_crit);

/// Euclidean projection onto {λ ≥ 0, Σ λ = 1}.
Vector project_to_simplex(const Eigen::Ref<const Vector>& y);

}  // namespace vecopt
