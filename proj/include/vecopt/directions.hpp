#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "vecopt/cone.hpp"

namespace vecopt {

/// Conjugate-parameter rule. kSteepest is β ≡ 0.
enum class DirectionMethod { kSteepest, kMPRP, kPRP, kPRPPlus, kFR, kCD, kDY, kHS };

std::string_view to_string(DirectionMethod method);
std::optional<DirectionMethod> parse_direction_method(std::string_view id);
const std::vector<DirectionMethod>& all_direction_methods();

/// A conjugate-parameter denominator vanished.
class DegenerateBetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The h-values a conjugate parameter may need at iteration k ≥ 1.
struct HValues {
  double h_k_vk = 0;      // h(x^k, v(x^k))
  double h_km1_vk = 0;    // h(x^{k-1}, v(x^k))
  double h_k_dkm1 = 0;    // h(x^k, d^{k-1})
  double h_km1_vkm1 = 0;  // h(x^{k-1}, v(x^{k-1}))
  double h_km1_dkm1 = 0;  // h(x^{k-1}, d^{k-1})
};

/// What the recurrence keeps from the previous iterate.
struct DirectionState {
  Vector d_prev;
  Matrix J_prev;
  double h_prev_vprev = 0;
  double h_prev_dprev = 0;
};

/**
 * Modified PRP parameter
 *
 *   β = −h_k_vk (|b| + b) / max{ μ |h_k_dkm1 · b|, −μ h_km1_vkm1 |b| },
 *   b = h_km1_vk,
 *
 * which is never negative; β = 0 when b ≤ 0. Throws ConfigError if μ ≤ 2.
 */
double beta_mprp(double h_k_vk, double h_km1_vk, double h_k_dkm1,
                 double h_km1_vkm1, double mu);

// Vector extensions of the classical coefficients. Each throws
// DegenerateBetaError when its denominator is below 1e-300 in magnitude.
double beta_prp(double h_k_vk, double h_km1_vk, double h_km1_vkm1);
double beta_fr(double h_k_vk, double h_km1_vkm1);
double beta_cd(double h_k_vk, double h_km1_dkm1);
double beta_dy(double h_k_vk, double h_k_dkm1, double h_km1_dkm1);
double beta_hs(double h_k_vk, double h_km1_vk, double h_k_dkm1,
               double h_km1_dkm1);
double beta_prp_plus(double beta_prp);

/// Dispatches on `method`.
double conjugate_parameter(DirectionMethod method, const HValues& hv,
                           double mu);

/// Cross-iteration h-values from the cached previous Jacobian; no objective
/// evaluations happen here.
HValues cross_terms(const DirectionState& prev, const Matrix& jac_k,
                    const Vector& v_k, double h_k_vk, const ConeOrder& cone);

/// d = v at k = 0, otherwise d = v + β d_prev.
Vector direction_update(const Vector& v_k, double beta,
                        const Vector* d_prev);

}  // namespace vecopt
