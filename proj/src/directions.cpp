#include "vecopt/directions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace vecopt {

namespace {

constexpr double kTinyDenominator = 1e-300;

constexpr std::array<std::pair<DirectionMethod, std::string_view>, 8> kNames{{
    {DirectionMethod::kSteepest, "sd"},
    {DirectionMethod::kMPRP, "mprp"},
    {DirectionMethod::kPRP, "prp"},
    {DirectionMethod::kPRPPlus, "prp+"},
    {DirectionMethod::kFR, "fr"},
    {DirectionMethod::kCD, "cd"},
    {DirectionMethod::kDY, "dy"},
    {DirectionMethod::kHS, "hs"},
}};

double guarded_ratio(double num, double den, const char* name) {
  if (std::abs(den) < kTinyDenominator) {
    throw DegenerateBetaError(std::string(name) + ": vanishing denominator");
  }
  return num / den;
}

}  // namespace

std::string_view to_string(DirectionMethod method) {
  for (const auto& [m, name] : kNames) {
    if (m == method) return name;
  }
  return "?";
}

std::optional<DirectionMethod> parse_direction_method(std::string_view id) {
  for (const auto& [m, name] : kNames) {
    if (name == id) return m;
  }
  return std::nullopt;
}

const std::vector<DirectionMethod>& all_direction_methods() {
  static const std::vector<DirectionMethod> methods = [] {
    std::vector<DirectionMethod> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return methods;
}

double beta_mprp(double h_k_vk, double h_km1_vk, double h_k_dkm1,
                 double h_km1_vkm1, double mu) {
  if (!(mu > 2.0)) throw ConfigError("mprp requires mu > 2");
  const double b = h_km1_vk;
  const double abs_b = std::abs(b);
  const double num = -h_k_vk * (abs_b + b);
  if (num == 0.0) return 0.0;  // covers b <= 0, including the 0/0 case
  const double den =
      std::max(mu * std::abs(h_k_dkm1 * b), -mu * h_km1_vkm1 * abs_b);
  if (!(den > 0.0)) throw DegenerateBetaError("mprp: vanishing denominator");
  return std::max(0.0, num / den);
}

double beta_prp(double h_k_vk, double h_km1_vk, double h_km1_vkm1) {
  return guarded_ratio(-h_k_vk + h_km1_vk, -h_km1_vkm1, "prp");
}

double beta_fr(double h_k_vk, double h_km1_vkm1) {
  return guarded_ratio(h_k_vk, h_km1_vkm1, "fr");
}

double beta_cd(double h_k_vk, double h_km1_dkm1) {
  return guarded_ratio(h_k_vk, h_km1_dkm1, "cd");
}

double beta_dy(double h_k_vk, double h_k_dkm1, double h_km1_dkm1) {
  return guarded_ratio(-h_k_vk, h_k_dkm1 - h_km1_dkm1, "dy");
}

double beta_hs(double h_k_vk, double h_km1_vk, double h_k_dkm1,
               double h_km1_dkm1) {
  return guarded_ratio(-h_k_vk + h_km1_vk, h_k_dkm1 - h_km1_dkm1, "hs");
}

double beta_prp_plus(double beta_prp) { return std::max(beta_prp, 0.0); }

double conjugate_parameter(DirectionMethod method, const HValues& hv,
                           double mu) {
  switch (method) {
    case DirectionMethod::kSteepest:
      return 0.0;
    case DirectionMethod::kMPRP:
      return beta_mprp(hv.h_k_vk, hv.h_km1_vk, hv.h_k_dkm1, hv.h_km1_vkm1,
                       mu);
    case DirectionMethod::kPRP:
      return beta_prp(hv.h_k_vk, hv.h_km1_vk, hv.h_km1_vkm1);
    case DirectionMethod::kPRPPlus:
      return beta_prp_plus(beta_prp(hv.h_k_vk, hv.h_km1_vk, hv.h_km1_vkm1));
    case DirectionMethod::kFR:
      return beta_fr(hv.h_k_vk, hv.h_km1_vkm1);
    case DirectionMethod::kCD:
      return beta_cd(hv.h_k_vk, hv.h_km1_dkm1);
    case DirectionMethod::kDY:
      return beta_dy(hv.h_k_vk, hv.h_k_dkm1, hv.h_km1_dkm1);
    case DirectionMethod::kHS:
      return beta_hs(hv.h_k_vk, hv.h_km1_vk, hv.h_k_dkm1, hv.h_km1_dkm1);
  }
  return 0.0;
}

HValues cross_terms(const DirectionState& prev, const Matrix& jac_k,
                    const Vector& v_k, double h_k_vk, const ConeOrder& cone) {
  HValues hv;
  hv.h_k_vk = h_k_vk;
  hv.h_km1_vk = h(prev.J_prev, v_k, cone);
  hv.h_k_dkm1 = h(jac_k, prev.d_prev, cone);
  hv.h_km1_vkm1 = prev.h_prev_vprev;
  hv.h_km1_dkm1 = prev.h_prev_dprev;
  return hv;
}

Vector direction_update(const Vector& v_k, double beta, const Vector* d_prev) {
  if (d_prev == nullptr) return v_k;
  if (d_prev->size() != v_k.size()) {
    throw InputError("direction_update: dimension mismatch");
  }
  return v_k + beta * *d_prev;
}

}  // namespace vecopt
