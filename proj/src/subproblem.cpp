#include "vecopt/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace vecopt {

namespace {

double dual_objective(const Matrix& Q, const Vector& lambda) {
  return 0.5 * lambda.dot(Q * lambda);
}

// Frank-Wolfe gap λᵀQλ − min_j (Qλ)_j, equal to the primal value at
// v = −Gλ minus the dual value.
double duality_gap(const Matrix& Q, const Vector& lambda) {
  const Vector grad = Q * lambda;
  return std::max(0.0, lambda.dot(grad) - grad.minCoeff());
}

// Minimizes ½ μᵀ Q_S μ subject to Σ μ = 1 over the support `face`, and
// scatters the result back into a full-length weight vector. Returns false
// when the face minimizer leaves the simplex.
bool solve_on_face(const Matrix& Q, const std::vector<int>& face,
                   Vector& out) {
  const int s = static_cast<int>(face.size());
  Matrix kkt = Matrix::Zero(s + 1, s + 1);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) kkt(a, b) = Q(face[a], face[b]);
    kkt(a, s) = 1.0;
    kkt(s, a) = 1.0;
  }
  Vector rhs = Vector::Zero(s + 1);
  rhs[s] = 1.0;
  const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  if (!sol.allFinite()) return false;
  Vector mu = sol.head(s);
  if (mu.minCoeff() < -1e-12) return false;
  mu = mu.cwiseMax(0.0);
  const double total = mu.sum();
  if (!(total > 0.0)) return false;
  out = Vector::Zero(Q.rows());
  for (int a = 0; a < s; ++a) out[face[a]] = mu[a] / total;
  return true;
}

std::vector<int> support_of(const Vector& lambda) {
  std::vector<int> face;
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    if (lambda[j] > 0.0) face.push_back(static_cast<int>(j));
  }
  return face;
}

Vector solve_two(const Matrix& G) {
  // ½‖g2 + t (g1 − g2)‖² on t ∈ [0, 1]
  const Vector a = G.col(0) - G.col(1);
  const double aa = a.squaredNorm();
  double t = 0.5;
  if (aa > 0.0) t = std::clamp(-a.dot(G.col(1)) / aa, 0.0, 1.0);
  Vector lambda(2);
  lambda << t, 1.0 - t;
  return lambda;
}

Vector solve_projected_gradient(const Matrix& Q, double threshold) {
  const int q = static_cast<int>(Q.rows());
  Vector lambda = Vector::Constant(q, 1.0 / q);
  Vector grad = Q * lambda;
  double value = dual_objective(Q, lambda);
  double step = 1.0 / std::max(Q.diagonal().maxCoeff(), 1e-300);
  std::vector<int> last_face;

  for (int iter = 0; iter < kDualMaxIters; ++iter) {
    const double pg_norm = (lambda - project_to_simplex(lambda - grad)).norm();
    if (pg_norm <= threshold || duality_gap(Q, lambda) <= threshold) break;

    // Once the support settles, the optimum is the face minimizer.
    std::vector<int> face = support_of(lambda);
    if (face == last_face) {
      Vector candidate;
      if (solve_on_face(Q, face, candidate) &&
          dual_objective(Q, candidate) <= value &&
          duality_gap(Q, candidate) <= threshold) {
        return candidate;
      }
    }
    last_face = std::move(face);

    Vector next;
    double next_value = 0.0;
    for (int shrink = 0; shrink < 60; ++shrink) {
      next = project_to_simplex(lambda - step * grad);
      next_value = dual_objective(Q, next);
      if (next_value <= value) break;
      step *= 0.5;
    }
    const Vector next_grad = Q * next;
    const Vector s = next - lambda;
    const Vector y = next_grad - grad;
    const double sy = s.dot(y);
    if (s.squaredNorm() == 0.0) break;
    step = sy > 0.0 ? s.squaredNorm() / sy
                    : 1.0 / std::max(Q.diagonal().maxCoeff(), 1e-300);
    lambda = std::move(next);
    grad = next_grad;
    value = next_value;
  }

  Vector polished;
  if (solve_on_face(Q, support_of(lambda), polished) &&
      dual_objective(Q, polished) <= value) {
    return polished;
  }
  return lambda;
}

// Exact solve by trying every face; used when the iterative solver stalls
// and there are few generators.
Vector solve_by_faces(const Matrix& Q, const Vector& fallback) {
  const int q = static_cast<int>(Q.rows());
  Vector best = fallback;
  double best_gap = duality_gap(Q, fallback);
  double best_value = dual_objective(Q, fallback);
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    std::vector<int> face;
    for (int j = 0; j < q; ++j) {
      if (mask & (1u << j)) face.push_back(j);
    }
    Vector candidate;
    if (!solve_on_face(Q, face, candidate)) continue;
    const double gap = duality_gap(Q, candidate);
    const double value = dual_objective(Q, candidate);
    if (gap < best_gap || (gap == best_gap && value < best_value)) {
      best = std::move(candidate);
      best_gap = gap;
      best_value = value;
    }
  }
  return best;
}

constexpr int kMaxFaceEnumeration = 12;

}  // namespace

Vector project_to_simplex(const Eigen::Ref<const Vector>& y) {
  const Eigen::Index q = y.size();
  std::vector<double> sorted(y.data(), y.data() + q);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (Eigen::Index k = 0; k < q; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / double(k + 1);
    if (sorted[k] - candidate > 0.0) shift = candidate;
  }
  return (y.array() - shift).cwiseMax(0.0).matrix();
}

SteepestResult steepest_direction(const Eigen::Ref<const Matrix>& jac,
                                  const ConeOrder& cone, double tol) {
  if (jac.rows() != cone.dim()) {
    throw InputError("steepest_direction: Jacobian has " +
                     std::to_string(jac.rows()) + " rows, cone dimension is " +
                     std::to_string(cone.dim()));
  }
  if (!jac.allFinite()) {
    throw InputError("steepest_direction: Jacobian is not finite");
  }
  if (!(tol > 0.0)) throw ConfigError("subproblem tolerance must be positive");

  SteepestResult r;
  r.G = jac.transpose() * cone.generators().transpose();
  const int q = cone.num_generators();
  const Matrix Q = r.G.transpose() * r.G;
  const double threshold = tol * (1.0 + Q.diagonal().maxCoeff());

  if (r.G.isZero(0.0)) {
    r.lambda = Vector::Constant(q, 1.0 / q);
  } else if (q == 1) {
    r.lambda = Vector::Ones(1);
  } else if (q == 2) {
    r.lambda = solve_two(r.G);
  } else {
    r.lambda = solve_projected_gradient(Q, threshold);
    if (duality_gap(Q, r.lambda) > threshold && q <= kMaxFaceEnumeration) {
      r.lambda = solve_by_faces(Q, r.lambda);
    }
  }

  r.gap = duality_gap(Q, r.lambda);
  if (q >= 3 && r.gap > threshold) {
    char gap[32];
    std::snprintf(gap, sizeof gap, "%.3g", r.gap);
    throw SubproblemError(std::string("dual solver stalled with gap ") + gap,
                          r.lambda, r.gap);
  }
  r.v = -(r.G * r.lambda);
  r.theta = -0.5 * r.v.squaredNorm();
  r.h_at_v = h(jac, r.v, cone);
  return r;
}

bool is_critical(double theta, double tol_crit) { return theta >= -tol_crit; }

}  // namespace vecopt
