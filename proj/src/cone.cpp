#include "vecopt/cone.hpp"

#include <cmath>
#include <string>

namespace vecopt {

namespace {

constexpr double kUnitNormTol = 1e-12;

void require_finite(const Eigen::Ref<const Matrix>& a, const char* what) {
  if (!a.allFinite()) {
    throw InputError(std::string(what) + " contains non-finite values");
  }
}

}  // namespace

ConeOrder::ConeOrder(Matrix generators, Vector e)
    : generators_(std::move(generators)), e_(std::move(e)) {
  if (generators_.rows() < 1 || generators_.cols() < 1) {
    throw InputError("cone needs at least one generator of positive dimension");
  }
  if (e_.size() != generators_.cols()) {
    throw InputError("cone interior vector has dimension " +
                     std::to_string(e_.size()) + ", generators have " +
                     std::to_string(generators_.cols()));
  }
  require_finite(generators_, "cone generators");
  require_finite(e_, "cone interior vector");
  for (Eigen::Index j = 0; j < generators_.rows(); ++j) {
    if (std::abs(generators_.row(j).norm() - 1.0) > kUnitNormTol) {
      throw InputError("cone generator " + std::to_string(j) +
                       " does not have unit norm");
    }
  }
  const Vector we = generators_ * e_;
  if (we.maxCoeff() > 1.0 + kConeTol) {
    throw InputError("cone interior vector violates <w, e> <= 1");
  }
  if (we.minCoeff() <= 0.0) {
    throw InputError("cone interior vector is not in the interior of K");
  }
}

ConeOrder ConeOrder::nonneg_orthant(int m) {
  if (m < 1) throw InputError("orthant dimension must be positive");
  return ConeOrder(Matrix::Identity(m, m), Vector::Ones(m));
}

ConeOrder ConeOrder::polyhedral(const Matrix& generators) {
  if (generators.rows() < 1 || generators.cols() < 1) {
    throw InputError("cone needs at least one generator of positive dimension");
  }
  require_finite(generators, "cone generators");
  Matrix w = generators;
  for (Eigen::Index j = 0; j < w.rows(); ++j) {
    const double norm = w.row(j).norm();
    if (norm == 0.0) throw InputError("zero cone generator");
    w.row(j) /= norm;
  }
  Vector e = w.colwise().mean().transpose();
  const double top = (w * e).maxCoeff();
  if (!(top > 0.0)) {
    throw InputError("generators do not span a pointed cone with interior");
  }
  e /= top;
  return ConeOrder(std::move(w), std::move(e));
}

double phi(const Eigen::Ref<const Vector>& y, const ConeOrder& cone) {
  if (y.size() != cone.dim()) {
    throw InputError("phi: vector has dimension " + std::to_string(y.size()) +
                     ", cone has " + std::to_string(cone.dim()));
  }
  return (cone.generators() * y).maxCoeff();
}

double h(const Eigen::Ref<const Matrix>& jac, const Eigen::Ref<const Vector>& d,
         const ConeOrder& cone) {
  if (jac.cols() != d.size()) {
    throw InputError("h: Jacobian has " + std::to_string(jac.cols()) +
                     " columns, direction has dimension " +
                     std::to_string(d.size()));
  }
  return phi(jac * d, cone);
}

bool cone_leq(const Eigen::Ref<const Vector>& u,
              const Eigen::Ref<const Vector>& v, const ConeOrder& cone) {
  if (u.size() != v.size()) throw InputError("cone_leq: dimension mismatch");
  return phi(u - v, cone) <= kConeTol;
}

}  // namespace vecopt
