#pragma once

#include "vecopt/types.hpp"

namespace vecopt {

/// Tolerance on φ used by every cone inequality test.
inline constexpr double kConeTol = 1e-12;

/**
 * A closed convex pointed cone K ⊂ ℝ^m described by a finite set of unit
 * generators w_1..w_q of its dual cone K*, plus an interior vector e.
 *
 * Construction validates everything: each generator has unit norm,
 * ⟨w_j, e⟩ ≤ 1 for all j and min_j ⟨w_j, e⟩ > 0 (so e ∈ int K). A
 * ConeOrder that exists is therefore always usable, and it is immutable.
 */
class ConeOrder {
 public:
  /// Rows of `generators` are the w_j. Throws InputError when invalid.
  ConeOrder(Matrix generators, Vector e);

  /// K = ℝ^m_+ with the canonical basis and e = (1, ..., 1).
  static ConeOrder nonneg_orthant(int m);

  /// Normalizes each row to unit length and picks e along the mean
  /// generator, scaled so that max_j ⟨w_j, e⟩ = 1.
  static ConeOrder polyhedral(const Matrix& generators);

  int dim() const { return static_cast<int>(generators_.cols()); }
  int num_generators() const { return static_cast<int>(generators_.rows()); }
  const Matrix& generators() const { return generators_; }
  const Vector& e() const { return e_; }

 private:
  Matrix generators_;  // q x m
  Vector e_;
};

/// φ(y) = max_j ⟨y, w_j⟩.
double phi(const Eigen::Ref<const Vector>& y, const ConeOrder& cone);

/// h = φ(J d), the worst directional derivative of F along d.
double h(const Eigen::Ref<const Matrix>& jac, const Eigen::Ref<const Vector>& d,
         const ConeOrder& cone);

/// u ⪯_K v, i.e. φ(u − v) ≤ kConeTol.
bool cone_leq(const Eigen::Ref<const Vector>& u,
              const Eigen::Ref<const Vector>& v, const ConeOrder& cone);

}  // namespace vecopt
