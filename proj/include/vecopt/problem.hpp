#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vecopt/types.hpp"

namespace vecopt {

/// F: ℝ^n → ℝ^m with its analytic Jacobian and a box for drawing start points.
struct VectorProblem {
  std::string name;
  std::string reference;  // where the formulas come from
  int n = 0;
  int m = 0;
  std::function<Vector(const Vector&)> eval_F;
  std::function<Matrix(const Vector&)> eval_J;  // m x n
  Vector lower;
  Vector upper;
  bool convex = false;
};

/// Per-run evaluation counts. Never share one between concurrent runs.
struct EvalCounters {
  std::int64_t f_evals = 0;
  std::int64_t j_evals = 0;
};

/// Counted F(x). Throws InputError on a bad x and EvaluationError when the
/// result is not finite.
Vector evaluate_F(const VectorProblem& p, const Vector& x, EvalCounters& c);

/// Counted JF(x), same error contract as evaluate_F.
Matrix evaluate_J(const VectorProblem& p, const Vector& x, EvalCounters& c);

/// Deterministic start point drawn uniformly from the problem's box.
Vector sample_start(const VectorProblem& p, std::uint64_t seed);

/// The built-in test set. Problem names are unique.
const std::vector<VectorProblem>& suite();

/// Looks a suite problem up by name, nullptr when unknown.
const VectorProblem* find_problem(std::string_view name);

}  // namespace vecopt
