#include "vecopt/problem.hpp"

#include <random>
#include <sstream>

namespace vecopt {

namespace {

void check_point(const VectorProblem& p, const Vector& x) {
  if (x.size() != p.n) {
    throw InputError(p.name + ": point has dimension " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(p.n));
  }
  if (!x.allFinite()) throw InputError(p.name + ": point is not finite");
}

std::string describe(const Vector& x) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  os << ']';
  return os.str();
}

}  // namespace

Vector evaluate_F(const VectorProblem& p, const Vector& x, EvalCounters& c) {
  check_point(p, x);
  ++c.f_evals;
  Vector f = p.eval_F(x);
  if (f.size() != p.m || !f.allFinite()) {
    throw EvaluationError(p.name + ": non-finite objective at " + describe(x),
                          x);
  }
  return f;
}

Matrix evaluate_J(const VectorProblem& p, const Vector& x, EvalCounters& c) {
  check_point(p, x);
  ++c.j_evals;
  Matrix jac = p.eval_J(x);
  if (jac.rows() != p.m || jac.cols() != p.n || !jac.allFinite()) {
    throw EvaluationError(p.name + ": non-finite Jacobian at " + describe(x),
                          x);
  }
  return jac;
}

Vector sample_start(const VectorProblem& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector x(p.n);
  for (int i = 0; i < p.n; ++i) {
    x[i] = p.lower[i] + unit(rng) * (p.upper[i] - p.lower[i]);
  }
  return x;
}

const VectorProblem* find_problem(std::string_view name) {
  for (const auto& p : suite()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace vecopt
