#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace vecopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Bad dimensions, non-finite data or an invalid cone.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid solver / line-search / benchmark parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An objective or Jacobian evaluation produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Vector x)
      : std::runtime_error(what), x_(std::move(x)) {}
  const Vector& point() const { return x_; }

 private:
  Vector x_;
};

}  // namespace vecopt
