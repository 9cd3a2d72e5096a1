// Classic multiobjective test problems, reimplemented from their published
// formulas. All are unconstrained; the boxes only seed start points.
//
//   JOS1   Jin, Olhofer & Sendhoff, "Dynamic weighted aggregation for
//          evolutionary multi-objective optimization", GECCO 2001.
//   LOV1   Lovison, "Singular continuation: generating piecewise linear
//          approximations to Pareto sets via global analysis", SIOPT 2011.
//   SP1    Huband, Hingston, Barone & While, "A review of multiobjective
//          test problems and a scalable test problem toolkit", IEEE TEC 2006.
//   TOI4   Hillermeier, "Nonlinear Multiobjective Optimization", 2001
//          (after Toint's test set).
//   MOP5,  Van Veldhuizen, "Multiobjective evolutionary algorithms:
//   MOP7   classifications, analyses, and new innovations", 1999.
//   FDS    Fliege, Graña Drummond & Svaiter, "Newton's method for
//          multiobjective optimization", SIOPT 2009.
//   AP1    Ansary & Panda, "A modified quasi-Newton method for vector
//          optimization problem", Optimization 2015.
//   FF1    Fonseca & Fleming, "An overview of evolutionary algorithms in
//          multiobjective optimization", Evol. Comput. 1995.
//   POL    Poloni, "Hybrid GA for multi objective aerodynamic shape
//          optimisation", 1995.
//   VU1    Huband et al. 2006 (Viennet-Ulrich).
//   HIL1   Hillermeier 2001.
//   DD1    Das & Dennis, "Normal-boundary intersection", SIOPT 1998.
//
// scaled_quad_* is a pair of separable quadratics whose curvatures are
// spread geometrically over [1, kappa]; kappa is the Lipschitz constant of
// the Jacobian, so these stress step-size selection.

#include <cmath>
#include <numbers>

#include "vecopt/problem.hpp"

namespace vecopt {

namespace {

using std::numbers::pi;

Vector filled(int n, double value) { return Vector::Constant(n, value); }

VectorProblem jos1() {
  constexpr int n = 5;
  VectorProblem p;
  p.name = "jos1";
  p.reference = "Jin, Olhofer & Sendhoff 2001";
  p.n = n;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    Vector f(2);
    f << 0.5 * x.squaredNorm(), 0.5 * (x.array() - 2.0).matrix().squaredNorm();
    return f;
  };
  p.eval_J = [](const Vector& x) {
    Matrix j(2, x.size());
    j.row(0) = x.transpose();
    j.row(1) = (x.array() - 2.0).matrix().transpose();
    return j;
  };
  p.lower = filled(n, -2.0);
  p.upper = filled(n, 4.0);
  p.convex = true;
  return p;
}

VectorProblem scaled_quad(int n, double kappa) {
  VectorProblem p;
  p.name = "scaled_quad_" + std::to_string(n);
  p.reference = "separable quadratics, curvature in [1, kappa]";
  p.n = n;
  p.m = 2;
  Vector c(n);
  for (int i = 0; i < n; ++i) {
    c[i] = std::pow(kappa, n == 1 ? 0.0 : double(i) / double(n - 1));
  }
  p.eval_F = [c](const Vector& x) {
    Vector f(2);
    f << 0.5 * (c.array() * x.array().square()).sum(),
        0.5 * (c.array() * (x.array() - 1.0).square()).sum();
    return f;
  };
  p.eval_J = [c](const Vector& x) {
    Matrix j(2, x.size());
    j.row(0) = (c.array() * x.array()).matrix().transpose();
    j.row(1) = (c.array() * (x.array() - 1.0)).matrix().transpose();
    return j;
  };
  p.lower = filled(n, -5.0);
  p.upper = filled(n, 5.0);
  p.convex = true;
  return p;
}

VectorProblem lov1() {
  VectorProblem p;
  p.name = "lov1";
  p.reference = "Lovison 2011";
  p.n = 2;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    Vector f(2);
    f << 1.05 * x[0] * x[0] + 0.98 * x[1] * x[1],
        0.99 * std::pow(x[0] - 3.0, 2) + 1.03 * std::pow(x[1] - 2.5, 2);
    return f;
  };
  p.eval_J = [](const Vector& x) {
    Matrix j(2, 2);
    j << 2.1 * x[0], 1.96 * x[1],  //
        1.98 * (x[0] - 3.0), 2.06 * (x[1] - 2.5);
    return j;
  };
  p.lower = filled(2, -10.0);
  p.upper = filled(2, 10.0);
  p.convex = true;
  return p;
}

VectorProblem sp1() {
  VectorProblem p;
  p.name = "sp1";
  p.reference = "Huband et al. 2006";
  p.n = 2;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    const double diff = x[0] - x[1];
    Vector f(2);
    f << std::pow(x[0] - 1.0, 2) + diff * diff,
        std::pow(x[1] - 3.0, 2) + diff * diff;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double diff = x[0] - x[1];
    Matrix j(2, 2);
    j << 2.0 * (x[0] - 1.0) + 2.0 * diff, -2.0 * diff,  //
        2.0 * diff, 2.0 * (x[1] - 3.0) - 2.0 * diff;
    return j;
  };
  p.lower = filled(2, -10.0);
  p.upper = filled(2, 10.0);
  p.convex = true;
  return p;
}

VectorProblem toi4() {
  VectorProblem p;
  p.name = "toi4";
  p.reference = "Hillermeier 2001 / Toint";
  p.n = 4;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    Vector f(2);
    f << x[0] * x[0] + x[1] * x[1] + 1.0,
        0.5 * (std::pow(x[0] - x[1], 2) + std::pow(x[2] - x[3], 2)) + 1.0;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double a = x[0] - x[1];
    const double b = x[2] - x[3];
    Matrix j(2, 4);
    j << 2.0 * x[0], 2.0 * x[1], 0.0, 0.0,  //
        a, -a, b, -b;
    return j;
  };
  p.lower = filled(4, -2.0);
  p.upper = filled(4, 5.0);
  p.convex = true;
  return p;
}

VectorProblem mop7() {
  VectorProblem p;
  p.name = "mop7";
  p.reference = "Van Veldhuizen 1999";
  p.n = 2;
  p.m = 3;
  p.eval_F = [](const Vector& x) {
    Vector f(3);
    f << std::pow(x[0] - 2.0, 2) / 2.0 + std::pow(x[1] + 1.0, 2) / 13.0 + 3.0,
        std::pow(x[0] + x[1] - 3.0, 2) / 36.0 +
            std::pow(-x[0] + x[1] + 2.0, 2) / 8.0 - 17.0,
        std::pow(x[0] + 2.0 * x[1] - 1.0, 2) / 175.0 +
            std::pow(2.0 * x[1] - x[0], 2) / 17.0 - 13.0;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double s = x[0] + x[1] - 3.0;
    const double t = -x[0] + x[1] + 2.0;
    const double u = x[0] + 2.0 * x[1] - 1.0;
    const double w = 2.0 * x[1] - x[0];
    Matrix j(3, 2);
    j << x[0] - 2.0, 2.0 * (x[1] + 1.0) / 13.0,  //
        s / 18.0 - t / 4.0, s / 18.0 + t / 4.0,  //
        2.0 * u / 175.0 - 2.0 * w / 17.0, 4.0 * u / 175.0 + 4.0 * w / 17.0;
    return j;
  };
  p.lower = filled(2, -400.0);
  p.upper = filled(2, 400.0);
  p.convex = true;
  return p;
}

VectorProblem fds() {
  constexpr int n = 10;
  VectorProblem p;
  p.name = "fds";
  p.reference = "Fliege, Grana Drummond & Svaiter 2009";
  p.n = n;
  p.m = 3;
  p.eval_F = [](const Vector& x) {
    const double nn = double(x.size());
    double f1 = 0.0;
    double f3 = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double k = double(i + 1);
      f1 += k * std::pow(x[i] - k, 4);
      f3 += k * (nn - k + 1.0) * std::exp(-x[i]);
    }
    Vector f(3);
    f << f1 / (nn * nn), std::exp(x.sum() / nn) + x.squaredNorm(),
        f3 / (nn * (nn + 1.0));
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double nn = double(x.size());
    const double mean_exp = std::exp(x.sum() / nn) / nn;
    Matrix j(3, x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double k = double(i + 1);
      j(0, i) = 4.0 * k * std::pow(x[i] - k, 3) / (nn * nn);
      j(1, i) = mean_exp + 2.0 * x[i];
      j(2, i) = -k * (nn - k + 1.0) * std::exp(-x[i]) / (nn * (nn + 1.0));
    }
    return j;
  };
  p.lower = filled(n, -2.0);
  p.upper = filled(n, 2.0);
  p.convex = true;
  return p;
}

VectorProblem ap1() {
  VectorProblem p;
  p.name = "ap1";
  p.reference = "Ansary & Panda 2015";
  p.n = 2;
  p.m = 3;
  p.eval_F = [](const Vector& x) {
    Vector f(3);
    f << 0.25 * (std::pow(x[0] - 1.0, 4) + 2.0 * std::pow(x[1] - 2.0, 4)),
        std::exp(0.5 * (x[0] + x[1])) + x[0] * x[0] + x[1] * x[1],
        (std::exp(-x[0]) + 2.0 * std::exp(-x[1])) / 6.0;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double half_exp = 0.5 * std::exp(0.5 * (x[0] + x[1]));
    Matrix j(3, 2);
    j << std::pow(x[0] - 1.0, 3), 2.0 * std::pow(x[1] - 2.0, 3),  //
        half_exp + 2.0 * x[0], half_exp + 2.0 * x[1],             //
        -std::exp(-x[0]) / 6.0, -std::exp(-x[1]) / 3.0;
    return j;
  };
  p.lower = filled(2, -10.0);
  p.upper = filled(2, 10.0);
  p.convex = true;
  return p;
}

VectorProblem fonseca() {
  VectorProblem p;
  p.name = "fonseca";
  p.reference = "Fonseca & Fleming 1995 (FF1)";
  p.n = 2;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    const double c = 1.0 / std::sqrt(double(x.size()));
    Vector f(2);
    f << 1.0 - std::exp(-(x.array() - c).square().sum()),
        1.0 - std::exp(-(x.array() + c).square().sum());
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double c = 1.0 / std::sqrt(double(x.size()));
    const double e1 = std::exp(-(x.array() - c).square().sum());
    const double e2 = std::exp(-(x.array() + c).square().sum());
    Matrix j(2, x.size());
    j.row(0) = (2.0 * e1 * (x.array() - c)).matrix().transpose();
    j.row(1) = (2.0 * e2 * (x.array() + c)).matrix().transpose();
    return j;
  };
  p.lower = filled(2, -2.0);
  p.upper = filled(2, 2.0);
  return p;
}

VectorProblem poloni() {
  VectorProblem p;
  p.name = "poloni";
  p.reference = "Poloni 1995";
  p.n = 2;
  p.m = 2;
  static const double a1 = 0.5 * std::sin(1.0) - 2.0 * std::cos(1.0) +
                           std::sin(2.0) - 1.5 * std::cos(2.0);
  static const double a2 = 1.5 * std::sin(1.0) - std::cos(1.0) +
                           2.0 * std::sin(2.0) - 0.5 * std::cos(2.0);
  p.eval_F = [](const Vector& x) {
    const double b1 = 0.5 * std::sin(x[0]) - 2.0 * std::cos(x[0]) +
                      std::sin(x[1]) - 1.5 * std::cos(x[1]);
    const double b2 = 1.5 * std::sin(x[0]) - std::cos(x[0]) +
                      2.0 * std::sin(x[1]) - 0.5 * std::cos(x[1]);
    Vector f(2);
    f << 1.0 + std::pow(a1 - b1, 2) + std::pow(a2 - b2, 2),
        std::pow(x[0] + 3.0, 2) + std::pow(x[1] + 1.0, 2);
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double s0 = std::sin(x[0]), c0 = std::cos(x[0]);
    const double s1 = std::sin(x[1]), c1 = std::cos(x[1]);
    const double b1 = 0.5 * s0 - 2.0 * c0 + s1 - 1.5 * c1;
    const double b2 = 1.5 * s0 - c0 + 2.0 * s1 - 0.5 * c1;
    const double r1 = a1 - b1;
    const double r2 = a2 - b2;
    Matrix j(2, 2);
    j << -2.0 * r1 * (0.5 * c0 + 2.0 * s0) - 2.0 * r2 * (1.5 * c0 + s0),
        -2.0 * r1 * (c1 + 1.5 * s1) - 2.0 * r2 * (2.0 * c1 + 0.5 * s1),
        2.0 * (x[0] + 3.0), 2.0 * (x[1] + 1.0);
    return j;
  };
  p.lower = filled(2, -pi);
  p.upper = filled(2, pi);
  return p;
}

VectorProblem vu1() {
  VectorProblem p;
  p.name = "vu1";
  p.reference = "Huband et al. 2006";
  p.n = 2;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    Vector f(2);
    f << 1.0 / (x.squaredNorm() + 1.0), x[0] * x[0] + 3.0 * x[1] * x[1] + 1.0;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double denom = std::pow(x.squaredNorm() + 1.0, 2);
    Matrix j(2, 2);
    j << -2.0 * x[0] / denom, -2.0 * x[1] / denom,  //
        2.0 * x[0], 6.0 * x[1];
    return j;
  };
  p.lower = filled(2, -3.0);
  p.upper = filled(2, 3.0);
  return p;
}

VectorProblem mop5() {
  VectorProblem p;
  p.name = "mop5";
  p.reference = "Van Veldhuizen 1999";
  p.n = 2;
  p.m = 3;
  p.eval_F = [](const Vector& x) {
    const double r = x.squaredNorm();
    Vector f(3);
    f << 0.5 * r + std::sin(r),
        std::pow(3.0 * x[0] - 2.0 * x[1] + 4.0, 2) / 8.0 +
            std::pow(x[0] - x[1] + 1.0, 2) / 27.0 + 15.0,
        1.0 / (r + 1.0) - 1.1 * std::exp(-r);
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double r = x.squaredNorm();
    const double s = 3.0 * x[0] - 2.0 * x[1] + 4.0;
    const double t = x[0] - x[1] + 1.0;
    const double g1 = 1.0 + 2.0 * std::cos(r);
    const double g3 = -2.0 / std::pow(r + 1.0, 2) + 2.2 * std::exp(-r);
    Matrix j(3, 2);
    j << g1 * x[0], g1 * x[1],                                           //
        0.75 * s + 2.0 * t / 27.0, -0.5 * s - 2.0 * t / 27.0,            //
        g3 * x[0], g3 * x[1];
    return j;
  };
  p.lower = filled(2, -30.0);
  p.upper = filled(2, 30.0);
  return p;
}

VectorProblem hil1() {
  VectorProblem p;
  p.name = "hil1";
  p.reference = "Hillermeier 2001";
  p.n = 2;
  p.m = 2;
  constexpr double deg = 2.0 * pi / 360.0;
  p.eval_F = [](const Vector& x) {
    const double a = deg * (45.0 + 40.0 * std::sin(2.0 * pi * x[0]) +
                            25.0 * std::sin(2.0 * pi * x[1]));
    const double b = 1.0 + 0.5 * std::cos(2.0 * pi * x[0]);
    Vector f(2);
    f << std::cos(a) * b, std::sin(a) * b;
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double a = deg * (45.0 + 40.0 * std::sin(2.0 * pi * x[0]) +
                            25.0 * std::sin(2.0 * pi * x[1]));
    const double b = 1.0 + 0.5 * std::cos(2.0 * pi * x[0]);
    const double da0 = deg * 80.0 * pi * std::cos(2.0 * pi * x[0]);
    const double da1 = deg * 50.0 * pi * std::cos(2.0 * pi * x[1]);
    const double db0 = -pi * std::sin(2.0 * pi * x[0]);
    const double ca = std::cos(a), sa = std::sin(a);
    Matrix j(2, 2);
    j << -sa * b * da0 + ca * db0, -sa * b * da1,  //
        ca * b * da0 + sa * db0, ca * b * da1;
    return j;
  };
  p.lower = filled(2, 0.0);
  p.upper = filled(2, 1.0);
  return p;
}

VectorProblem dd1() {
  VectorProblem p;
  p.name = "dd1";
  p.reference = "Das & Dennis 1998";
  p.n = 5;
  p.m = 2;
  p.eval_F = [](const Vector& x) {
    Vector f(2);
    f << x.squaredNorm(), 3.0 * x[0] + 2.0 * x[1] - x[2] / 3.0 +
                              0.01 * std::pow(x[3] - x[4], 3);
    return f;
  };
  p.eval_J = [](const Vector& x) {
    const double c = 0.03 * std::pow(x[3] - x[4], 2);
    Matrix j(2, 5);
    j.row(0) = 2.0 * x.transpose();
    j.row(1) << 3.0, 2.0, -1.0 / 3.0, c, -c;
    return j;
  };
  p.lower = filled(5, -20.0);
  p.upper = filled(5, 20.0);
  return p;
}

std::vector<VectorProblem> build_suite() {
  return {jos1(),     lov1(),      sp1(),    toi4(),
          mop7(),     fds(),       ap1(),    scaled_quad(50, 1e3),
          scaled_quad(200, 1e2),   fonseca(), poloni(), vu1(),
          mop5(),     hil1(),      dd1()};
}

}  // namespace

const std::vector<VectorProblem>& suite() {
  static const std::vector<VectorProblem> problems = build_suite();
  return problems;
}

}  // namespace vecopt
