#include "cosserat/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

QuadraticProbe QuadraticProbe::assemble(const Objective& f, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("probe step must be positive");
  QuadraticProbe p;
  p.c0 = f(Vec3::Zero());
  double fp[3], fm[3];
  for (int i = 0; i < 3; ++i) {
    Vec3 e = Vec3::Zero();
    e[i] = step;
    fp[i] = f(e);
    fm[i] = f(-e);
    p.g[i] = (fp[i] - fm[i]) / (2.0 * step);
    p.h(i, i) = (fp[i] - 2.0 * p.c0 + fm[i]) / (step * step);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Vec3 e = Vec3::Zero();
      e[i] = step;
      e[j] = step;
      const double hij = (f(e) - fp[i] - fp[j] + p.c0) / (step * step);
      p.h(i, j) = hij;
      p.h(j, i) = hij;
    }
  }
  return p;
}

QuadraticMinimum minimize_quadratic(const Objective& f, double probe_step) {
  const QuadraticProbe p = QuadraticProbe::assemble(f, probe_step);
  Eigen::LLT<Mat3> llt(p.h);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(
        "unbounded or degenerate objective: Hessian is not positive definite");
  }
  const Vec3 v = llt.solve(-p.g);
  const double residual = (p.h * v + p.g).norm();
  if (!(residual <= 1e-10 * (1.0 + p.g.norm()))) {
    throw std::runtime_error("normal-equation residual " + std::to_string(residual) +
                             " exceeds tolerance; objective is not quadratic?");
  }
  return QuadraticMinimum{v, f(v)};
}

QuadraticMinimum grid_refine_min(const Objective& f, std::optional<GridBox> box, int levels,
                                 int points_per_axis) {
  if (levels < 1 || points_per_axis < 3) {
    throw std::invalid_argument("grid_refine_min needs levels >= 1 and >= 3 points per axis");
  }
  GridBox b;
  if (box) {
    b = *box;
  } else {
    const QuadraticProbe p = QuadraticProbe::assemble(f);
    Eigen::SelfAdjointEigenSolver<Mat3> es(p.h);
    const double lambda_min = es.eigenvalues().minCoeff();
    if (!(lambda_min > 0.0)) {
      throw std::runtime_error("unbounded or degenerate objective: cannot size search box");
    }
    b.center = Vec3::Zero();
    b.half_width = 2.0 * p.g.norm() / lambda_min + 1.0;
  }
  const GridBox initial = b;
  const int n = points_per_axis;
  Vec3 best = b.center;
  double best_value = f(best);
  for (int level = 0; level < levels; ++level) {
    const double spacing = 2.0 * b.half_width / (n - 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          const Vec3 v = b.center + Vec3(i * spacing - b.half_width, j * spacing - b.half_width,
                                         k * spacing - b.half_width);
          const double value = f(v);
          if (value < best_value) {
            best_value = value;
            best = v;
          }
        }
      }
    }
    b.center = best;
    b.half_width = std::min(2.0 * spacing, initial.half_width);
    // Keep refinement inside the initial box.
    for (int i = 0; i < 3; ++i) {
      const double lo = initial.center[i] - initial.half_width;
      const double hi = initial.center[i] + initial.half_width;
      b.center[i] = std::min(std::max(b.center[i], lo + b.half_width), hi - b.half_width);
    }
  }
  const double final_spacing = 2.0 * b.half_width / (n - 1);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(best[i] - (initial.center[i] - initial.half_width)) < final_spacing ||
        std::abs(best[i] - (initial.center[i] + initial.half_width)) < final_spacing) {
      throw std::runtime_error("box too small: grid minimizer sits on the search boundary");
    }
  }
  return QuadraticMinimum{best, best_value};
}

}  // namespace cosserat
