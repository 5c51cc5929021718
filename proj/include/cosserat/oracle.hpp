#pragma once

#include <functional>
#include <optional>

#include "cosserat/tensor.hpp"

namespace cosserat {

using Objective = std::function<double(const Vec3&)>;

/// Gradient and Hessian of an exactly quadratic objective, assembled by
/// symmetric differences. The default step is 1: differencing a quadratic
/// has no truncation error, and a unit step keeps the cancellation error
/// near machine precision (a small step would amplify roundoff by 1/h^2).
struct QuadraticProbe {
  double c0 = 0.0;
  Vec3 g = Vec3::Zero();
  Mat3 h = Mat3::Zero();

  static QuadraticProbe assemble(const Objective& f, double step = 1.0);

  double reconstruct(const Vec3& v) const { return c0 + g.dot(v) + 0.5 * v.dot(h * v); }
};

struct QuadraticMinimum {
  Vec3 argmin;
  double value;
};

/// Solves H v = -g for an exactly quadratic, bounded-below objective.
/// Throws "unbounded or degenerate objective" when H fails a Cholesky
/// factorization (a coercivity violation in the feeding parameters).
QuadraticMinimum minimize_quadratic(const Objective& f, double probe_step = 1.0);

struct GridBox {
  Vec3 center = Vec3::Zero();
  double half_width = 1.0;
};

/// Derivative-free fallback: nested grid search with shrinking boxes.
/// Auto-sizes the box from |g| and the smallest Hessian eigenvalue when
/// none is given. Throws "box too small" if the minimizer ends up pinned
/// to the initial box boundary.
QuadraticMinimum grid_refine_min(const Objective& f, std::optional<GridBox> box = std::nullopt,
                                 int levels = 10, int points_per_axis = 17);

}  // namespace cosserat
