#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Rodrigues formula with a series fallback for |theta| < 1e-4.
Mat3 rotation_exp(const Vec3& axis_angle);

struct Box3 {
  Vec3 lo{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  Vec3 hi{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};

  bool contains(const Vec3& x, double margin = 0.0) const {
    for (int i = 0; i < 3; ++i)
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    return true;
  }
};

/// SO(3)-valued field on a box domain. Immutable after construction;
/// evaluation is reentrant. Every evaluation checks R^T R = I to 1e-10
/// and det R > 0.
class RotationField {
 public:
  using Evaluator = std::function<Mat3(const Vec3&)>;
  using Derivative = std::function<Mat3(const Vec3&, int)>;

  /// The constant identity field.
  RotationField();

  static RotationField constant(const Mat3& r);

  /// R(x) = exp(anti((theta0 + <grad, x>) * axis)), analytic derivatives.
  static RotationField exp_affine(const Vec3& axis, double theta0, const Vec3& theta_grad);

  /// R(x) = exp(anti(theta(x) * axis(x))); finite-difference derivatives.
  /// Each evaluation rejects non-unit axis values.
  static RotationField exp_general(std::function<Vec3(const Vec3&)> axis,
                                   std::function<double(const Vec3&)> angle,
                                   double fd_step = 1e-5);

  static RotationField from_evaluator(Evaluator eval, double fd_step = 1e-5);
  static RotationField analytic(Evaluator eval, Derivative deriv);

  /// Pointwise product x -> F(x) G(x); analytic when both factors are.
  static RotationField product(const RotationField& f, const RotationField& g);

  /// x -> Q R(x); the analytic derivative is Q dR by construction.
  RotationField left_multiplied(const Mat3& q) const;
  /// x -> R(x) Q.
  RotationField right_multiplied(const Mat3& q) const;
  /// x -> R(Qx) Q, with chain-rule derivatives. Conjugates the wryness.
  RotationField isotropy_transformed(const Mat3& q) const;

  /// Evaluates and validates orthonormality and orientation.
  Mat3 operator()(const Vec3& x) const;

  /// Spatial derivative along axis i (0-based). Finite-difference mode
  /// uses central differences and requires x to be interior by one step.
  Mat3 derivative(const Vec3& x, int i) const;

  bool analytic_mode() const { return static_cast<bool>(deriv_); }
  double fd_step() const { return fd_step_; }

  RotationField with_domain(const Box3& box) const;
  RotationField with_fd_step(double step) const;

 private:
  RotationField(Evaluator eval, Derivative deriv, double fd_step)
      : eval_(std::move(eval)), deriv_(std::move(deriv)), fd_step_(fd_step) {}

  Evaluator eval_;
  Derivative deriv_;  // empty in finite-difference mode
  double fd_step_ = 1e-5;
  Box3 domain_;
};

}  // namespace cosserat
