#pragma once

#include <array>
#include <functional>
#include <string>

#include "cosserat/tensor.hpp"

namespace cosserat {

struct Rect {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{1.0, 1.0};
  bool contains(const Vec2& x) const {
    return x[0] >= lo[0] && x[0] <= hi[0] && x[1] >= lo[1] && x[1] <= hi[1];
  }
};

/// Midsurface frame data at one parameter point.
struct SurfaceFrame {
  Mat32 dy0;        // first derivatives of the midsurface
  Vec3 n0;          // unit normal, d1 x d2 orientation
  Mat3 dtheta0;     // (dy0 | n0)
  Mat3 dtheta0_inv;
  Mat2 first_form;   // I = dy0^T dy0
  Mat2 second_form;  // II = -dy0^T dn0
  Mat2 weingarten;   // L = I^-1 II
  Mat32 dn0;
  Mat3 tangential_projector;  // A = (dy0|0) dtheta0^-1, A + n0 n0^T = I
  double surface_element;     // det dtheta0
  Mat3 q0;  // rotation factor of the polar decomposition of dtheta0
  Mat3 u0;  // symmetric positive definite factor
};

/// Midsurface y0 with first and second derivatives, analytic for the
/// built-in shapes and central-difference for graph/custom surfaces.
class Surface {
 public:
  using Position = std::function<Vec3(const Vec2&)>;
  using Jacobian = std::function<Mat32(const Vec2&)>;
  /// second(x, i, j) = d_i d_j y0(x)
  using Hessian = std::function<Vec3(const Vec2&, int, int)>;

  static Surface plane(Rect domain = Rect{});
  static Surface cylinder(double radius, Rect domain = Rect{});
  /// y0 = r (cos x1 cos x2, sin x1 cos x2, sin x2); keep x2 away from +-pi/2.
  static Surface sphere(double radius, Rect domain = Rect{Vec2(0.0, 0.2), Vec2(0.6, 0.8)});
  /// y0 = (x1, x2, f(x1, x2)) with f given as an expression string.
  /// The differencing step default balances second-derivative truncation
  /// against roundoff.
  static Surface graph(const std::string& height_expr, Rect domain = Rect{},
                       double fd_step = 1e-4);
  static Surface from_functions(Position position, Rect domain, double fd_step = 1e-4);
  static Surface from_functions(Position position, Jacobian jacobian, Hessian hessian,
                                Rect domain);

  Vec3 position(const Vec2& x) const { return position_(x); }
  Mat32 jacobian(const Vec2& x) const;
  Vec3 second_derivative(const Vec2& x, int i, int j) const;

  SurfaceFrame frame_at(const Vec2& x) const;

  /// (dy0 | n0) + x3 (dn0 | 0); rejects x3 with non-positive determinant.
  Mat3 dtheta_thick(const Vec2& x, double x3) const;

  const Rect& domain() const { return domain_; }

 private:
  Surface(Position p, Jacobian j, Hessian h, Rect d, double step)
      : position_(std::move(p)), jacobian_(std::move(j)), hessian_(std::move(h)),
        domain_(d), fd_step_(step) {}

  Position position_;
  Jacobian jacobian_;  // empty -> finite differences
  Hessian hessian_;
  Rect domain_;
  double fd_step_ = 1e-5;
};

/// X_par = A X, X_perp = (I - A) X; the parts are Frobenius-orthogonal.
std::pair<Mat3, Mat3> decompose_tangent_normal(const Mat3& x, const SurfaceFrame& frame);

/// Rotation and stretch factors of a matrix with positive determinant,
/// via the eigendecomposition of F^T F.
std::pair<Mat3, Mat3> polar_decompose(const Mat3& f);

}  // namespace cosserat
