#include "cosserat/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat/expression.hpp"

namespace cosserat {

Surface Surface::plane(Rect domain) {
  auto pos = [](const Vec2& x) { return Vec3(x[0], x[1], 0.0); };
  auto jac = [](const Vec2&) {
    Mat32 j;
    j << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
    return j;
  };
  auto hess = [](const Vec2&, int, int) { return Vec3::Zero().eval(); };
  return Surface(pos, jac, hess, domain, 1e-5);
}

Surface Surface::cylinder(double radius, Rect domain) {
  if (!(radius > 0.0)) throw std::invalid_argument("cylinder radius must be positive");
  const double r = radius;
  auto pos = [r](const Vec2& x) {
    return Vec3(r * std::cos(x[0] / r), r * std::sin(x[0] / r), x[1]);
  };
  auto jac = [r](const Vec2& x) {
    Mat32 j;
    j.col(0) = Vec3(-std::sin(x[0] / r), std::cos(x[0] / r), 0.0);
    j.col(1) = Vec3(0.0, 0.0, 1.0);
    return j;
  };
  auto hess = [r](const Vec2& x, int i, int j) -> Vec3 {
    if (i == 0 && j == 0) {
      return Vec3(-std::cos(x[0] / r) / r, -std::sin(x[0] / r) / r, 0.0);
    }
    return Vec3::Zero();
  };
  return Surface(pos, jac, hess, domain, 1e-5);
}

Surface Surface::sphere(double radius, Rect domain) {
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double r = radius;
  auto pos = [r](const Vec2& x) {
    return Vec3(r * std::cos(x[0]) * std::cos(x[1]), r * std::sin(x[0]) * std::cos(x[1]),
                r * std::sin(x[1]));
  };
  auto jac = [r](const Vec2& x) {
    const double c1 = std::cos(x[0]), s1 = std::sin(x[0]);
    const double c2 = std::cos(x[1]), s2 = std::sin(x[1]);
    Mat32 j;
    j.col(0) = r * Vec3(-s1 * c2, c1 * c2, 0.0);
    j.col(1) = r * Vec3(-c1 * s2, -s1 * s2, c2);
    return j;
  };
  auto hess = [r](const Vec2& x, int i, int j) -> Vec3 {
    const double c1 = std::cos(x[0]), s1 = std::sin(x[0]);
    const double c2 = std::cos(x[1]), s2 = std::sin(x[1]);
    if (i == 0 && j == 0) return r * Vec3(-c1 * c2, -s1 * c2, 0.0);
    if (i == 1 && j == 1) return r * Vec3(-c1 * c2, -s1 * c2, -s2);
    return r * Vec3(s1 * s2, -c1 * s2, 0.0);  // mixed derivative
  };
  return Surface(pos, jac, hess, domain, 1e-5);
}

Surface Surface::graph(const std::string& height_expr, Rect domain, double fd_step) {
  auto f = parse_expression(height_expr);
  auto pos = [f](const Vec2& x) { return Vec3(x[0], x[1], f(x[0], x[1])); };
  return from_functions(pos, domain, fd_step);
}

Surface Surface::from_functions(Position position, Rect domain, double fd_step) {
  if (!(fd_step > 0.0)) throw std::invalid_argument("surface fd step must be positive");
  return Surface(std::move(position), Jacobian(), Hessian(), domain, fd_step);
}

Surface Surface::from_functions(Position position, Jacobian jacobian, Hessian hessian,
                                Rect domain) {
  return Surface(std::move(position), std::move(jacobian), std::move(hessian), domain, 1e-5);
}

Mat32 Surface::jacobian(const Vec2& x) const {
  if (jacobian_) return jacobian_(x);
  Mat32 j;
  for (int i = 0; i < 2; ++i) {
    Vec2 xp = x, xm = x;
    xp[i] += fd_step_;
    xm[i] -= fd_step_;
    j.col(i) = (position_(xp) - position_(xm)) / (2.0 * fd_step_);
  }
  return j;
}

Vec3 Surface::second_derivative(const Vec2& x, int i, int j) const {
  if (hessian_) return hessian_(x, i, j);
  const double h = fd_step_;
  if (i == j) {
    Vec2 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    return (position_(xp) - 2.0 * position_(x) + position_(xm)) / (h * h);
  }
  Vec2 xpp = x, xpm = x, xmp = x, xmm = x;
  xpp[0] += h; xpp[1] += h;
  xpm[0] += h; xpm[1] -= h;
  xmp[0] -= h; xmp[1] += h;
  xmm[0] -= h; xmm[1] -= h;
  return (position_(xpp) - position_(xpm) - position_(xmp) + position_(xmm)) / (4.0 * h * h);
}

SurfaceFrame Surface::frame_at(const Vec2& x) const {
  SurfaceFrame f;
  f.dy0 = jacobian(x);
  const Vec3 cross = f.dy0.col(0).cross(f.dy0.col(1));
  const double cn = cross.norm();
  if (cn < 1e-12) {
    throw std::runtime_error("degenerate immersion: |d1 y0 x d2 y0| < 1e-12 at (" +
                             std::to_string(x[0]) + ", " + std::to_string(x[1]) + ")");
  }
  f.n0 = cross / cn;
  f.dtheta0.leftCols<2>() = f.dy0;
  f.dtheta0.col(2) = f.n0;
  f.surface_element = f.dtheta0.determinant();
  if (!(f.surface_element > 0.0)) {
    throw std::runtime_error("midsurface frame has non-positive determinant");
  }
  f.dtheta0_inv = f.dtheta0.inverse();

  f.first_form = f.dy0.transpose() * f.dy0;
  // dn0 from the derivative of the normalized cross product.
  for (int i = 0; i < 2; ++i) {
    const Vec3 dcross = second_derivative(x, 0, i).cross(f.dy0.col(1)) +
                        f.dy0.col(0).cross(second_derivative(x, 1, i));
    f.dn0.col(i) = (dcross - f.n0 * f.n0.dot(dcross)) / cn;
  }
  f.second_form = -f.dy0.transpose() * f.dn0;
  f.weingarten = f.first_form.inverse() * f.second_form;

  Mat3 dy0_ext = Mat3::Zero();
  dy0_ext.leftCols<2>() = f.dy0;
  f.tangential_projector = dy0_ext * f.dtheta0_inv;

  auto [q0, u0] = polar_decompose(f.dtheta0);
  f.q0 = q0;
  f.u0 = u0;
  return f;
}

Mat3 Surface::dtheta_thick(const Vec2& x, double x3) const {
  const SurfaceFrame f = frame_at(x);
  Mat3 d = f.dtheta0;
  d.leftCols<2>() += x3 * f.dn0;
  if (!(d.determinant() > 0.0)) {
    throw std::runtime_error("thickness coordinate " + std::to_string(x3) +
                             " leaves det D_x Theta positive-definite range");
  }
  return d;
}

std::pair<Mat3, Mat3> decompose_tangent_normal(const Mat3& x, const SurfaceFrame& frame) {
  const Mat3 par = frame.tangential_projector * x;
  const Mat3 perp = (Mat3::Identity() - frame.tangential_projector) * x;
  return {par, perp};
}

std::pair<Mat3, Mat3> polar_decompose(const Mat3& f) {
  if (!(f.determinant() > 0.0)) {
    throw std::invalid_argument("polar decomposition expects det F > 0");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(f.transpose() * f);
  const Mat3 u = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
                 es.eigenvectors().transpose();
  const Mat3 q = f * u.inverse();
  return {q, u};
}

}  // namespace cosserat
