#include "cosserat/rotation_field.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat/rng.hpp"

namespace cosserat {

Mat3 rotation_exp(const Vec3& axis_angle) {
  const double theta = axis_angle.norm();
  const Mat3 a = anti(axis_angle).matrix();
  double s, c;  // sin(t)/t and (1-cos(t))/t^2
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    s = 1.0 - t2 / 6.0;
    c = 0.5 - t2 / 24.0;
  } else {
    s = std::sin(theta) / theta;
    c = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Mat3::Identity() + s * a + c * (a * a);
}

Mat3 Rng::rotation() {
  const Vec3 axis = unit_vec3();
  const double angle = uniform(0.0, 2.0 * M_PI);
  return rotation_exp(angle * axis);
}

namespace {

void check_rotation(const Mat3& r, const Vec3& x) {
  const double ortho = (r.transpose() * r - Mat3::Identity()).norm();
  if (!(ortho <= 1e-10) || !(r.determinant() > 0.0)) {
    throw std::runtime_error("rotation field value is not in SO(3) at (" +
                             std::to_string(x.x()) + ", " + std::to_string(x.y()) + ", " +
                             std::to_string(x.z()) + "), |R^T R - I| = " + std::to_string(ortho));
  }
}

}  // namespace

RotationField::RotationField()
    : RotationField([](const Vec3&) { return Mat3::Identity().eval(); },
                    [](const Vec3&, int) { return Mat3::Zero().eval(); }, 1e-5) {}

RotationField RotationField::constant(const Mat3& r) {
  return analytic([r](const Vec3&) { return r; },
                  [](const Vec3&, int) { return Mat3::Zero(); });
}

RotationField RotationField::exp_affine(const Vec3& axis, double theta0, const Vec3& theta_grad) {
  if (std::abs(axis.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("exp_affine: axis must be a unit vector");
  }
  const Mat3 a = anti(axis).matrix();
  auto eval = [axis, theta0, theta_grad](const Vec3& x) {
    return rotation_exp((theta0 + theta_grad.dot(x)) * axis);
  };
  // d/dx_i exp(theta(x) A) = g_i A exp(theta A) for constant A.
  auto deriv = [axis, a, theta0, theta_grad](const Vec3& x, int i) -> Mat3 {
    return theta_grad[i] * (a * rotation_exp((theta0 + theta_grad.dot(x)) * axis));
  };
  return RotationField(std::move(eval), std::move(deriv), 1e-5);
}

RotationField RotationField::exp_general(std::function<Vec3(const Vec3&)> axis,
                                         std::function<double(const Vec3&)> angle,
                                         double fd_step) {
  auto eval = [axis = std::move(axis), angle = std::move(angle)](const Vec3& x) {
    const Vec3 n = axis(x);
    if (std::abs(n.norm() - 1.0) > 1e-8) {
      throw std::invalid_argument("exp_general: axis field is not unit length");
    }
    return rotation_exp(angle(x) * n);
  };
  return from_evaluator(std::move(eval), fd_step);
}

RotationField RotationField::from_evaluator(Evaluator eval, double fd_step) {
  return RotationField(std::move(eval), Derivative(), fd_step);
}

RotationField RotationField::analytic(Evaluator eval, Derivative deriv) {
  return RotationField(std::move(eval), std::move(deriv), 1e-5);
}

RotationField RotationField::product(const RotationField& f, const RotationField& g) {
  auto eval = [f, g](const Vec3& x) -> Mat3 { return f(x) * g(x); };
  if (f.analytic_mode() && g.analytic_mode()) {
    auto deriv = [f, g](const Vec3& x, int i) -> Mat3 {
      return f.derivative(x, i) * g(x) + f(x) * g.derivative(x, i);
    };
    return analytic(std::move(eval), std::move(deriv));
  }
  return from_evaluator(std::move(eval), std::min(f.fd_step_, g.fd_step_));
}

RotationField RotationField::left_multiplied(const Mat3& q) const {
  RotationField out = *this;
  auto base = eval_;
  out.eval_ = [q, base](const Vec3& x) -> Mat3 { return q * base(x); };
  if (deriv_) {
    auto d = deriv_;
    out.deriv_ = [q, d](const Vec3& x, int i) -> Mat3 { return q * d(x, i); };
  }
  return out;
}

RotationField RotationField::right_multiplied(const Mat3& q) const {
  RotationField out = *this;
  auto base = eval_;
  out.eval_ = [q, base](const Vec3& x) -> Mat3 { return base(x) * q; };
  if (deriv_) {
    auto d = deriv_;
    out.deriv_ = [q, d](const Vec3& x, int i) -> Mat3 { return d(x, i) * q; };
  }
  return out;
}

RotationField RotationField::isotropy_transformed(const Mat3& q) const {
  RotationField out = *this;
  auto base = eval_;
  out.eval_ = [q, base](const Vec3& x) -> Mat3 { return base(q * x) * q; };
  if (deriv_) {
    auto d = deriv_;
    out.deriv_ = [q, d](const Vec3& x, int i) -> Mat3 {
      Mat3 acc = Mat3::Zero();
      for (int j = 0; j < 3; ++j) acc += q(j, i) * d(q * x, j);
      return acc * q;
    };
  }
  // The transformed domain is q^T * domain; kept unbounded for test fields.
  out.domain_ = Box3{};
  return out;
}

Mat3 RotationField::operator()(const Vec3& x) const {
  if (!domain_.contains(x)) {
    throw std::domain_error("rotation field evaluated outside its domain");
  }
  const Mat3 r = eval_(x);
  check_rotation(r, x);
  return r;
}

Mat3 RotationField::derivative(const Vec3& x, int i) const {
  if (i < 0 || i > 2) throw std::invalid_argument("derivative axis index must be 0, 1 or 2");
  if (deriv_) {
    if (!domain_.contains(x)) {
      throw std::domain_error("rotation field differentiated outside its domain");
    }
    return deriv_(x, i);
  }
  if (!domain_.contains(x, fd_step_)) {
    throw std::domain_error("finite-difference stencil leaves the field domain");
  }
  Vec3 xp = x, xm = x;
  xp[i] += fd_step_;
  xm[i] -= fd_step_;
  return ((*this)(xp) - (*this)(xm)) / (2.0 * fd_step_);
}

RotationField RotationField::with_domain(const Box3& box) const {
  RotationField out = *this;
  out.domain_ = box;
  return out;
}

RotationField RotationField::with_fd_step(double step) const {
  if (!(step > 0.0)) throw std::invalid_argument("fd step must be positive");
  RotationField out = *this;
  out.fd_step_ = step;
  return out;
}

}  // namespace cosserat
