#include <doctest.h>

#include <cmath>

#include "cosserat/rng.hpp"
#include "cosserat/rotation_field.hpp"
#include "cosserat/tensor.hpp"

using namespace cosserat;

TEST_SUITE_BEGIN("rotation_field");

TEST_CASE("zero angle gives the identity everywhere") {
  const RotationField f = RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3::Zero());
  const Vec3 x(0.3, -0.2, 0.9);
  CHECK((f(x) - Mat3::Identity()).norm() == 0.0);
  for (int i = 0; i < 3; ++i) CHECK(f.derivative(x, i).norm() == 0.0);
}

TEST_CASE("affine angle field has the constant body spin") {
  const double t = 0.7;
  const RotationField f = RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3(t, 0, 0));
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Vec3 x = rng.uniform_vec3(-1, 1);
    const Mat3 spin = f(x).transpose() * f.derivative(x, 0);
    CHECK((spin - anti(t * Vec3::UnitZ()).matrix()).norm() < 1e-13);
    CHECK(f.derivative(x, 1).norm() == 0.0);
  }

  // Finite differences agree with the analytic derivative.
  const RotationField fd = RotationField::from_evaluator(
      [t](const Vec3& x) { return rotation_exp(t * x[0] * Vec3::UnitZ()); }, 1e-5);
  const Vec3 x(0.2, 0.4, -0.1);
  CHECK((fd.derivative(x, 0) - f.derivative(x, 0)).norm() < 1e-8);
}

TEST_CASE("quarter turn maps e1 to e2") {
  const RotationField f = RotationField::exp_affine(Vec3::UnitZ(), M_PI / 2.0, Vec3::Zero());
  CHECK((f(Vec3::Zero()) * Vec3::UnitX() - Vec3::UnitY()).norm() < 1e-15);
}

TEST_CASE("non-unit axis is rejected") {
  CHECK_THROWS_AS(RotationField::exp_affine(Vec3(0, 0, 2), 0.0, Vec3::Zero()),
                  std::invalid_argument);
  const RotationField f = RotationField::exp_general(
      [](const Vec3&) { return Vec3(0, 0, 0.5); }, [](const Vec3&) { return 1.0; });
  CHECK_THROWS_AS(f(Vec3::Zero()), std::invalid_argument);
}

TEST_CASE("rodrigues small-angle fallback stays orthonormal") {
  for (const double theta : {1e-12, 1e-7, 1e-4, 1e-2, 1.0, 3.0}) {
    const Mat3 r = rotation_exp(theta * Vec3(0.6, 0.8, 0.0));
    CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-14);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
  const Mat3 tiny = rotation_exp(Vec3(1e-6, 0, 0));
  CHECK((tiny - (Mat3::Identity() + anti(Vec3(1e-6, 0, 0)).matrix())).norm() < 1e-12);
}

TEST_CASE("symmetric finite-difference residue vanishes at second order") {
  const RotationField analytic = RotationField::exp_general(
      [](const Vec3&) { return Vec3::UnitZ().eval(); },
      [](const Vec3& x) { return std::sin(1.3 * x[0]); }, 1e-5);
  const Vec3 x(0.37, 0.0, 0.0);
  std::vector<double> steps{1e-2, 1e-3, 1e-4};
  std::vector<double> residuals;
  for (const double h : steps) {
    const RotationField f = analytic.with_fd_step(h);
    residuals.push_back(sym(f(x).transpose() * f.derivative(x, 0)).norm());
  }
  // Log-log least-squares order over the three steps.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double lx = std::log(steps[i]), ly = std::log(residuals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(steps.size());
  const double order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(order >= 1.9);
}

TEST_CASE("left multiplication commutes with analytic differentiation exactly") {
  const RotationField f = RotationField::exp_affine(Vec3::UnitY(), 0.3, Vec3(0.2, -0.4, 0.1));
  Rng rng(23);
  const Mat3 q = rng.rotation();
  const RotationField shifted = f.left_multiplied(q);
  const Vec3 x(0.1, 0.7, -0.3);
  for (int i = 0; i < 3; ++i) {
    CHECK((shifted.derivative(x, i) - q * f.derivative(x, i)).norm() == 0.0);
  }
}

TEST_CASE("product fields differentiate by the product rule") {
  const RotationField f = RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3(0.7, 0, 0));
  const RotationField g = RotationField::exp_affine(Vec3::UnitX(), 0.0, Vec3(0, 0.4, 0));
  const RotationField fg = RotationField::product(f, g);
  CHECK(fg.analytic_mode());
  const Vec3 x(0.3, 0.2, 0.1);
  const RotationField fd = RotationField::from_evaluator(
      [f, g](const Vec3& y) { return (f(y) * g(y)).eval(); }, 1e-6);
  for (int i = 0; i < 2; ++i) {
    CHECK((fg.derivative(x, i) - fd.derivative(x, i)).norm() < 1e-9);
  }
}

TEST_CASE("domain bounds are enforced") {
  Box3 box;
  box.lo = Vec3(0, 0, 0);
  box.hi = Vec3(1, 1, 1);
  const RotationField f =
      RotationField::from_evaluator([](const Vec3&) { return Mat3::Identity().eval(); }, 1e-3)
          .with_domain(box);
  CHECK_THROWS_AS(f(Vec3(2, 0.5, 0.5)), std::domain_error);
  CHECK_THROWS_AS(f.derivative(Vec3(0.5, 0.5, 0.9995), 2), std::domain_error);
  CHECK(f(Vec3(0.5, 0.5, 0.5)).isApprox(Mat3::Identity()));
}

TEST_SUITE_END();
