#include <doctest.h>

#include "cosserat/oracle.hpp"
#include "cosserat/rng.hpp"

using namespace cosserat;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("norm objectives") {
  const QuadraticMinimum a = minimize_quadratic([](const Vec3& v) { return v.squaredNorm(); });
  CHECK(a.argmin.norm() < 1e-12);
  CHECK(std::abs(a.value) < 1e-12);

  const Vec3 target(1, 2, 3);
  const QuadraticMinimum b =
      minimize_quadratic([target](const Vec3& v) { return (v - target).squaredNorm(); });
  CHECK((b.argmin - target).norm() < 1e-12);
}

TEST_CASE("probe reconstructs exactly quadratic objectives") {
  Rng rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const Mat3 a = rng.uniform_mat3(-1, 1);
    const Mat3 h = (a.transpose() * a + 0.1 * Mat3::Identity()).eval();
    const Vec3 g = rng.uniform_vec3(-2, 2);
    const double c0 = rng.uniform(-1, 1);
    const Objective f = [h, g, c0](const Vec3& v) { return c0 + g.dot(v) + 0.5 * v.dot(h * v); };
    const QuadraticProbe probe = QuadraticProbe::assemble(f);
    CHECK((probe.h - probe.h.transpose()).norm() == 0.0);
    CHECK((probe.h - h).norm() < 1e-12);
    CHECK((probe.g - g).norm() < 1e-13);
    for (int i = 0; i < 50; ++i) {
      const Vec3 v = rng.uniform_vec3(-3, 3);
      CHECK(probe.reconstruct(v) == doctest::Approx(f(v)).epsilon(1e-11));
    }
  }
}

TEST_CASE("indefinite objectives are rejected") {
  const Objective saddle = [](const Vec3& v) { return v[0] * v[0] - v[1] * v[1]; };
  CHECK_THROWS_WITH_AS(minimize_quadratic(saddle),
                       "unbounded or degenerate objective: Hessian is not positive definite",
                       std::runtime_error);
  const Objective flat_dir = [](const Vec3& v) { return v[0] * v[0]; };
  CHECK_THROWS_AS(minimize_quadratic(flat_dir), std::runtime_error);
}

TEST_CASE("grid refinement agrees with the normal equations") {
  const QuadraticMinimum a = grid_refine_min([](const Vec3& v) { return v.squaredNorm(); },
                                             GridBox{Vec3::Zero(), 1.0}, 6);
  CHECK(a.value < 1e-6);

  Rng rng(71);
  for (int rep = 0; rep < 20; ++rep) {
    const Mat3 m = rng.uniform_mat3(-1, 1);
    const Mat3 h = (m.transpose() * m + 0.5 * Mat3::Identity()).eval();
    const Vec3 g = rng.uniform_vec3(-1, 1);
    const Objective f = [h, g](const Vec3& v) { return g.dot(v) + 0.5 * v.dot(h * v); };
    const QuadraticMinimum exact = minimize_quadratic(f);
    const QuadraticMinimum grid = grid_refine_min(f);
    CHECK(std::abs(exact.value - grid.value) < 1e-6 * (1 + std::abs(exact.value)));
  }
}

TEST_CASE("grid refinement survives non-quadratic bowls") {
  const Vec3 center(0.2, -0.3, 0.4);
  const Objective quartic = [center](const Vec3& v) {
    return std::pow((v - center).squaredNorm(), 2);
  };
  const QuadraticMinimum q = grid_refine_min(quartic, GridBox{Vec3::Zero(), 2.0});
  CHECK((q.argmin - center).norm() < 1e-3);
  CHECK(q.value < 1e-10);
}

TEST_CASE("minimizers pinned to the box boundary are reported") {
  const Vec3 target(10, 0, 0);
  const Objective f = [target](const Vec3& v) { return (v - target).squaredNorm(); };
  CHECK_THROWS_WITH_AS(grid_refine_min(f, GridBox{Vec3::Zero(), 1.0}),
                       "box too small: grid minimizer sits on the search boundary",
                       std::runtime_error);
}

TEST_SUITE_END();
