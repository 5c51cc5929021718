#include <doctest.h>

#include "cosserat/curvature.hpp"
#include "cosserat/rng.hpp"

using namespace cosserat;

namespace {

double eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  const bool even = (i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
                    (i == 2 && j == 0 && k == 1);
  return even ? 1.0 : -1.0;
}

RotationField spin_field(double t) {
  return RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3(t, 0, 0));
}

}  // namespace

TEST_SUITE_BEGIN("curvature");

TEST_CASE("constant fields carry no curvature") {
  Rng rng(3);
  const RotationField f = RotationField::constant(rng.rotation());
  const Vec3 x(0.4, -0.2, 0.1);
  CHECK(wryness(f, x).norm() == 0.0);
  CHECK(dislocation_density(f, x).norm() == 0.0);
  CHECK(k_tensor(f, x).squared_norm() == 0.0);
  CHECK(k_hat_tensor(f, x).squared_norm() == 0.0);
}

TEST_CASE("single spin field has wryness t e3 x e1") {
  const double t = 0.8;
  const RotationField f = spin_field(t);
  const Vec3 x(0.5, 0.1, -0.4);
  const Mat3 gamma = wryness(f, x);
  const Mat3 expected = t * Vec3::UnitZ() * Vec3::UnitX().transpose();
  CHECK((gamma - expected).norm() < 1e-14);

  // Frame indifference: a constant left rotation cancels out.
  Rng rng(9);
  const Mat3 q = rng.rotation();
  CHECK((wryness(f.left_multiplied(q), x) - gamma).norm() < 1e-13);
}

TEST_CASE("nye conversions") {
  CHECK((nye_alpha_to_gamma(Mat3::Identity()) - 0.5 * Mat3::Identity()).norm() == 0.0);

  const double t = 0.6;
  const Mat3 gamma = t * Vec3::UnitZ() * Vec3::UnitX().transpose();
  const Mat3 alpha = nye_gamma_to_alpha(gamma);
  CHECK((alpha - (-t) * Vec3::UnitX() * Vec3::UnitZ().transpose()).norm() < 1e-15);

  // Entrywise evaluation of the defining formula.
  Rng rng(15);
  for (int rep = 0; rep < 100; ++rep) {
    const Mat3 g = rng.uniform_mat3(-1, 1);
    const Mat3 a = nye_gamma_to_alpha(g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double expected = -g(j, i) + (i == j ? g.trace() : 0.0);
        CHECK(a(i, j) == doctest::Approx(expected).epsilon(1e-15));
      }
    CHECK((nye_alpha_to_gamma(a) - g).norm() < 1e-14);
  }
}

TEST_CASE("dev-sym, skew and trace correspondences") {
  const Mat3 id_alpha = nye_gamma_to_alpha(Mat3::Identity());
  CHECK((id_alpha - 2.0 * Mat3::Identity()).norm() == 0.0);
  CHECK(id_alpha.trace() == doctest::Approx(2.0 * Mat3::Identity().trace()).epsilon(1e-15));

  const Mat3 gamma_skew = anti(Vec3(0.3, -0.8, 0.2)).matrix();
  CHECK((nye_gamma_to_alpha(gamma_skew) - gamma_skew).norm() < 1e-15);

  Rng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    const NyeCorrespondence c = sym_skew_tr_correspondence(rng.uniform_mat3(-1, 1));
    CHECK((c.dev_sym_gamma - c.minus_dev_sym_alpha).norm() < 1e-14);
    CHECK((c.skew_gamma - c.skew_alpha).norm() < 1e-14);
    CHECK(c.tr_gamma == doctest::Approx(c.half_tr_alpha).epsilon(1e-14));
  }
}

TEST_CASE("index relation between the full tensor and the wryness") {
  const RotationField f = spin_field(0.9);
  const Vec3 x(0.2, 0.3, 0.4);
  const ThirdOrder3x9 k = k_tensor(f, x);
  const Mat3 gamma = wryness(f, x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int kk = 0; kk < 3; ++kk) {
        double expected = 0.0;
        for (int l = 0; l < 3; ++l) expected -= eps3(i, j, l) * gamma(l, kk);
        CHECK(k.entry(i, j, kk) == doctest::Approx(expected).epsilon(1e-13));
      }
}

TEST_CASE("directional bending blocks of the spin field") {
  // For R = exp(t x1 anti(e3)) the directional blocks are
  // (t e2 x e1 | -t e1 x e1 | 0) and the third block carries no energy.
  const double t = 0.45;
  const RotationField f = spin_field(t);
  const Vec3 x(0.0, 0.7, -0.2);
  const ThirdOrder3x9 k_hat = k_hat_tensor(f, x);
  CHECK((k_hat.block(0) - t * Vec3::UnitY() * Vec3::UnitX().transpose()).norm() < 1e-13);
  CHECK((k_hat.block(1) + t * Vec3::UnitX() * Vec3::UnitX().transpose()).norm() < 1e-13);
  CHECK(k_hat.block(2).norm() < 1e-13);
}

TEST_CASE("permutation maps the directional tensor onto the full one") {
  const RotationField f = RotationField::product(
      RotationField::exp_affine(Vec3::UnitZ(), 0.1, Vec3(0.7, 0, 0)),
      RotationField::exp_affine(Vec3::UnitX(), -0.2, Vec3(0, 0.4, 0)));
  const Vec3 x(0.3, 0.2, 0.1);
  const ThirdOrder3x9 k = k_tensor(f, x);
  const ThirdOrder3x9 k_hat = k_hat_tensor(f, x);
  CHECK(std::sqrt((permute_A(k_hat) - k).squared_norm()) < 1e-13);
  CHECK(k.squared_norm() == doctest::Approx(k_hat.squared_norm()).epsilon(1e-13));

  // Uni-constant identity: |DR|^2 = |K|^2 = 2 |Gamma|^2.
  double dr2 = 0.0;
  for (int i = 0; i < 3; ++i) dr2 += f.derivative(x, i).squaredNorm();
  CHECK(dr2 == doctest::Approx(k.squared_norm()).epsilon(1e-12));
  CHECK(dr2 == doctest::Approx(2.0 * wryness(f, x).squaredNorm()).epsilon(1e-12));
}

TEST_CASE("curl route reproduces the nye route") {
  const RotationField f = RotationField::product(
      RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3(0.7, 0, 0)),
      RotationField::exp_affine(Vec3::UnitY(), 0.3, Vec3(0, 0, 0.5)));
  const Vec3 x(0.1, 0.2, 0.3);
  CHECK((dislocation_density_curl(f, x) - dislocation_density(f, x)).norm() < 1e-12);

  const RotationField fd = RotationField::from_evaluator([f](const Vec3& y) { return f(y); });
  CHECK_THROWS_AS(dislocation_density_curl(fd, x), std::invalid_argument);
}

TEST_CASE("curvature measures bundle is self-consistent") {
  const RotationField f = spin_field(0.3);
  const Vec3 x(0.25, 0.5, 0.75);
  const CurvatureSet set = curvature_measures(f, x);
  CHECK((set.alpha - nye_gamma_to_alpha(set.gamma)).norm() == 0.0);
  CHECK((set.k_full.axial_columns() - set.gamma).norm() < 1e-14);
  CHECK(std::sqrt((anti_columns(set.gamma) - set.k_full).squared_norm()) < 1e-14);
}

TEST_SUITE_END();
