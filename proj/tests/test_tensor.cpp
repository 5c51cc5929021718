#include <doctest.h>

#include "cosserat/rng.hpp"
#include "cosserat/tensor.hpp"

using namespace cosserat;

TEST_SUITE_BEGIN("tensor");

TEST_CASE("anti matches the canonical skew representation") {
  Mat3 expected;
  expected << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  CHECK((anti(Vec3(1, 0, 0)).matrix() - expected).norm() == 0.0);
}

TEST_CASE("axl and anti are mutually inverse") {
  CHECK(axl(skew_of(Mat3::Zero())).norm() == 0.0);
  const Vec3 v(1, 2, 3);
  CHECK((axl(anti(v)) - v).norm() == 0.0);

  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Vec3 w = rng.uniform_vec3(-5, 5);
    CHECK((anti(axl(anti(w))).matrix() - anti(w).matrix()).norm() == 0.0);
    // |anti(w)|^2 = 2 |w|^2, the norm identity the curvature measures use.
    CHECK(anti(w).matrix().squaredNorm() == doctest::Approx(2.0 * w.squaredNorm()).epsilon(1e-14));
    // anti(w) acts as the cross product.
    const Vec3 u = rng.uniform_vec3(-5, 5);
    CHECK((anti(w).matrix() * u - w.cross(u)).norm() < 1e-13);
  }
}

TEST_CASE("cartan decomposition is orthogonal and reassembles") {
  const CartanParts id_parts = cartan_decompose(Mat3::Identity());
  CHECK(id_parts.dev_sym.norm() == 0.0);
  CHECK(id_parts.skew.norm() == 0.0);
  CHECK((id_parts.trace_part - Mat3::Identity()).norm() == 0.0);

  const Mat3 pure_skew = anti(Vec3(1, 2, 3)).matrix();
  const CartanParts skew_parts = cartan_decompose(pure_skew);
  CHECK(skew_parts.dev_sym.norm() == 0.0);
  CHECK(skew_parts.trace_part.norm() == 0.0);
  CHECK((skew_parts.skew - pure_skew).norm() == 0.0);

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mat3 x = rng.uniform_mat3(-2, 2);
    const CartanParts parts = cartan_decompose(x);
    CHECK((parts.dev_sym + parts.skew + parts.trace_part - x).norm() < 1e-14);
    CHECK(std::abs(parts.dev_sym.trace()) < 1e-14);
    CHECK(std::abs((parts.dev_sym.transpose() * parts.skew).trace()) < 1e-13);
    CHECK(std::abs((parts.dev_sym.transpose() * parts.trace_part).trace()) < 1e-13);
    CHECK(std::abs((parts.skew.transpose() * parts.trace_part).trace()) < 1e-13);
    const double pythagoras = parts.dev_sym.squaredNorm() + parts.skew.squaredNorm() +
                              parts.trace_part.squaredNorm();
    CHECK(pythagoras == doctest::Approx(x.squaredNorm()).epsilon(1e-13));
  }
}

TEST_CASE("lift embeds 2x2 blocks") {
  CHECK((lift_flat(Mat2::Identity()) - Vec3(1, 1, 0).asDiagonal().toDenseMatrix()).norm() == 0.0);
  CHECK(lift_flat(Mat2::Zero()).norm() == 0.0);
  Mat2 m;
  m << 1, 2, 3, 4;
  Mat3 expected;
  expected << 1, 2, 0, 3, 4, 0, 0, 0, 0;
  CHECK((lift_flat(m) - expected).norm() == 0.0);
}

TEST_CASE("third-order products") {
  Rng rng(13);
  const ThirdOrder3x9 a(rng.uniform_mat3(-1, 1), rng.uniform_mat3(-1, 1),
                        rng.uniform_mat3(-1, 1));

  CHECK((third_mul_left(Mat3::Identity(), a) - a).squared_norm() == 0.0);
  CHECK((third_mul_right(a, Mat3::Identity()) - a).squared_norm() == 0.0);

  const ThirdOrder3x9 scaled = third_mul_right(a, Vec3(2, 1, 1).asDiagonal().toDenseMatrix());
  CHECK((scaled.block(0) - 2.0 * a.block(0)).norm() == 0.0);
  CHECK((scaled.block(1) - a.block(1)).norm() == 0.0);
  CHECK((scaled.block(2) - a.block(2)).norm() == 0.0);

  for (int i = 0; i < 20; ++i) {
    Mat3 b = rng.uniform_mat3(-1, 1) + 3.0 * Mat3::Identity();  // comfortably invertible
    const Mat3 c = rng.uniform_mat3(-1, 1);
    const ThirdOrder3x9 roundtrip = third_mul_right(third_mul_right(a, b), b.inverse());
    CHECK(std::sqrt((roundtrip - a).squared_norm()) <
          1e-12 * std::sqrt(std::max(1.0, a.squared_norm())));
    const ThirdOrder3x9 left = third_mul_right(third_mul_right(a, b), c);
    const ThirdOrder3x9 right = third_mul_right(a, (b * c).eval());
    CHECK(std::sqrt((left - right).squared_norm()) <
          1e-12 * std::sqrt(std::max(1.0, left.squared_norm())));
  }
}

TEST_CASE("block norm convention and permutation") {
  Rng rng(17);
  const ThirdOrder3x9 a(rng.uniform_mat3(-1, 1), rng.uniform_mat3(-1, 1),
                        rng.uniform_mat3(-1, 1));
  CHECK(a.squared_norm() == doctest::Approx(a.block(0).squaredNorm() + a.block(1).squaredNorm() +
                                            a.block(2).squaredNorm()));
  const ThirdOrder3x9 p = a.permute_last_two();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(p.entry(i, j, k) == a.entry(i, k, j));
  CHECK((p.permute_last_two() - a).squared_norm() == 0.0);
  CHECK(p.squared_norm() == doctest::Approx(a.squared_norm()));
}

TEST_SUITE_END();
