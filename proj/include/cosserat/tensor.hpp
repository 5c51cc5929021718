#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>

namespace cosserat {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

inline Mat3 sym(const Mat3& x) { return 0.5 * (x + x.transpose()); }
inline Mat3 skew(const Mat3& x) { return 0.5 * (x - x.transpose()); }
inline Mat3 dev(const Mat3& x) { return x - (x.trace() / 3.0) * Mat3::Identity(); }
inline Mat3 dev_sym(const Mat3& x) { return dev(sym(x)); }

/// 3x3 skew-symmetric matrix. Only constructible through `anti` or
/// `skew_of`, so asymmetric states are unrepresentable.
class SkewMat3 {
 public:
  const Mat3& matrix() const { return m_; }

  /// Axial vector v with matrix() * x == v.cross(x) for all x.
  Vec3 axial() const { return Vec3(m_(2, 1), m_(0, 2), m_(1, 0)); }

  friend SkewMat3 anti(const Vec3& v);
  friend SkewMat3 skew_of(const Mat3& x);

 private:
  explicit SkewMat3(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

/// anti(v)_{ij} = -eps_{ijk} v_k.
inline SkewMat3 anti(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return SkewMat3(m);
}

/// Skew part of an arbitrary matrix, as a SkewMat3.
inline SkewMat3 skew_of(const Mat3& x) {
  Mat3 m;
  const double a = 0.5 * (x(2, 1) - x(1, 2));
  const double b = 0.5 * (x(0, 2) - x(2, 0));
  const double c = 0.5 * (x(1, 0) - x(0, 1));
  m << 0.0, -c, b,
       c, 0.0, -a,
      -b, a, 0.0;
  return SkewMat3(m);
}

inline Vec3 axl(const SkewMat3& a) { return a.axial(); }

struct CartanParts {
  Mat3 dev_sym;
  Mat3 skew;
  Mat3 trace_part;
};

/// Orthogonal split X = dev sym X + skew X + (tr X / 3) I.
inline CartanParts cartan_decompose(const Mat3& x) {
  CartanParts parts;
  parts.skew = skew(x);
  parts.trace_part = (x.trace() / 3.0) * Mat3::Identity();
  parts.dev_sym = sym(x) - parts.trace_part;
  return parts;
}

/// Embeds a 2x2 matrix as the upper-left block of a 3x3 matrix.
inline Mat3 lift_flat(const Mat2& m) {
  Mat3 out = Mat3::Zero();
  out.topLeftCorner<2, 2>() = m;
  return out;
}

inline Mat3 from_columns(const Vec3& c1, const Vec3& c2, const Vec3& c3) {
  Mat3 out;
  out.col(0) = c1;
  out.col(1) = c2;
  out.col(2) = c3;
  return out;
}

/// Third-order tensor stored as three 3x3 blocks (A.e_1 | A.e_2 | A.e_3);
/// entry A_{ijk} lives at block(k)(i,j).
class ThirdOrder3x9 {
 public:
  ThirdOrder3x9() : blocks_{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()} {}
  ThirdOrder3x9(const Mat3& a1, const Mat3& a2, const Mat3& a3) : blocks_{a1, a2, a3} {}

  const Mat3& block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  Mat3& block(int k) { return blocks_.at(static_cast<std::size_t>(k)); }

  double entry(int i, int j, int k) const { return block(k)(i, j); }

  double squared_norm() const {
    return blocks_[0].squaredNorm() + blocks_[1].squaredNorm() + blocks_[2].squaredNorm();
  }

  ThirdOrder3x9 sym_blocks() const {
    return ThirdOrder3x9(sym(blocks_[0]), sym(blocks_[1]), sym(blocks_[2]));
  }
  ThirdOrder3x9 skew_blocks() const {
    return ThirdOrder3x9(skew(blocks_[0]), skew(blocks_[1]), skew(blocks_[2]));
  }
  double trace() const { return blocks_[0].trace() + blocks_[1].trace() + blocks_[2].trace(); }

  /// Columns are the axial vectors of the (skew parts of the) blocks.
  Mat3 axial_columns() const {
    return from_columns(skew_of(blocks_[0]).axial(), skew_of(blocks_[1]).axial(),
                        skew_of(blocks_[2]).axial());
  }

  /// (permute_last_two(A))_{ijk} = A_{ikj}.
  ThirdOrder3x9 permute_last_two() const {
    ThirdOrder3x9 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out.block(k)(i, j) = block(j)(i, k);
    return out;
  }

  ThirdOrder3x9 operator+(const ThirdOrder3x9& o) const {
    return ThirdOrder3x9(blocks_[0] + o.blocks_[0], blocks_[1] + o.blocks_[1],
                         blocks_[2] + o.blocks_[2]);
  }
  ThirdOrder3x9 operator-(const ThirdOrder3x9& o) const {
    return ThirdOrder3x9(blocks_[0] - o.blocks_[0], blocks_[1] - o.blocks_[1],
                         blocks_[2] - o.blocks_[2]);
  }

 private:
  std::array<Mat3, 3> blocks_;
};

/// Columns of z become the axial vectors of three skew blocks.
inline ThirdOrder3x9 anti_columns(const Mat3& z) {
  return ThirdOrder3x9(anti(z.col(0)).matrix(), anti(z.col(1)).matrix(),
                       anti(z.col(2)).matrix());
}

/// B A = (B A_1 | B A_2 | B A_3).
inline ThirdOrder3x9 third_mul_left(const Mat3& b, const ThirdOrder3x9& a) {
  return ThirdOrder3x9(b * a.block(0), b * a.block(1), b * a.block(2));
}

/// (A B).e_l = sum_k A_k B_{kl}.
inline ThirdOrder3x9 third_mul_right(const ThirdOrder3x9& a, const Mat3& b) {
  ThirdOrder3x9 out;
  for (int l = 0; l < 3; ++l) {
    Mat3 acc = Mat3::Zero();
    for (int k = 0; k < 3; ++k) acc += a.block(k) * b(k, l);
    out.block(l) = acc;
  }
  return out;
}

}  // namespace cosserat
