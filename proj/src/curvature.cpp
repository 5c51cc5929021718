#include "cosserat/curvature.hpp"

#include <stdexcept>

namespace cosserat {

Mat3 wryness(const RotationField& field, const Vec3& x) {
  const Mat3 rt = field(x).transpose();
  Mat3 gamma;
  for (int i = 0; i < 3; ++i) {
    gamma.col(i) = skew_of(rt * field.derivative(x, i)).axial();
  }
  return gamma;
}

Mat3 nye_gamma_to_alpha(const Mat3& gamma) {
  return -gamma.transpose() + gamma.trace() * Mat3::Identity();
}

Mat3 nye_alpha_to_gamma(const Mat3& alpha) {
  return -alpha.transpose() + 0.5 * alpha.trace() * Mat3::Identity();
}

Mat3 dislocation_density(const RotationField& field, const Vec3& x) {
  return nye_gamma_to_alpha(wryness(field, x));
}

Mat3 dislocation_density_curl(const RotationField& field, const Vec3& x) {
  if (!field.analytic_mode()) {
    throw std::invalid_argument("curl-based dislocation density needs analytic derivatives");
  }
  const Mat3 d0 = field.derivative(x, 0);
  const Mat3 d1 = field.derivative(x, 1);
  const Mat3 d2 = field.derivative(x, 2);
  // Row i of Curl R is the curl of row i of R.
  Mat3 curl_r;
  for (int i = 0; i < 3; ++i) {
    curl_r(i, 0) = d1(i, 2) - d2(i, 1);
    curl_r(i, 1) = d2(i, 0) - d0(i, 2);
    curl_r(i, 2) = d0(i, 1) - d1(i, 0);
  }
  return field(x).transpose() * curl_r;
}

NyeCorrespondence sym_skew_tr_correspondence(const Mat3& gamma) {
  const Mat3 alpha = nye_gamma_to_alpha(gamma);
  NyeCorrespondence c;
  c.dev_sym_gamma = dev_sym(gamma);
  c.minus_dev_sym_alpha = -dev_sym(alpha);
  c.skew_gamma = skew(gamma);
  c.skew_alpha = skew(alpha);
  c.tr_gamma = gamma.trace();
  c.half_tr_alpha = 0.5 * alpha.trace();
  return c;
}

ThirdOrder3x9 k_tensor(const RotationField& field, const Vec3& x) {
  const Mat3 rt = field(x).transpose();
  ThirdOrder3x9 k;
  for (int i = 0; i < 3; ++i) {
    k.block(i) = skew_of(rt * field.derivative(x, i)).matrix();
  }
  return k;
}

ThirdOrder3x9 k_hat_tensor(const RotationField& field, const Vec3& x) {
  const Mat3 rt = field(x).transpose();
  // D(R e_k) has columns d_j(R e_k), so block k is R^T (dR/dx_j e_k)_j.
  std::array<Mat3, 3> d = {field.derivative(x, 0), field.derivative(x, 1),
                           field.derivative(x, 2)};
  ThirdOrder3x9 k_hat;
  for (int k = 0; k < 3; ++k) {
    Mat3 jac;
    for (int j = 0; j < 3; ++j) jac.col(j) = d[static_cast<std::size_t>(j)].col(k);
    k_hat.block(k) = rt * jac;
  }
  return k_hat;
}

ThirdOrder3x9 permute_A(const ThirdOrder3x9& a) { return a.permute_last_two(); }

CurvatureSet curvature_measures(const RotationField& field, const Vec3& x) {
  CurvatureSet set;
  set.gamma = wryness(field, x);
  set.alpha = nye_gamma_to_alpha(set.gamma);
  set.k_full = k_tensor(field, x);
  set.k_hat = k_hat_tensor(field, x);
  return set;
}

}  // namespace cosserat
