#pragma once

#include "cosserat/rotation_field.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// All four curvature strain measures of a rotation field at one point.
/// k_full = anti of the wryness columns (skew blocks); permuting the last
/// two indices of k_hat recovers k_full.
struct CurvatureSet {
  Mat3 gamma;            // wryness, columns axl(R^T d_i R)
  Mat3 alpha;            // dislocation density, -gamma^T + tr(gamma) I
  ThirdOrder3x9 k_full;  // block k = R^T d_k R
  ThirdOrder3x9 k_hat;   // block k = R^T D(R e_k)
};

/// Columns are axl(skew(R^T d_i R)); the skew projection removes the
/// O(step^2) symmetric residue of finite differencing.
Mat3 wryness(const RotationField& field, const Vec3& x);

Mat3 nye_gamma_to_alpha(const Mat3& gamma);
Mat3 nye_alpha_to_gamma(const Mat3& alpha);

Mat3 dislocation_density(const RotationField& field, const Vec3& x);

/// alpha = R^T Curl R assembled from row-wise curls of R. Needs analytic
/// derivatives; used as a cross-check of the Nye route.
Mat3 dislocation_density_curl(const RotationField& field, const Vec3& x);

/// Both sides of the dev-sym / skew / trace correspondences between the
/// wryness and the dislocation density.
struct NyeCorrespondence {
  Mat3 dev_sym_gamma, minus_dev_sym_alpha;
  Mat3 skew_gamma, skew_alpha;
  double tr_gamma, half_tr_alpha;
};
NyeCorrespondence sym_skew_tr_correspondence(const Mat3& gamma);

ThirdOrder3x9 k_tensor(const RotationField& field, const Vec3& x);
ThirdOrder3x9 k_hat_tensor(const RotationField& field, const Vec3& x);

/// (permute_A(A))_{ijk} = A_{ikj}; maps k_hat onto k_full.
ThirdOrder3x9 permute_A(const ThirdOrder3x9& a);

CurvatureSet curvature_measures(const RotationField& field, const Vec3& x);

}  // namespace cosserat
