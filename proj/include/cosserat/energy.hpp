#pragma once

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Isotropic material constants. kappa is derived, a1..a3 are the
/// dev-sym-form curvature weights equivalent to b1..b3.
struct MaterialParams {
  double mu = 1.0;      // shear modulus
  double lambda = 1.0;  // Lame-type constant
  double mu_c = 1.0;    // couple modulus
  double kappa = 5.0 / 3.0;
  double L_c = 1.0;  // internal length
  double b1 = 1.0, b2 = 1.0, b3 = 1.0;
  double a1 = 1.0, a2 = 1.0, a3 = 4.0 / 3.0;

  /// Validates mu, kappa, mu_c, L_c, b1..b3 > 0 and derives the rest.
  static MaterialParams make(double mu, double lambda, double mu_c, double L_c, double b1,
                             double b2, double b3);

  double curvature_scale() const { return mu * L_c * L_c; }
};

/// The dev-sym-form trace weight matching b1 ||sym G||^2 + b3 tr(G)^2.
inline double devsym_trace_weight(double b1, double b3) { return (b1 + 3.0 * b3) / 3.0; }

struct EnergyBreakdown {
  double sym_term = 0.0;
  double skew_term = 0.0;
  double trace_term = 0.0;
  double normal_term = 0.0;  // used by the homogenized densities only
  double total = 0.0;
};

inline EnergyBreakdown make_breakdown(double s, double k, double t, double n = 0.0) {
  return EnergyBreakdown{s, k, t, n, s + k + t + n};
}

/// mu ||dev sym(U-I)||^2 + mu_c ||skew(U-I)||^2 + kappa/2 [tr(U-I)]^2.
/// Identical to the (mu sym, lambda/2 tr^2) form since kappa = (2mu+3lambda)/3.
EnergyBreakdown w_mp(const Mat3& u, const MaterialParams& p);

/// mu L_c^2 (b1 ||sym G||^2 + b2 ||skew G||^2 + b3 [tr G]^2).
EnergyBreakdown w_curv_gamma(const Mat3& gamma, const MaterialParams& p);

/// Same energy expressed in the dislocation density:
/// mu L_c^2 (b1 ||sym a||^2 + b2 ||skew a||^2 + (b3-b1)/4 [tr a]^2).
/// The trace weight (b3-b1)/4 is the one that reproduces w_curv_gamma
/// exactly under a = nye_gamma_to_alpha(G); b3/4 does not (the residual is
/// b1 tr(G)^2 — see the coefficient probes in the verify suites).
EnergyBreakdown w_curv_alpha(const Mat3& alpha, const MaterialParams& p);

/// mu L_c^2 (a1 ||dev sym G||^2 + a2 ||skew G||^2 + a3 [tr G]^2).
EnergyBreakdown w_curv_devsym(const Mat3& gamma, const MaterialParams& p);

/// Direction-wise quadratic form on the bending tensor:
/// mu L_c^2/12 (w1 ||sym K^||^2 + w2 ||skew K^||^2 + w3 sum_k tr(K^.e_k)^2)
/// with block-wise sym/skew/trace sums. Not isotropic.
double w_curv_khat(const ThirdOrder3x9& k_hat, double w1, double w2, double w3,
                   const MaterialParams& p);

/// Isotropic quadratic form on K^: evaluates w_curv_gamma on the axial
/// columns of permute_A(K^).
double w_curv_khat_isotropic(const ThirdOrder3x9& k_hat, const MaterialParams& p);

}  // namespace cosserat
