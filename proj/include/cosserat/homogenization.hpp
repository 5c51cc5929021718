#pragma once

#include "cosserat/energy.hpp"
#include "cosserat/geometry.hpp"
#include "cosserat/rotation_field.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Membrane strain E = (Q^T Dm - Dy0 | 0) [D Theta(0)]^-1. Satisfies
/// E n0 = 0 by construction.
struct MembraneStrain {
  Mat3 value;
};

/// Bending strain K = (g1 | g2 | 0) [D Theta]^-1 with g_i the wryness
/// columns of the midsurface rotation. K n0 = 0; K is generally not
/// symmetric. The metric factor is D Theta(0) for the fully reduced
/// tensor and D Theta(x3) for the per-thickness variant.
struct BendingStrain {
  Mat3 value;
};

MembraneStrain membrane_strain(const Mat3& qe0, const Mat32& dm, const SurfaceFrame& frame);

BendingStrain bending_strain(const Vec3& gamma1, const Vec3& gamma2, const Mat3& dtheta_inv);

/// Minimizer of the membrane density over the transverse director:
/// d* = (1 - lambda/(2mu+lambda) tr E) Q n0 + (mu_c-mu)/(mu_c+mu) Q E^T n0.
/// Pass qe0 = I to get the director in the back-rotated frame.
Vec3 optimal_director(const MembraneStrain& e, const SurfaceFrame& frame,
                      const MaterialParams& p, const Mat3& qe0 = Mat3::Identity());

/// Homogenized membrane density
///   mu ||sym E_par||^2 + mu_c ||skew E_par||^2
///   + lambda mu/(lambda+2mu) [tr E_par]^2 + 2 mu mu_c/(mu_c+mu) ||E^T n0||^2.
EnergyBreakdown membrane_energy_hom(const MembraneStrain& e, const SurfaceFrame& frame,
                                    const MaterialParams& p);

/// Minimizer of the curvature density over the skew completion:
/// c* = (b2-b1)/(b1+b2) K^T n0 - b3/(b1+b3) tr(K) n0.
Vec3 optimal_curvature_completion(const BendingStrain& k, const SurfaceFrame& frame,
                                  const MaterialParams& p);

/// Homogenized curvature density in decomposed form:
///   mu L_c^2 (b1 ||sym K_par||^2 + b2 ||skew K_par||^2
///             + b1 b3/(b1+b3) [tr K_par]^2 + 2 b1 b2/(b1+b2) ||K_perp||^2).
EnergyBreakdown curvature_energy_hom(const BendingStrain& k, const SurfaceFrame& frame,
                                     const MaterialParams& p);

/// The same value before the tangent/normal split:
///   mu L_c^2 (b1 ||sym K||^2 + b2 ||skew K||^2
///             - (b1-b2)^2/(2(b1+b2)) ||K^T n0||^2 + b1 b3/(b1+b3) [tr K]^2).
double curvature_energy_hom_undecomposed(const BendingStrain& k, const SurfaceFrame& frame,
                                         const MaterialParams& p);

/// Flat specialization; gamma0 must have a zero third column. Agrees
/// bit-for-bit with curvature_energy_hom on the plane frame.
EnergyBreakdown curvature_energy_hom_plate(const Mat3& gamma0, const MaterialParams& p);

/// Midsurface deformation with an analytic 3x2 jacobian.
struct DeformationField {
  std::function<Vec3(const Vec2&)> value;
  std::function<Mat32(const Vec2&)> jacobian;

  static DeformationField from_surface(const Surface& s);
};

/// Assembles both shell strain tensors from midsurface fields. The
/// rotation field is evaluated at (x1, x2, 0).
std::pair<MembraneStrain, BendingStrain> assemble_strains(const DeformationField& m,
                                                          const RotationField& qe0,
                                                          const Surface& s, const Vec2& x);

}  // namespace cosserat
