#include "cosserat/homogenization.hpp"

#include <stdexcept>

#include "cosserat/curvature.hpp"

namespace cosserat {

MembraneStrain membrane_strain(const Mat3& qe0, const Mat32& dm, const SurfaceFrame& frame) {
  Mat3 cols = Mat3::Zero();
  cols.leftCols<2>() = qe0.transpose() * dm - frame.dy0;
  return MembraneStrain{cols * frame.dtheta0_inv};
}

BendingStrain bending_strain(const Vec3& gamma1, const Vec3& gamma2, const Mat3& dtheta_inv) {
  return BendingStrain{from_columns(gamma1, gamma2, Vec3::Zero()) * dtheta_inv};
}

Vec3 optimal_director(const MembraneStrain& e, const SurfaceFrame& frame,
                      const MaterialParams& p, const Mat3& qe0) {
  const double trace_gain = 1.0 - p.lambda / (2.0 * p.mu + p.lambda) * e.value.trace();
  const double shear_gain = (p.mu_c - p.mu) / (p.mu_c + p.mu);
  return trace_gain * (qe0 * frame.n0) + shear_gain * (qe0 * (e.value.transpose() * frame.n0));
}

EnergyBreakdown membrane_energy_hom(const MembraneStrain& e, const SurfaceFrame& frame,
                                    const MaterialParams& p) {
  const auto [par, perp] = decompose_tangent_normal(e.value, frame);
  const double tr = par.trace();
  return make_breakdown(p.mu * sym(par).squaredNorm(), p.mu_c * skew(par).squaredNorm(),
                        p.lambda * p.mu / (p.lambda + 2.0 * p.mu) * tr * tr,
                        2.0 * p.mu * p.mu_c / (p.mu_c + p.mu) *
                            (e.value.transpose() * frame.n0).squaredNorm());
}

Vec3 optimal_curvature_completion(const BendingStrain& k, const SurfaceFrame& frame,
                                  const MaterialParams& p) {
  return (p.b2 - p.b1) / (p.b1 + p.b2) * (k.value.transpose() * frame.n0) -
         p.b3 / (p.b1 + p.b3) * k.value.trace() * frame.n0;
}

namespace {

/// Shared final combination; both the curved and the plate entry point
/// feed it the same raw sums so the flat specialization is bit-identical.
EnergyBreakdown curvature_hom_from_projector(const Mat3& k, const Mat3& projector,
                                             const MaterialParams& p) {
  const Mat3 par = projector * k;
  const Mat3 perp = (Mat3::Identity() - projector) * k;
  const double s = p.curvature_scale();
  const double tr = par.trace();
  return make_breakdown(s * p.b1 * sym(par).squaredNorm(), s * p.b2 * skew(par).squaredNorm(),
                        s * (p.b1 * p.b3 / (p.b1 + p.b3)) * tr * tr,
                        s * (2.0 * p.b1 * p.b2 / (p.b1 + p.b2)) * perp.squaredNorm());
}

}  // namespace

EnergyBreakdown curvature_energy_hom(const BendingStrain& k, const SurfaceFrame& frame,
                                     const MaterialParams& p) {
  return curvature_hom_from_projector(k.value, frame.tangential_projector, p);
}

double curvature_energy_hom_undecomposed(const BendingStrain& k, const SurfaceFrame& frame,
                                         const MaterialParams& p) {
  const double s = p.curvature_scale();
  const double tr = k.value.trace();
  const double kt_n0 = (k.value.transpose() * frame.n0).squaredNorm();
  const double b12 = p.b1 - p.b2;
  return s * (p.b1 * sym(k.value).squaredNorm() + p.b2 * skew(k.value).squaredNorm() -
              b12 * b12 / (2.0 * (p.b1 + p.b2)) * kt_n0 +
              p.b1 * p.b3 / (p.b1 + p.b3) * tr * tr);
}

EnergyBreakdown curvature_energy_hom_plate(const Mat3& gamma0, const MaterialParams& p) {
  if (gamma0.col(2).norm() != 0.0) {
    throw std::invalid_argument("plate curvature strain must have a zero third column");
  }
  Mat3 projector = Mat3::Zero();
  projector(0, 0) = 1.0;
  projector(1, 1) = 1.0;
  return curvature_hom_from_projector(gamma0, projector, p);
}

DeformationField DeformationField::from_surface(const Surface& s) {
  DeformationField f;
  f.value = [s](const Vec2& x) { return s.position(x); };
  f.jacobian = [s](const Vec2& x) { return s.jacobian(x); };
  return f;
}

std::pair<MembraneStrain, BendingStrain> assemble_strains(const DeformationField& m,
                                                          const RotationField& qe0,
                                                          const Surface& s, const Vec2& x) {
  const SurfaceFrame frame = s.frame_at(x);
  const Vec3 x3d(x[0], x[1], 0.0);
  const Mat3 q = qe0(x3d);
  const Mat3 qt = q.transpose();
  const Vec3 g1 = skew_of(qt * qe0.derivative(x3d, 0)).axial();
  const Vec3 g2 = skew_of(qt * qe0.derivative(x3d, 1)).axial();
  return {membrane_strain(q, m.jacobian(x), frame),
          bending_strain(g1, g2, frame.dtheta0_inv)};
}

}  // namespace cosserat
