#include "cosserat/thin_limit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cosserat/curvature.hpp"

namespace cosserat {

namespace {

Vec3 wryness_column(const RotationField& rot, const Vec3& x, int i) {
  return skew_of(rot(x).transpose() * rot.derivative(x, i)).axial();
}

/// Transverse director of the recovery deformation at a midsurface point.
Vec3 director_at(const AnsatzPair& a, const MaterialParams& p, const Surface& s,
                 const Vec2& x) {
  if (a.director == DirectorMode::none) return Vec3::Zero();
  const SurfaceFrame frame = s.frame_at(x);
  const Vec3 x0(x[0], x[1], 0.0);
  const Mat3 q = a.rotation(x0);
  if (a.director == DirectorMode::rotated_normal) return q * frame.n0;
  const MembraneStrain e = membrane_strain(q, a.m.jacobian(x), frame);
  return optimal_director(e, frame, p, q);
}

/// Completion column of the recovery rotation at a midsurface point.
Vec3 completion_at(const AnsatzPair& a, const MaterialParams& p, const Surface& s,
                   const Vec2& x) {
  if (!a.completion_correction) return Vec3::Zero();
  const SurfaceFrame frame = s.frame_at(x);
  const Vec3 x0(x[0], x[1], 0.0);
  const Vec3 g1 = wryness_column(a.rotation, x0, 0);
  const Vec3 g2 = wryness_column(a.rotation, x0, 1);
  const BendingStrain k = bending_strain(g1, g2, frame.dtheta0_inv);
  return optimal_curvature_completion(k, frame, p);
}

struct PlaneSample {
  SurfaceFrame frame;
  Mat3 q0;
  Mat3 dq0_1, dq0_2;
  Mat32 dm;
  // Index 0 is the center; 1..4 are the +e1, -e1, +e2, -e2 stencil points.
  std::array<Vec3, 5> d;
  std::array<Vec3, 5> c;
  double step;
};

PlaneSample sample_plane_point(const AnsatzPair& a, const MaterialParams& p, const Surface& s,
                               const Vec2& x) {
  PlaneSample ps;
  ps.frame = s.frame_at(x);
  const Vec3 x0(x[0], x[1], 0.0);
  ps.q0 = a.rotation(x0);
  ps.dq0_1 = a.rotation.derivative(x0, 0);
  ps.dq0_2 = a.rotation.derivative(x0, 1);
  ps.dm = a.m.jacobian(x);
  ps.step = a.fd_step;
  const std::array<Vec2, 5> stencil = {x, Vec2(x[0] + ps.step, x[1]),
                                       Vec2(x[0] - ps.step, x[1]), Vec2(x[0], x[1] + ps.step),
                                       Vec2(x[0], x[1] - ps.step)};
  for (std::size_t i = 0; i < stencil.size(); ++i) {
    ps.d[i] = director_at(a, p, s, stencil[i]);
    ps.c[i] = completion_at(a, p, s, stencil[i]);
  }
  return ps;
}

double node_integrand(const PlaneSample& ps, double h, double eta3,
                      const MaterialParams& p, const Surface& s, const Vec2& x) {
  const double x3 = h * eta3;
  const Mat3 dtheta = s.dtheta_thick(x, x3);
  const Mat3 dtheta_inv = dtheta.inverse();

  const Vec3 d1 = (ps.d[1] - ps.d[2]) / (2.0 * ps.step);
  const Vec3 d2 = (ps.d[3] - ps.d[4]) / (2.0 * ps.step);
  Mat3 f;  // scaled deformation gradient, third column is (1/h) d_eta3 phi
  f.col(0) = ps.dm.col(0) + x3 * d1;
  f.col(1) = ps.dm.col(1) + x3 * d2;
  f.col(2) = ps.d[0];

  const Mat3 twist = rotation_exp(x3 * ps.c[0]);
  const Mat3 q = ps.q0 * twist;
  const Mat3 u = q.transpose() * f * dtheta_inv;

  // In-plane derivatives of Q0(x) exp(anti(x3 c(x))) by the product rule;
  // the twist factor is differenced through c.
  const Mat3 dtwist_1 = (rotation_exp(x3 * ps.c[1]) - rotation_exp(x3 * ps.c[2])) / (2.0 * ps.step);
  const Mat3 dtwist_2 = (rotation_exp(x3 * ps.c[3]) - rotation_exp(x3 * ps.c[4])) / (2.0 * ps.step);
  const Mat3 dq_1 = ps.dq0_1 * twist + ps.q0 * dtwist_1;
  const Mat3 dq_2 = ps.dq0_2 * twist + ps.q0 * dtwist_2;

  const Vec3 g1 = skew_of(q.transpose() * dq_1).axial();
  const Vec3 g2 = skew_of(q.transpose() * dq_2).axial();
  // (1/h) axl(Q^T d_eta3 Q) = c exactly for the synthesized twist.
  const Mat3 gamma = from_columns(g1, g2, ps.c[0]) * dtheta_inv;

  return (w_mp(u, p).total + w_curv_gamma(gamma, p).total) * dtheta.determinant();
}

double rescaled_energy_once(const AnsatzPair& a, double h, const MaterialParams& p,
                            const Surface& s, int n_plane, int n_thickness) {
  const QuadratureGrid grid = QuadratureGrid::box(s.domain(), n_plane, n_thickness);
  double integral = 0.0;
  double last_x1 = std::nan(""), last_x2 = std::nan("");
  PlaneSample ps;
  for (const auto& node : grid.nodes) {
    const Vec2 x(node.point[0], node.point[1]);
    if (x[0] != last_x1 || x[1] != last_x2) {  // thickness nodes iterate fastest
      ps = sample_plane_point(a, p, s, x);
      last_x1 = x[0];
      last_x2 = x[1];
    }
    integral += node.weight * h * node_integrand(ps, h, node.point[2], p, s, x);
  }
  return integral / h;
}

}  // namespace

double rescaled_energy(const AnsatzPair& a, double h, const MaterialParams& p, const Surface& s,
                       const QuadSpec& quad) {
  if (!(h > 0.0)) throw std::invalid_argument("thickness h must be positive");
  const double coarse = rescaled_energy_once(a, h, p, s, quad.n_plane, quad.n_thickness);
  if (!quad.richardson_check) return coarse;
  const double fine = rescaled_energy_once(a, h, p, s, 2 * quad.n_plane, 2 * quad.n_thickness);
  if (!(std::abs(fine - coarse) <= quad.richardson_tol * (1.0 + std::abs(fine)))) {
    throw std::runtime_error("quadrature under-resolution: refining the rule moved the value by " +
                             std::to_string(std::abs(fine - coarse)));
  }
  return fine;
}

double gamma_limit_value(const AnsatzPair& a, const MaterialParams& p, const Surface& s,
                         int n_plane) {
  const QuadratureGrid2D grid = QuadratureGrid2D::rect(s.domain(), n_plane);
  double integral = 0.0;
  for (const auto& node : grid.nodes) {
    const SurfaceFrame frame = s.frame_at(node.point);
    const Vec3 x0(node.point[0], node.point[1], 0.0);
    const Mat3 q = a.rotation(x0);
    const MembraneStrain e = membrane_strain(q, a.m.jacobian(node.point), frame);
    const Vec3 g1 = wryness_column(a.rotation, x0, 0);
    const Vec3 g2 = wryness_column(a.rotation, x0, 1);
    const BendingStrain k = bending_strain(g1, g2, frame.dtheta0_inv);
    integral += node.weight *
                (membrane_energy_hom(e, frame, p).total + curvature_energy_hom(k, frame, p).total) *
                frame.surface_element;
  }
  return integral;
}

AnsatzCase documented_ansatz(const std::string& name) {
  if (name == "flat_shear") {
    AnsatzCase c{name, Surface::plane(), AnsatzPair{}};
    c.ansatz.m = DeformationField::from_surface(c.surface);
    c.ansatz.rotation = RotationField::exp_affine(Vec3::UnitZ(), 0.0, Vec3(0.5, 0.0, 0.0));
    return c;
  }
  if (name == "cylinder_identity") {
    const double r = 2.0;
    AnsatzCase c{name, Surface::cylinder(r), AnsatzPair{}};
    c.ansatz.m = DeformationField::from_surface(c.surface);
    // The surface frame of the cylinder is itself a rotation field.
    auto eval = [r](const Vec3& x) {
      const double a1 = x[0] / r;
      return from_columns(Vec3(-std::sin(a1), std::cos(a1), 0.0), Vec3(0.0, 0.0, 1.0),
                          Vec3(std::cos(a1), std::sin(a1), 0.0));
    };
    auto deriv = [r](const Vec3& x, int i) -> Mat3 {
      if (i != 0) return Mat3::Zero();
      const double a1 = x[0] / r;
      return from_columns(Vec3(-std::cos(a1) / r, -std::sin(a1) / r, 0.0), Vec3::Zero(),
                          Vec3(-std::sin(a1) / r, std::cos(a1) / r, 0.0));
    };
    c.ansatz.rotation = RotationField::analytic(eval, deriv);
    return c;
  }
  if (name == "sphere_rotation") {
    AnsatzCase c{name, Surface::sphere(2.0), AnsatzPair{}};
    c.ansatz.m = DeformationField::from_surface(c.surface);
    c.ansatz.rotation = RotationField::exp_affine(Vec3::UnitX(), 0.0, Vec3(0.0, 0.4, 0.0));
    return c;
  }
  throw std::invalid_argument("unknown ansatz '" + name +
                              "'; expected flat_shear, cylinder_identity or sphere_rotation");
}

std::vector<std::string> documented_ansatz_names() {
  return {"flat_shear", "cylinder_identity", "sphere_rotation"};
}

ConvergenceStudy convergence_study(const AnsatzPair& a, const MaterialParams& p,
                                   const Surface& s, const std::vector<double>& h_list,
                                   const QuadSpec& quad) {
  if (h_list.size() < 4) throw std::invalid_argument("convergence study needs >= 4 thicknesses");
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (!(h_list[i] < h_list[i - 1])) {
      throw std::invalid_argument("h_list must be strictly decreasing");
    }
  }
  const double limit = gamma_limit_value(a, p, s, 2 * quad.n_plane);
  ConvergenceStudy study;
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    ConvergenceRow row;
    row.h = h_list[i];
    row.energy = rescaled_energy(a, row.h, p, s, quad);
    row.limit = limit;
    row.abs_err = std::abs(row.energy - limit);
    row.rate = std::numeric_limits<double>::quiet_NaN();
    if (i > 0) {
      const ConvergenceRow& prev = study.rows.back();
      if (row.abs_err > 0.0 && prev.abs_err > 0.0) {
        row.rate = std::log(prev.abs_err / row.abs_err) / std::log(prev.h / row.h);
      }
      if (row.abs_err > prev.abs_err) study.monotone = false;
    }
    study.rows.push_back(row);
  }
  // Least-squares slope of log(err) against log(h).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const auto& row : study.rows) {
    if (!(row.abs_err > 0.0)) continue;
    const double lx = std::log(row.h), ly = std::log(row.abs_err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  study.slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  return study;
}

}  // namespace cosserat
