#pragma once

#include <string>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/geometry.hpp"
#include "cosserat/homogenization.hpp"
#include "cosserat/quadrature.hpp"
#include "cosserat/rotation_field.hpp"

namespace cosserat {

enum class DirectorMode {
  none,            // phi = m, constant through the thickness
  rotated_normal,  // d = Q0 n0
  optimal,         // d from the membrane minimizer
};

/// Midsurface deformation/rotation pair plus the thickness behaviour of
/// the synthesized three-dimensional fields:
///   phi(eta)  = m(x) + h eta3 d(x),
///   Q(eta)    = Q0(x) exp(anti(h eta3 c(x))),
/// where c is zero (completion_correction = false) or the optimal
/// curvature completion. The optimal director together with the
/// completion is what makes the rescaled slab energy converge to the
/// reduced limit energy; without them it converges to the value of the
/// unminimized densities.
struct AnsatzPair {
  DeformationField m;
  RotationField rotation;  // evaluated at (x1, x2, 0)
  DirectorMode director = DirectorMode::optimal;
  bool completion_correction = true;
  double fd_step = 1e-4;  // in-plane differencing of the correction fields

  bool depends_on_eta3() const {
    return director != DirectorMode::none || completion_correction;
  }
};

struct QuadSpec {
  int n_plane = 4;
  int n_thickness = 4;
  bool richardson_check = true;
  double richardson_tol = 1e-6;
};

/// Rescaled slab energy (1/h) I_h: integral over omega x [-1/2, 1/2] of
/// [W_mp(U) + W_curv(G)] det DTheta(h eta3). The plane surface reduces to
/// the flat functional (unit metric, identity inverse).
double rescaled_energy(const AnsatzPair& a, double h, const MaterialParams& p, const Surface& s,
                       const QuadSpec& quad = QuadSpec{});

/// Limit functional: integral over omega of the homogenized membrane and
/// curvature densities times the surface element.
double gamma_limit_value(const AnsatzPair& a, const MaterialParams& p, const Surface& s,
                         int n_plane = 4);

struct ConvergenceRow {
  double h;
  double energy;  // (1/h) I_h
  double limit;   // limit value
  double abs_err;
  double rate;  // local log-log rate, NaN on the first row
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  double slope = 0.0;  // least-squares slope of log err vs log h
  bool monotone = true;
};

/// Named midsurface states driving the convergence studies and the CLI:
/// a sheared plate, a cylinder carrying its own frame rotation, and a
/// rotated sphere patch.
struct AnsatzCase {
  std::string name;
  Surface surface;
  AnsatzPair ansatz;
};

AnsatzCase documented_ansatz(const std::string& name);
std::vector<std::string> documented_ansatz_names();

/// h_list must be strictly decreasing with at least 4 entries.
ConvergenceStudy convergence_study(const AnsatzPair& a, const MaterialParams& p,
                                   const Surface& s, const std::vector<double>& h_list,
                                   const QuadSpec& quad = QuadSpec{});

}  // namespace cosserat
