#include "cosserat/energy.hpp"

#include <stdexcept>
#include <string>

namespace cosserat {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive, got " +
                                std::to_string(v));
  }
}

}  // namespace

MaterialParams MaterialParams::make(double mu, double lambda, double mu_c, double L_c, double b1,
                                    double b2, double b3) {
  MaterialParams p;
  p.mu = mu;
  p.lambda = lambda;
  p.mu_c = mu_c;
  p.L_c = L_c;
  p.b1 = b1;
  p.b2 = b2;
  p.b3 = b3;
  p.kappa = (2.0 * mu + 3.0 * lambda) / 3.0;
  p.a1 = b1;
  p.a2 = b2;
  p.a3 = devsym_trace_weight(b1, b3);
  require_positive(p.mu, "mu");
  require_positive(p.kappa, "kappa");
  require_positive(p.mu_c, "mu_c");
  require_positive(p.L_c, "L_c");
  require_positive(p.b1, "b1");
  require_positive(p.b2, "b2");
  require_positive(p.b3, "b3");
  return p;
}

EnergyBreakdown w_mp(const Mat3& u, const MaterialParams& p) {
  const Mat3 e = u - Mat3::Identity();
  const double tr = sym(e).trace();
  return make_breakdown(p.mu * dev_sym(e).squaredNorm(), p.mu_c * skew(e).squaredNorm(),
                        0.5 * p.kappa * tr * tr);
}

EnergyBreakdown w_curv_gamma(const Mat3& gamma, const MaterialParams& p) {
  const double s = p.curvature_scale();
  const double tr = gamma.trace();
  return make_breakdown(s * p.b1 * sym(gamma).squaredNorm(),
                        s * p.b2 * skew(gamma).squaredNorm(), s * p.b3 * tr * tr);
}

EnergyBreakdown w_curv_alpha(const Mat3& alpha, const MaterialParams& p) {
  const double s = p.curvature_scale();
  const double tr = alpha.trace();
  return make_breakdown(s * p.b1 * sym(alpha).squaredNorm(),
                        s * p.b2 * skew(alpha).squaredNorm(),
                        s * 0.25 * (p.b3 - p.b1) * tr * tr);
}

EnergyBreakdown w_curv_devsym(const Mat3& gamma, const MaterialParams& p) {
  const double s = p.curvature_scale();
  const double tr = gamma.trace();
  return make_breakdown(s * p.a1 * dev_sym(gamma).squaredNorm(),
                        s * p.a2 * skew(gamma).squaredNorm(), s * p.a3 * tr * tr);
}

double w_curv_khat(const ThirdOrder3x9& k_hat, double w1, double w2, double w3,
                   const MaterialParams& p) {
  double tr2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double t = k_hat.block(k).trace();
    tr2 += t * t;
  }
  const double scale = p.mu * p.L_c * p.L_c / 12.0;
  return scale * (w1 * k_hat.sym_blocks().squared_norm() +
                  w2 * k_hat.skew_blocks().squared_norm() + w3 * tr2);
}

double w_curv_khat_isotropic(const ThirdOrder3x9& k_hat, const MaterialParams& p) {
  return w_curv_gamma(k_hat.permute_last_two().axial_columns(), p).total;
}

}  // namespace cosserat
