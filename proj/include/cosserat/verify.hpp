#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/geometry.hpp"
#include "cosserat/homogenization.hpp"
#include "cosserat/rng.hpp"

namespace cosserat::verify {

struct Options {
  std::uint64_t seed = 42;
  long instances = 1000;
  double tol = 1e-10;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;  // worst residual seen, suite-specific metric
  double tolerance = 0.0;
  long count = 0;
  std::string detail;
};

/// One random midsurface frame drawn from the plane / cylinder / sphere
/// pool, together with its surface (kept alive for thickness evaluations).
struct FrameInstance {
  Surface surface;
  Vec2 x;
  SurfaceFrame frame;
};
FrameInstance random_frame(Rng& rng);

/// Parameters with mu, lambda, mu_c, L_c, b1..b3 log-uniform in [0.1, 10].
MaterialParams random_params(Rng& rng);

SuiteResult nye_identities(std::uint64_t seed, long n);
SuiteResult w_mp_form_equality(std::uint64_t seed, long n);
SuiteResult curvature_form_equivalence(std::uint64_t seed, long n);
SuiteResult khat_isotropic_equivalence(std::uint64_t seed, long n);
SuiteResult coefficient_adjudication(std::uint64_t seed, long n);
SuiteResult curved_curvature_vs_oracle(std::uint64_t seed, long n, double tol);
SuiteResult flat_curvature_vs_oracle(std::uint64_t seed, long n, double tol);
SuiteResult membrane_vs_oracle(std::uint64_t seed, long n, double tol);
SuiteResult per_thickness_membrane_consistency(std::uint64_t seed, long n, double tol);
SuiteResult oracle_cross_check(std::uint64_t seed, long n);
SuiteResult invariance_suite(std::uint64_t seed, long n);
SuiteResult flat_corollary_bitwise(std::uint64_t seed, long n);
SuiteResult degenerate_parameter_error_path();
SuiteResult tampered_formula_detected(std::uint64_t seed, long n);

/// Every suite at the configured sizes, in a fixed deterministic order.
std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace cosserat::verify
