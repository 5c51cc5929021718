// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosserat/thin_limit.hpp"
#include "cosserat/verify.hpp"

namespace fs = std::filesystem;
using namespace cosserat;

namespace {

int g_failures = 0;

void report(int criterion, bool passed, const std::string& what) {
  if (!passed) ++g_failures;
  std::printf("[%s] criterion %2d: %s\n", passed ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe(const verify::SuiteResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s: worst %.3e vs tol %.3e over %ld instances", r.name.c_str(),
                r.worst, r.tolerance, r.count);
  return buf;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }
  const std::uint64_t seed = 42;

  // 1. Curved curvature homogenization against the quadratic oracle.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const verify::SuiteResult r = verify::curved_curvature_vs_oracle(seed, 1000, 1e-10);
    const double elapsed = seconds_since(t0);
    report(1, r.passed && elapsed <= 10.0,
           describe(r) + ", " + std::to_string(elapsed) + " s (budget 10 s)");
  }

  // 2. Flat curvature homogenization, including the worked value 4.
  {
    const verify::SuiteResult r = verify::flat_curvature_vs_oracle(seed, 1000, 1e-10);
    report(2, r.passed, describe(r) + "; " + r.detail);
  }

  // 3. Membrane homogenization and the optimal director.
  {
    const verify::SuiteResult r = verify::membrane_vs_oracle(seed, 1000, 1e-10);
    report(3, r.passed, describe(r));
  }

  // 4. Per-thickness membrane minimum at the midsurface equals the
  // reduced closed form.
  {
    const verify::SuiteResult r = verify::per_thickness_membrane_consistency(seed, 200, 1e-10);
    report(4, r.passed, describe(r));
  }

  // 5. Nye conversions and the five correspondences.
  {
    const verify::SuiteResult r = verify::nye_identities(seed, 1000);
    report(5, r.passed, describe(r));
  }

  // 6. Quadratic curvature energy agrees across its representations.
  {
    const verify::SuiteResult a = verify::curvature_form_equivalence(seed, 1000);
    const verify::SuiteResult b = verify::khat_isotropic_equivalence(seed, 100);
    report(6, a.passed && b.passed, describe(a) + "; " + describe(b));
  }

  // 7. Coefficient adjudication: exactly one candidate per identity.
  {
    const verify::SuiteResult r = verify::coefficient_adjudication(seed, 1000);
    report(7, r.passed, r.detail);
  }

  // 8. Invariance: frame indifference, conjugation isotropy, and the
  // directional anisotropy witness.
  {
    const verify::SuiteResult r = verify::invariance_suite(seed, 100);
    report(8, r.passed, describe(r) + "; " + r.detail);
  }

  // 9. Flat specialization is bit-identical to the curved formula.
  {
    const verify::SuiteResult r = verify::flat_corollary_bitwise(seed, 1000);
    report(9, r.passed, describe(r));
  }

  // 10. Thin-limit convergence for the three documented midsurface states.
  {
    const MaterialParams p = MaterialParams::make(1, 1, 1, 1, 2.0, 0.5, 1.0);
    const std::vector<double> h_list{0.2, 0.1, 0.05, 0.025, 0.0125};
    bool all_passed = true;
    std::string detail;
    for (const std::string& name : documented_ansatz_names()) {
      const auto t0 = std::chrono::steady_clock::now();
      const AnsatzCase c = documented_ansatz(name);
      const ConvergenceStudy study = convergence_study(c.ansatz, p, c.surface, h_list);
      const double elapsed = seconds_since(t0);
      const bool ok = study.monotone && study.slope >= 1.0 && elapsed <= 60.0;
      all_passed = all_passed && ok;
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s[%s slope %.2f monotone %d %.1f s]", detail.empty() ? "" : " ",
                    name.c_str(), study.slope, study.monotone ? 1 : 0, elapsed);
      detail += buf;
    }
    report(10, all_passed, detail);
  }

  // 11. Byte-identical verification reports across two runs.
  {
    bool ok = false;
    std::string detail;
    if (cli_path.empty()) {
      detail = "no --cli path given";
    } else {
      const fs::path base = fs::temp_directory_path() / "cosserat_acceptance";
      fs::remove_all(base);
      fs::create_directories(base);
      const std::string common = "\"" + cli_path + "\" verify --seed 7 --instances 50";
      const std::string run1 =
          common + " --out \"" + (base / "a").string() + "\" > /dev/null 2>&1";
      const std::string run2 =
          common + " --out \"" + (base / "b").string() + "\" > /dev/null 2>&1";
      const int rc1 = std::system(run1.c_str());
      const int rc2 = std::system(run2.c_str());
      const std::string report_a = read_file(base / "a" / "report.jsonl");
      const std::string report_b = read_file(base / "b" / "report.jsonl");
      ok = rc1 == 0 && rc2 == 0 && !report_a.empty() && report_a == report_b;
      detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) + ", " +
               std::to_string(report_a.size()) + " bytes" + (ok ? ", identical" : ", MISMATCH");
      fs::remove_all(base);
    }
    report(11, ok, detail);
  }

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
