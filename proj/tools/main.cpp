#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cosserat/config.hpp"
#include "cosserat/curvature.hpp"
#include "cosserat/homogenization.hpp"
#include "cosserat/report.hpp"
#include "cosserat/thin_limit.hpp"
#include "cosserat/verify.hpp"

namespace fs = std::filesystem;
using namespace cosserat;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<long> instances;
  std::optional<double> tol;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
  auto* opt = cmd->add_option("--config", args.config_path, "JSON configuration file");
  if (config_required) opt->required();
  cmd->add_option("--out", args.out_dir, "output directory for report.jsonl and tables/");
  cmd->add_option("--seed", args.seed, "override the verification seed");
  cmd->add_option("--instances", args.instances, "override the instance count");
  cmd->add_option("--tol", args.tol, "override the oracle comparison tolerance");
}

RunConfig load(const CommonArgs& args) {
  std::string text = "{}";
  if (!args.config_path.empty()) {
    std::ifstream f(args.config_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file '" + args.config_path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  RunConfig cfg = parse_config(text);
  // CLI overrides are part of the effective configuration, so they feed
  // the hash carried by every record.
  std::string effective = text;
  if (args.seed) {
    cfg.verify_opts.seed = *args.seed;
    effective += "\n--seed=" + std::to_string(*args.seed);
  }
  if (args.instances) {
    if (*args.instances < 1) throw ConfigError("--instances must be >= 1");
    cfg.verify_opts.instances = *args.instances;
    effective += "\n--instances=" + std::to_string(*args.instances);
  }
  if (args.tol) {
    if (!(*args.tol > 0.0)) throw ConfigError("--tol must be positive");
    cfg.verify_opts.tol = *args.tol;
    effective += "\n--tol=" + format_sig17(*args.tol);
  }
  cfg.config_hash = hex16(fnv1a64(effective));
  return cfg;
}

void write_report(const CommonArgs& args, const std::vector<std::string>& lines) {
  fs::create_directories(args.out_dir);
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  write_text_file((fs::path(args.out_dir) / "report.jsonl").string(), out);
}

void add_breakdown(Record& rec, const std::string& prefix, const EnergyBreakdown& b) {
  rec.add(prefix + "_sym", b.sym_term)
      .add(prefix + "_skew", b.skew_term)
      .add(prefix + "_trace", b.trace_term)
      .add(prefix + "_normal", b.normal_term)
      .add(prefix + "_total", b.total);
}

void add_mat3(Record& rec, const std::string& prefix, const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      rec.add(prefix + "_" + std::to_string(i + 1) + std::to_string(j + 1), m(i, j));
    }
}

void add_vec3(Record& rec, const std::string& prefix, const Vec3& v) {
  rec.add(prefix + "_1", v[0]).add(prefix + "_2", v[1]).add(prefix + "_3", v[2]);
}

int cmd_energy(const CommonArgs& args) {
  const RunConfig cfg = load(args);
  if (!cfg.energy) throw ConfigError("config error: missing required block 'energy'");
  if (!cfg.surface) throw ConfigError("config error: missing required block 'surface'");
  const std::uint64_t seed = cfg.verify_opts.seed;
  const EnergyBlock& block = *cfg.energy;
  const RotationField& field = cfg.fields.at(block.field);

  std::vector<std::string> lines;
  lines.push_back(Record("meta", cfg.config_hash, seed)
                      .add("command", "energy")
                      .add("field", block.field)
                      .add("points", static_cast<long long>(block.points.size()))
                      .to_json());

  for (const Vec3& x : block.points) {
    const Mat3 gamma = wryness(field, x);
    const Mat3 alpha = nye_gamma_to_alpha(gamma);
    Record rec("curvature_point", cfg.config_hash, seed);
    rec.add("field", block.field);
    add_vec3(rec, "x", x);
    add_mat3(rec, "gamma", gamma);
    add_mat3(rec, "alpha", alpha);
    add_breakdown(rec, "w_gamma", w_curv_gamma(gamma, cfg.material));
    rec.add("w_alpha_total", w_curv_alpha(alpha, cfg.material).total);
    rec.add("w_devsym_total", w_curv_devsym(gamma, cfg.material).total);
    rec.add("w_khat_isotropic", w_curv_khat_isotropic(k_hat_tensor(field, x), cfg.material));
    lines.push_back(rec.to_json());

    if (block.homogenized) {
      const RotationField& rot = cfg.fields.at(block.rotation);
      const Vec2 xm(x[0], x[1]);
      const SurfaceFrame frame = cfg.surface->frame_at(xm);
      const auto [e, k] =
          assemble_strains(DeformationField::from_surface(*cfg.surface), rot, *cfg.surface, xm);
      Record hom("homogenized_point", cfg.config_hash, seed);
      add_vec3(hom, "x", x);
      add_breakdown(hom, "membrane", membrane_energy_hom(e, frame, cfg.material));
      add_breakdown(hom, "curvature", curvature_energy_hom(k, frame, cfg.material));
      add_vec3(hom, "director", optimal_director(e, frame, cfg.material, rot(Vec3(x[0], x[1], 0))));
      add_vec3(hom, "completion", optimal_curvature_completion(k, frame, cfg.material));
      lines.push_back(hom.to_json());
    }
  }

  if (block.plate_gamma) {
    Record rec("plate_energy", cfg.config_hash, seed);
    add_breakdown(rec, "plate", curvature_energy_hom_plate(*block.plate_gamma, cfg.material));
    lines.push_back(rec.to_json());
  }

  write_report(args, lines);
  return 0;
}

int cmd_verify(const CommonArgs& args) {
  const RunConfig cfg = load(args);
  const verify::Options& opt = cfg.verify_opts;

  std::vector<std::string> lines;
  lines.push_back(Record("meta", cfg.config_hash, opt.seed)
                      .add("command", "verify")
                      .add("instances", static_cast<long long>(opt.instances))
                      .add("tol", opt.tol)
                      .to_json());

  const std::vector<verify::SuiteResult> results = verify::run_all(opt);
  long failed = 0;
  std::vector<CsvRow> rows;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    lines.push_back(Record("suite", cfg.config_hash, opt.seed)
                        .add("name", r.name)
                        .add("passed", r.passed)
                        .add("worst", r.worst)
                        .add("tolerance", r.tolerance)
                        .add("count", static_cast<long long>(r.count))
                        .add("detail", r.detail)
                        .to_json());
    rows.push_back({r.name, r.passed ? "true" : "false", format_sig17(r.worst),
                    format_sig17(r.tolerance), std::to_string(r.count)});
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (worst " << r.worst
              << ", tol " << r.tolerance << ")\n";
  }
  lines.push_back(Record("summary", cfg.config_hash, opt.seed)
                      .add("passed", failed == 0)
                      .add("suites", static_cast<long long>(results.size()))
                      .add("failed", static_cast<long long>(failed))
                      .to_json());

  write_report(args, lines);
  fs::create_directories(fs::path(args.out_dir) / "tables");
  write_csv((fs::path(args.out_dir) / "tables" / "verify_suites.csv").string(),
            {"name", "passed", "worst", "tolerance", "count"}, rows);
  return failed == 0 ? 0 : 1;
}

int cmd_thinlimit(const CommonArgs& args) {
  const RunConfig cfg = load(args);
  if (!cfg.thinlimit) throw ConfigError("config error: missing required block 'thinlimit'");
  const ThinLimitBlock& block = *cfg.thinlimit;
  const std::uint64_t seed = cfg.verify_opts.seed;

  AnsatzCase c = documented_ansatz(block.ansatz);
  if (!block.corrections) {
    c.ansatz.director = DirectorMode::none;
    c.ansatz.completion_correction = false;
  }
  QuadSpec quad;
  quad.n_plane = block.n_plane;
  quad.n_thickness = block.n_thickness;

  const ConvergenceStudy study =
      convergence_study(c.ansatz, cfg.material, c.surface, block.h_list, quad);

  std::vector<std::string> lines;
  lines.push_back(Record("meta", cfg.config_hash, seed)
                      .add("command", "thinlimit")
                      .add("ansatz", block.ansatz)
                      .add("corrections", block.corrections)
                      .to_json());
  std::vector<CsvRow> rows;
  for (const auto& row : study.rows) {
    Record rec("thinlimit_row", cfg.config_hash, seed);
    rec.add("ansatz", block.ansatz)
        .add("h", row.h)
        .add("energy", row.energy)
        .add("limit", row.limit)
        .add("abs_err", row.abs_err);
    if (std::isfinite(row.rate)) rec.add("rate", row.rate);
    lines.push_back(rec.to_json());
    rows.push_back({format_sig17(row.h), format_sig17(row.energy), format_sig17(row.limit),
                    format_sig17(row.abs_err),
                    std::isfinite(row.rate) ? format_sig17(row.rate) : ""});
    std::cout << "h=" << row.h << " energy=" << row.energy << " limit=" << row.limit
              << " abs_err=" << row.abs_err << "\n";
  }
  lines.push_back(Record("thinlimit_fit", cfg.config_hash, seed)
                      .add("ansatz", block.ansatz)
                      .add("slope", study.slope)
                      .add("monotone", study.monotone)
                      .to_json());
  if (!study.monotone) {
    std::cout << "note: error sequence is not monotone\n";
  }
  std::cout << "log-log slope " << study.slope << "\n";

  write_report(args, lines);
  fs::create_directories(fs::path(args.out_dir) / "tables");
  write_csv((fs::path(args.out_dir) / "tables" / ("thinlimit_" + block.ansatz + ".csv")).string(),
            {"h", "energy", "limit", "abs_err", "rate"}, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cosserat shell curvature homogenization toolkit"};
  app.require_subcommand(1);

  CommonArgs energy_args, verify_args, thinlimit_args;
  CLI::App* energy = app.add_subcommand("energy", "evaluate curvature measures and energies");
  add_common(energy, energy_args, true);
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "closed forms against brute-force oracles");
  add_common(verify_cmd, verify_args, false);
  CLI::App* thinlimit =
      app.add_subcommand("thinlimit", "rescaled slab energy against the reduced limit");
  add_common(thinlimit, thinlimit_args, true);
  CLI::App* schema = app.add_subcommand("report-schema", "print the config and report schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (energy->parsed()) return cmd_energy(energy_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (thinlimit->parsed()) return cmd_thinlimit(thinlimit_args);
    if (schema->parsed()) {
      std::cout << report_schema_json() << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
