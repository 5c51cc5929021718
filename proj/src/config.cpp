#include "cosserat/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cosserat/report.hpp"

namespace cosserat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config error in block '" + where + "': " + what);
}

double number_at(const json& j, const std::string& where, const std::string& key,
                 std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(where, "missing numeric field '" + key + "'");
  }
  if (!j.at(key).is_number()) fail(where, "field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

Vec3 vec3_at(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 3) {
    fail(where, "field '" + key + "' must be an array of three numbers");
  }
  const auto& a = j.at(key);
  return Vec3(a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>());
}

MaterialParams parse_material(const json& j) {
  if (!j.is_object()) fail("material", "must be an object");
  double b1 = 1.0, b2 = 1.0, b3 = 1.0;
  if (j.contains("b")) {
    const auto& b = j.at("b");
    if (!b.is_array() || b.size() != 3) fail("material", "field 'b' must have three entries");
    b1 = b.at(0).get<double>();
    b2 = b.at(1).get<double>();
    b3 = b.at(2).get<double>();
  }
  try {
    return MaterialParams::make(number_at(j, "material", "mu", 1.0),
                                number_at(j, "material", "lambda", 1.0),
                                number_at(j, "material", "mu_c", 1.0),
                                number_at(j, "material", "L_c", 1.0), b1, b2, b3);
  } catch (const std::invalid_argument& e) {
    fail("material", e.what());
  }
}

Rect parse_domain(const json& j, const std::string& where, Rect fallback) {
  if (!j.contains("domain")) return fallback;
  const auto& d = j.at("domain");
  if (!d.is_array() || d.size() != 2 || !d.at(0).is_array() || d.at(0).size() != 2 ||
      !d.at(1).is_array() || d.at(1).size() != 2) {
    fail(where, "field 'domain' must be [[x1_lo, x1_hi], [x2_lo, x2_hi]]");
  }
  Rect r;
  r.lo = Vec2(d.at(0).at(0).get<double>(), d.at(1).at(0).get<double>());
  r.hi = Vec2(d.at(0).at(1).get<double>(), d.at(1).at(1).get<double>());
  if (!(r.lo[0] < r.hi[0]) || !(r.lo[1] < r.hi[1])) fail(where, "domain rectangle is empty");
  return r;
}

Surface parse_surface(const json& j) {
  if (!j.is_object()) fail("surface", "must be an object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    fail("surface", "missing string field 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "plane") return Surface::plane(parse_domain(j, "surface", Rect{}));
  if (type == "cylinder") {
    return Surface::cylinder(number_at(j, "surface", "radius", 2.0),
                             parse_domain(j, "surface", Rect{}));
  }
  if (type == "sphere") {
    return Surface::sphere(number_at(j, "surface", "radius", 2.0),
                           parse_domain(j, "surface", Rect{Vec2(0.0, 0.2), Vec2(0.6, 0.8)}));
  }
  if (type == "graph") {
    if (!j.contains("height") || !j.at("height").is_string()) {
      fail("surface", "graph surfaces need a string field 'height'");
    }
    try {
      return Surface::graph(j.at("height").get<std::string>(),
                            parse_domain(j, "surface", Rect{}),
                            number_at(j, "surface", "fd_step", 1e-4));
    } catch (const std::invalid_argument& e) {
      fail("surface", e.what());
    }
  }
  fail("surface", "unknown type '" + type + "' (expected plane, cylinder, sphere or graph)");
}

RotationField parse_field(const json& j, const std::optional<Surface>& surface,
                          const std::string& name) {
  const std::string where = "fields." + name;
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    fail(where, "every field needs a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "constant") {
      const Vec3 axis = j.contains("axis") ? vec3_at(j, where, "axis") : Vec3::UnitZ();
      const double angle = number_at(j, where, "angle", 0.0);
      return RotationField::constant(rotation_exp(angle * axis.normalized()));
    }
    if (type == "exp_affine") {
      return RotationField::exp_affine(vec3_at(j, where, "axis").normalized(),
                                       number_at(j, where, "theta0", 0.0),
                                       vec3_at(j, where, "grad"));
    }
    if (type == "exp_product") {
      if (!j.contains("first") || !j.contains("second")) {
        fail(where, "exp_product needs 'first' and 'second' sub-fields");
      }
      return RotationField::product(parse_field(j.at("first"), surface, name + ".first"),
                                    parse_field(j.at("second"), surface, name + ".second"));
    }
    if (type == "frame_rotation") {
      if (!surface) fail(where, "frame_rotation needs the 'surface' block");
      const Surface s = *surface;
      return RotationField::from_evaluator(
          [s](const Vec3& x) { return s.frame_at(Vec2(x[0], x[1])).q0; },
          number_at(j, where, "fd_step", 1e-5));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "unknown field type '" + type +
                  "' (expected constant, exp_affine, exp_product or frame_rotation)");
}

EnergyBlock parse_energy(const json& j) {
  if (!j.is_object()) fail("energy", "must be an object");
  EnergyBlock block;
  if (!j.contains("field") || !j.at("field").is_string()) {
    fail("energy", "missing string field 'field'");
  }
  block.field = j.at("field").get<std::string>();
  block.rotation = j.contains("rotation") ? j.at("rotation").get<std::string>() : block.field;
  if (!j.contains("points") || !j.at("points").is_array() || j.at("points").empty()) {
    fail("energy", "missing non-empty array 'points'");
  }
  for (const auto& pt : j.at("points")) {
    if (!pt.is_array() || pt.size() != 3) fail("energy", "each point must have three numbers");
    block.points.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>(),
                              pt.at(2).get<double>());
  }
  block.homogenized = j.contains("homogenized") && j.at("homogenized").get<bool>();
  if (j.contains("plate")) {
    const auto& plate = j.at("plate");
    if (!plate.contains("gamma_square") || !plate.at("gamma_square").is_array() ||
        plate.at("gamma_square").size() != 2) {
      fail("energy.plate", "needs a 2x2 array 'gamma_square'");
    }
    Mat3 gamma0 = Mat3::Zero();
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        gamma0(i, k) = plate.at("gamma_square").at(static_cast<std::size_t>(i))
                           .at(static_cast<std::size_t>(k)).get<double>();
      }
    gamma0(2, 0) = number_at(plate, "energy.plate", "gamma_31", 0.0);
    gamma0(2, 1) = number_at(plate, "energy.plate", "gamma_32", 0.0);
    block.plate_gamma = gamma0;
  }
  return block;
}

ThinLimitBlock parse_thinlimit(const json& j) {
  if (!j.is_object()) fail("thinlimit", "must be an object");
  ThinLimitBlock block;
  if (j.contains("ansatz")) block.ansatz = j.at("ansatz").get<std::string>();
  if (j.contains("h_list")) {
    block.h_list.clear();
    for (const auto& h : j.at("h_list")) block.h_list.push_back(h.get<double>());
  }
  if (block.h_list.size() < 4) fail("thinlimit", "h_list needs at least 4 entries");
  for (std::size_t i = 0; i < block.h_list.size(); ++i) {
    if (!(block.h_list[i] > 0.0)) fail("thinlimit", "h_list entries must be positive");
    if (i > 0 && !(block.h_list[i] < block.h_list[i - 1])) {
      fail("thinlimit", "h_list must be strictly decreasing");
    }
  }
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    block.n_plane = static_cast<int>(number_at(q, "thinlimit.quadrature", "n_plane", 4));
    block.n_thickness = static_cast<int>(number_at(q, "thinlimit.quadrature", "n_thickness", 4));
    if (block.n_plane < 1 || block.n_thickness < 1) {
      fail("thinlimit.quadrature", "rule sizes must be positive");
    }
  }
  if (j.contains("corrections")) block.corrections = j.at("corrections").get<bool>();
  return block;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  RunConfig cfg;
  if (j.contains("material")) cfg.material = parse_material(j.at("material"));
  if (j.contains("surface")) cfg.surface = parse_surface(j.at("surface"));
  if (j.contains("fields")) {
    if (!j.at("fields").is_object()) throw ConfigError("config error in block 'fields': must map names to field specs");
    for (const auto& [name, spec] : j.at("fields").items()) {
      cfg.fields.emplace(name, parse_field(spec, cfg.surface, name));
    }
  }
  if (j.contains("energy")) {
    cfg.energy = parse_energy(j.at("energy"));
    if (cfg.fields.find(cfg.energy->field) == cfg.fields.end()) {
      fail("energy", "field '" + cfg.energy->field + "' is not defined in 'fields'");
    }
    if (cfg.fields.find(cfg.energy->rotation) == cfg.fields.end()) {
      fail("energy", "rotation field '" + cfg.energy->rotation + "' is not defined in 'fields'");
    }
  }
  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    cfg.verify_opts.seed =
        static_cast<std::uint64_t>(number_at(v, "verify", "seed", 42.0));
    cfg.verify_opts.instances = static_cast<long>(number_at(v, "verify", "instances", 1000.0));
    cfg.verify_opts.tol = number_at(v, "verify", "tol", 1e-10);
    if (cfg.verify_opts.instances < 1) fail("verify", "instances must be >= 1");
    if (!(cfg.verify_opts.tol > 0.0)) fail("verify", "tol must be positive");
  }
  if (j.contains("thinlimit")) cfg.thinlimit = parse_thinlimit(j.at("thinlimit"));
  cfg.config_hash = hex16(fnv1a64(text));
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

RunConfig default_config() { return parse_config("{}"); }

std::string report_schema_json() {
  return R"json({
  "config": {
    "material": {"mu": "number>0", "lambda": "number", "mu_c": "number>0", "L_c": "number>0", "b": "[b1>0, b2>0, b3>0]"},
    "surface": {"type": "plane|cylinder|sphere|graph", "radius": "number (cylinder, sphere)", "height": "expression in x1, x2 (graph)", "domain": "[[x1_lo, x1_hi], [x2_lo, x2_hi]]", "fd_step": "number (graph)"},
    "fields": {"<name>": {"type": "constant|exp_affine|exp_product|frame_rotation", "axis": "[x, y, z]", "angle": "number", "theta0": "number", "grad": "[x, y, z]", "first": "field spec", "second": "field spec"}},
    "energy": {"field": "name", "rotation": "name (optional)", "points": "[[x1, x2, x3], ...]", "homogenized": "bool", "plate": {"gamma_square": "[[g11, g12], [g21, g22]]", "gamma_31": "number", "gamma_32": "number"}},
    "verify": {"seed": "u64", "instances": "int>=1", "tol": "number>0"},
    "thinlimit": {"ansatz": "flat_shear|cylinder_identity|sphere_rotation", "h_list": "strictly decreasing positives, >=4", "quadrature": {"n_plane": "int", "n_thickness": "int"}, "corrections": "bool"}
  },
  "records": {
    "meta": ["record", "config_hash", "seed", "command", "instances", "tol"],
    "curvature_point": ["record", "config_hash", "seed", "field", "x1", "x2", "x3", "gamma_*", "alpha_*", "w_gamma_{sym,skew,trace,total}", "w_alpha_total", "w_devsym_total", "w_khat_isotropic"],
    "homogenized_point": ["record", "config_hash", "seed", "x1", "x2", "membrane_{sym,skew,trace,normal,total}", "curvature_{sym,skew,trace,normal,total}", "director_*", "completion_*"],
    "plate_energy": ["record", "config_hash", "seed", "sym", "skew", "trace", "normal", "total"],
    "suite": ["record", "config_hash", "seed", "name", "passed", "worst", "tolerance", "count", "detail"],
    "summary": ["record", "config_hash", "seed", "passed", "suites", "failed"],
    "thinlimit_row": ["record", "config_hash", "seed", "ansatz", "h", "energy", "limit", "abs_err", "rate"],
    "thinlimit_fit": ["record", "config_hash", "seed", "ansatz", "slope", "monotone", "limit"]
  },
  "tables": {
    "tables/verify_suites.csv": ["name", "passed", "worst", "tolerance", "count"],
    "tables/thinlimit_<ansatz>.csv": ["h", "energy", "limit", "abs_err", "rate"]
  },
  "exit_codes": {"0": "success", "1": "verification failure", "2": "configuration error"}
})json";
}

}  // namespace cosserat
