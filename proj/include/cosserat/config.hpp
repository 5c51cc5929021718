#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/geometry.hpp"
#include "cosserat/rotation_field.hpp"
#include "cosserat/verify.hpp"

namespace cosserat {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnergyBlock {
  std::string field;
  std::vector<Vec3> points;
  bool homogenized = false;
  std::string rotation;  // field used for the homogenized strains; defaults to `field`
  std::optional<Mat3> plate_gamma;  // zero third column, for the flat density
};

struct ThinLimitBlock {
  std::string ansatz = "flat_shear";
  std::vector<double> h_list{0.2, 0.1, 0.05, 0.025, 0.0125};
  int n_plane = 4;
  int n_thickness = 4;
  bool corrections = true;
};

struct RunConfig {
  MaterialParams material = MaterialParams::make(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
  std::optional<Surface> surface;
  std::map<std::string, RotationField> fields;
  std::optional<EnergyBlock> energy;
  verify::Options verify_opts;
  std::optional<ThinLimitBlock> thinlimit;
  std::string config_hash;  // FNV-1a of the source text plus CLI overrides
};

/// Parses and validates the JSON config document. Throws ConfigError with
/// the offending block/field named.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

/// Defaults used when no --config is given (verify runs need none).
RunConfig default_config();

/// JSON document describing the accepted config fields and the emitted
/// report records.
std::string report_schema_json();

}  // namespace cosserat
