#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include "cosserat/config.hpp"
#include "cosserat/report.hpp"
#include "cosserat/rng.hpp"

using namespace cosserat;

TEST_SUITE_BEGIN("config");

TEST_CASE("defaults parse") {
  const RunConfig cfg = default_config();
  CHECK(cfg.material.mu == 1.0);
  CHECK(cfg.verify_opts.seed == 42);
  CHECK(cfg.verify_opts.instances == 1000);
  CHECK_FALSE(cfg.surface.has_value());
  CHECK_FALSE(cfg.energy.has_value());
}

TEST_CASE("block errors carry the block name") {
  CHECK_THROWS_WITH_AS(parse_config("[]"), "config root must be a JSON object", ConfigError);
  CHECK_THROWS_AS(parse_config("{\"material\": {\"mu\": -1}}"), ConfigError);
  try {
    parse_config("{\"material\": {\"mu\": -1}}");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("material") != std::string::npos);
  }
  try {
    parse_config("{\"surface\": {\"type\": \"torus\"}}");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("surface") != std::string::npos);
  }
  try {
    parse_config(R"({"thinlimit": {"h_list": [0.2, 0.2, 0.1, 0.05]}})");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("thinlimit") != std::string::npos);
    CHECK(std::string(e.what()).find("decreasing") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config(R"({"thinlimit": {"h_list": [0.2, 0.1]}})"), ConfigError);
  CHECK_THROWS_AS(parse_config("{invalid"), ConfigError);
}

TEST_CASE("field references must resolve") {
  const char* good = R"({
    "fields": {"spin": {"type": "exp_affine", "axis": [0,0,1], "grad": [0.5,0,0]}},
    "energy": {"field": "spin", "points": [[0.1, 0.2, 0.0]]}
  })";
  const RunConfig cfg = parse_config(good);
  CHECK(cfg.energy->field == "spin");
  CHECK(cfg.fields.count("spin") == 1);

  const char* bad = R"({
    "fields": {"spin": {"type": "exp_affine", "axis": [0,0,1], "grad": [0.5,0,0]}},
    "energy": {"field": "whirl", "points": [[0.1, 0.2, 0.0]]}
  })";
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
}

TEST_CASE("field generators evaluate") {
  const char* text = R"({
    "surface": {"type": "cylinder", "radius": 2.0},
    "fields": {
      "id": {"type": "constant"},
      "pair": {"type": "exp_product",
               "first": {"type": "exp_affine", "axis": [0,0,1], "grad": [0.7,0,0]},
               "second": {"type": "exp_affine", "axis": [1,0,0], "grad": [0,0.4,0]}},
      "frame": {"type": "frame_rotation"}
    }
  })";
  const RunConfig cfg = parse_config(text);
  const Vec3 x(0.3, 0.2, 0.0);
  CHECK((cfg.fields.at("id")(x) - Mat3::Identity()).norm() == 0.0);
  CHECK((cfg.fields.at("pair")(x).transpose() * cfg.fields.at("pair")(x) - Mat3::Identity())
            .norm() < 1e-12);
  CHECK((cfg.fields.at("frame")(x).transpose() * cfg.fields.at("frame")(x) - Mat3::Identity())
            .norm() < 1e-10);
}

TEST_CASE("17-digit floats round-trip bitwise") {
  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const double x = (rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform(-12, 12));
    const std::string s = format_sig17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK_THROWS_AS(format_sig17(std::nan("")), std::invalid_argument);
}

TEST_CASE("records serialize deterministically") {
  Record rec("demo", "00ff", 7);
  rec.add("value", 0.1).add("flag", true).add("text", "a \"b\"\n");
  const std::string line = rec.to_json();
  CHECK(line ==
        "{\"record\":\"demo\",\"config_hash\":\"00ff\",\"seed\":7,"
        "\"value\":0.10000000000000001,\"flag\":true,\"text\":\"a \\\"b\\\"\\n\"}");
  CHECK(nlohmann::json::parse(line).at("value").get<double>() == 0.1);
}

TEST_CASE("schema document is valid JSON") {
  const auto schema = nlohmann::json::parse(report_schema_json());
  CHECK(schema.contains("config"));
  CHECK(schema.contains("records"));
  CHECK(schema.contains("exit_codes"));
}

TEST_SUITE_END();
