#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "qlimit/noise_model.hpp"
#include "qlimit/optomech/sweep.hpp"

namespace qlimit::cli {

/// Flat run description. JSON keys are the field names below, plus the
/// OptomechParams field names for the physics and grid_min / grid_max /
/// grid_count / grid_scale for the frequency grid. Unknown keys are errors.
struct RunConfig {
  optomech::ModelKind model = optomech::ModelKind::Detuned;
  optomech::OptomechParams params;
  optomech::FrequencyGrid grid;
  optomech::LambdaPolicy lambda;
  std::string output;  // CSV / report path; empty or "-" means stdout
  std::string svg;     // fig2 only; empty means no plot
  std::optional<std::uint64_t> seed;
  std::size_t samples = 10000;
  bool parallel = true;
};

/// Thrown for anything that maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig parse_config(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& config);

/// Reads a JSON file; throws ConfigError on I/O or syntax problems.
nlohmann::json load_json_file(const std::string& path);

/// Relative paths are placed under $QLIMIT_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& path);

nlohmann::json to_json(const DetectorNoiseModel& model);
DetectorNoiseModel noise_model_from_json(const nlohmann::json& doc);

}  // namespace qlimit::cli
