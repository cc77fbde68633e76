#include "qlimit/cli/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace qlimit::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "model",          "mech_frequency",   "mech_damping",   "cavity_decay",
      "detuning",       "coupling",         "control_coupling", "readout_phase",
      "feedback_phase", "n_thermal",        "include_mech_noise", "grid_min",
      "grid_max",       "grid_count",       "grid_scale",     "lambda_policy",
      "lambda_re",      "lambda_im",        "output",         "svg",
      "seed",           "samples",          "parallel"};
  return keys;
}

template <typename T>
void read(const json& doc, const char* key, T& into) {
  if (!doc.contains(key)) return;
  try {
    into = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

Complex complex_from(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ConfigError(std::string(what) + " must be [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (!known_keys().contains(key)) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  RunConfig c;
  std::string model = "detuned";
  read(doc, "model", model);
  if (model == "detuned") {
    c.model = optomech::ModelKind::Detuned;
  } else if (model == "locking") {
    c.model = optomech::ModelKind::Locking;
  } else {
    throw ConfigError("model must be 'detuned' or 'locking'");
  }

  auto& p = c.params;
  read(doc, "mech_frequency", p.mech_frequency);
  read(doc, "mech_damping", p.mech_damping);
  read(doc, "cavity_decay", p.cavity_decay);
  read(doc, "detuning", p.detuning);
  read(doc, "coupling", p.coupling);
  read(doc, "control_coupling", p.control_coupling);
  read(doc, "readout_phase", p.readout_phase);
  read(doc, "feedback_phase", p.feedback_phase);
  read(doc, "n_thermal", p.n_thermal);
  read(doc, "include_mech_noise", p.include_mech_noise);
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  read(doc, "grid_min", c.grid.min);
  read(doc, "grid_max", c.grid.max);
  read(doc, "grid_count", c.grid.count);
  std::string scale = "log";
  read(doc, "grid_scale", scale);
  if (scale != "log" && scale != "linear") {
    throw ConfigError("grid_scale must be 'log' or 'linear'");
  }
  c.grid.logarithmic = scale == "log";
  if (!(c.grid.min < c.grid.max) || c.grid.count < 2 || (c.grid.logarithmic && !(c.grid.min > 0))) {
    throw ConfigError("grid needs grid_min < grid_max, grid_count >= 2 and grid_min > 0 for log");
  }

  std::string policy = "off";
  read(doc, "lambda_policy", policy);
  double re = 0.0, im = 0.0;
  read(doc, "lambda_re", re);
  read(doc, "lambda_im", im);
  using optomech::LambdaMode;
  if (policy == "off") {
    c.lambda.mode = LambdaMode::Off;
  } else if (policy == "fixed") {
    c.lambda.mode = LambdaMode::Fixed;
    c.lambda.fixed = {re, im};
  } else if (policy == "optimize-force") {
    c.lambda.mode = LambdaMode::OptimizeForce;
  } else if (policy == "optimize-displacement") {
    c.lambda.mode = LambdaMode::OptimizeDisplacement;
  } else {
    throw ConfigError("lambda_policy must be off, fixed, optimize-force or optimize-displacement");
  }
  if (c.model == optomech::ModelKind::Detuned && c.lambda.mode != LambdaMode::Off) {
    throw ConfigError("the detuned model has no feedback loop; use lambda_policy 'off'");
  }

  read(doc, "output", c.output);
  read(doc, "svg", c.svg);
  if (doc.contains("seed")) {
    std::uint64_t seed = 0;
    read(doc, "seed", seed);
    c.seed = seed;
  }
  read(doc, "samples", c.samples);
  read(doc, "parallel", c.parallel);
  return c;
}

json to_json(const RunConfig& c) {
  using optomech::LambdaMode;
  const char* policy = "off";
  switch (c.lambda.mode) {
    case LambdaMode::Off: policy = "off"; break;
    case LambdaMode::Fixed: policy = "fixed"; break;
    case LambdaMode::OptimizeForce: policy = "optimize-force"; break;
    case LambdaMode::OptimizeDisplacement: policy = "optimize-displacement"; break;
  }
  json doc{{"model", optomech::to_string(c.model)},
           {"mech_frequency", c.params.mech_frequency},
           {"mech_damping", c.params.mech_damping},
           {"cavity_decay", c.params.cavity_decay},
           {"detuning", c.params.detuning},
           {"coupling", c.params.coupling},
           {"control_coupling", c.params.control_coupling},
           {"readout_phase", c.params.readout_phase},
           {"feedback_phase", c.params.feedback_phase},
           {"n_thermal", c.params.n_thermal},
           {"include_mech_noise", c.params.include_mech_noise},
           {"grid_min", c.grid.min},
           {"grid_max", c.grid.max},
           {"grid_count", c.grid.count},
           {"grid_scale", c.grid.logarithmic ? "log" : "linear"},
           {"lambda_policy", policy},
           {"lambda_re", c.lambda.fixed.real()},
           {"lambda_im", c.lambda.fixed.imag()},
           {"output", c.output},
           {"svg", c.svg},
           {"samples", c.samples},
           {"parallel", c.parallel}};
  if (c.seed) doc["seed"] = *c.seed;
  return doc;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

std::string resolve_output_path(const std::string& path) {
  if (path.empty()) return path;
  const char* dir = std::getenv("QLIMIT_OUTPUT_DIR");
  const std::filesystem::path p(path);
  if (dir == nullptr || *dir == '\0' || p.is_absolute()) return path;
  return (std::filesystem::path(dir) / p).string();
}

json to_json(const DetectorNoiseModel& m) {
  auto pair = [](Complex z) { return json::array({z.real(), z.imag()}); };
  return json{{"s_yy", m.s_yy},         {"s_zz", m.s_zz},       {"s_ff", m.s_ff},
              {"s_yf", pair(m.s_yf)},   {"s_zf", pair(m.s_zf)}, {"s_yz", pair(m.s_yz)},
              {"chi_ff", pair(m.chi_ff)}};
}

DetectorNoiseModel noise_model_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("noise model must be a JSON object");
  }
  static const std::set<std::string> keys{"s_yy", "s_zz", "s_ff", "s_yf",
                                          "s_zf", "s_yz", "chi_ff"};
  for (const auto& [key, _] : doc.items()) {
    if (!keys.contains(key)) throw ConfigError("unknown noise model key '" + key + "'");
  }
  DetectorNoiseModel m;
  read(doc, "s_yy", m.s_yy);
  read(doc, "s_zz", m.s_zz);
  read(doc, "s_ff", m.s_ff);
  if (doc.contains("s_yf")) m.s_yf = complex_from(doc["s_yf"], "s_yf");
  if (doc.contains("s_zf")) m.s_zf = complex_from(doc["s_zf"], "s_zf");
  if (doc.contains("s_yz")) m.s_yz = complex_from(doc["s_yz"], "s_yz");
  if (doc.contains("chi_ff")) m.chi_ff = complex_from(doc["chi_ff"], "chi_ff");
  try {
    m.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return m;
}

}  // namespace qlimit::cli
