// qlimit: sensitivity sweeps, paired detuned/locking curves, bound certification and
// stability checks for linearized optomechanical detectors.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qlimit/cli/commands.hpp"

namespace {

using nlohmann::json;
using namespace qlimit::cli;

// Flag values that override the JSON config, keyed by config field name.
struct Overrides {
  std::map<std::string, double> numbers;
  std::map<std::string, std::string> strings;
  std::optional<std::size_t> grid_count;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  bool mech_noise = false;
  bool serial = false;
  std::string config_path;

  json apply() const {
    json doc = config_path.empty() ? json::object() : load_json_file(config_path);
    for (const auto& [k, v] : numbers) doc[k] = v;
    for (const auto& [k, v] : strings) doc[k] = v;
    if (grid_count) doc["grid_count"] = *grid_count;
    if (samples) doc["samples"] = *samples;
    if (seed) doc["seed"] = *seed;
    if (mech_noise) doc["include_mech_noise"] = true;
    if (serial) doc["parallel"] = false;
    return doc;
  }
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config_path, "flat JSON run config")->check(CLI::ExistingFile);
  cmd->add_option_function<std::string>(
      "-o,--output", [&o](const std::string& v) { o.strings["output"] = v; },
      "output file (default: stdout)");
  cmd->add_flag("--serial", o.serial, "use the serial reference kernels");
}

void add_number(CLI::App* cmd, Overrides& o, const std::string& flag, const std::string& key,
                const std::string& help) {
  cmd->add_option_function<double>(flag, [&o, key](double v) { o.numbers[key] = v; }, help);
}

void add_grid(CLI::App* cmd, Overrides& o) {
  add_number(cmd, o, "--grid-min", "grid_min", "lowest frequency");
  add_number(cmd, o, "--grid-max", "grid_max", "highest frequency");
  cmd->add_option("--grid-count", o.grid_count, "number of grid points");
  cmd->add_option_function<std::string>(
      "--grid-scale", [&o](const std::string& v) { o.strings["grid_scale"] = v; },
      "log or linear");
}

void add_model(CLI::App* cmd, Overrides& o) {
  cmd->add_option_function<std::string>(
      "--model", [&o](const std::string& v) { o.strings["model"] = v; }, "detuned or locking");
  add_number(cmd, o, "--mech-frequency", "mech_frequency", "Omega");
  add_number(cmd, o, "--mech-damping", "mech_damping", "Gamma");
  add_number(cmd, o, "--cavity-decay", "cavity_decay", "gamma");
  add_number(cmd, o, "--detuning", "detuning", "Delta");
  add_number(cmd, o, "--coupling", "coupling", "g");
  add_number(cmd, o, "--control-coupling", "control_coupling", "g~ (locking)");
  add_number(cmd, o, "--readout-phase", "readout_phase", "phi [rad]");
  add_number(cmd, o, "--feedback-phase", "feedback_phase", "theta [rad]");
  add_number(cmd, o, "--n-thermal", "n_thermal", "thermal occupancy");
  cmd->add_flag("--mech-noise", o.mech_noise, "include mechanical input noise");
  cmd->add_option_function<std::string>(
      "--lambda-policy", [&o](const std::string& v) { o.strings["lambda_policy"] = v; },
      "off, fixed, optimize-force or optimize-displacement");
  add_number(cmd, o, "--lambda-re", "lambda_re", "fixed lambda, real part");
  add_number(cmd, o, "--lambda-im", "lambda_im", "fixed lambda, imaginary part");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-limited sensitivity of linear optomechanical detectors"};
  app.require_subcommand(1);

  Overrides o;
  char panel = 'a';
  std::string svg_path;
  std::string inject_path;

  auto* sweep = app.add_subcommand("sweep", "sensitivity sweep to CSV");
  add_common(sweep, o);
  add_model(sweep, o);
  add_grid(sweep, o);

  auto* fig2 = app.add_subcommand("fig2", "detuned and locking curves for one panel");
  add_common(fig2, o);
  add_grid(fig2, o);
  fig2->add_option("--panel", panel, "a (force) or b (displacement)")
      ->check(CLI::IsMember({'a', 'b'}));
  fig2->add_option("--svg", svg_path, "also write a log-log SVG plot");

  auto* bounds = app.add_subcommand("bounds", "Monte-Carlo certification of the bound chain");
  add_common(bounds, o);
  bounds->add_option("-n,--samples", o.samples, "number of sampled noise models");
  bounds->add_option("--seed", o.seed, "RNG seed (required)");
  bounds->add_option("--inject-model", inject_path, "check this noise model (JSON) instead")
      ->check(CLI::ExistingFile);

  auto* stab = app.add_subcommand("stability", "drift-matrix eigenvalues and verdict");
  add_common(stab, o);
  add_model(stab, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig config;
  std::optional<qlimit::DetectorNoiseModel> injected;
  try {
    json doc = o.apply();
    if (!svg_path.empty()) doc["svg"] = svg_path;
    config = parse_config(doc);
    if (!inject_path.empty()) injected = noise_model_from_json(load_json_file(inject_path));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (sweep->parsed()) return cmd_sweep(config, std::cout, std::cerr);
  if (fig2->parsed()) return cmd_fig2(panel, config, std::cout, std::cerr);
  if (bounds->parsed()) return cmd_bounds(config, injected, std::cout, std::cerr);
  return cmd_stability(config, std::cout, std::cerr);
}
