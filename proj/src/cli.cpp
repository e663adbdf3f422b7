// SPDX-License-Identifier: Apache-2.0
//
// aerolink: system-level simulator for cellular-connected UAV interference mitigation
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "aerolink/cli.hpp"

#include "aerolink/config.hpp"
#include "aerolink/errors.hpp"
#include "aerolink/geometry.hpp"
#include "aerolink/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <optional>
#include <ostream>

namespace aerolink {

namespace {

struct SimulateArgs {
  std::string config_path;
  std::string out_path;
  std::optional<std::string> seed, drops, scheme, direction, ues;
  unsigned threads = 0;
  bool throughput = false;
};

RunConfig load_or_default(const std::string& path) {
  if (path.empty()) return {};
  if (!std::filesystem::exists(path)) throw ConfigError("config file not found: '" + path + "'");
  return load_config(path);
}

int simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  auto config = load_or_default(a.config_path);
  if (a.seed) apply_setting(config, "master_seed", *a.seed);
  if (a.drops) apply_setting(config, "n_drops", *a.drops);
  if (a.scheme) apply_setting(config, "scheme", *a.scheme);
  if (a.direction) apply_setting(config, "direction", *a.direction);
  if (a.ues) apply_setting(config, "n_ues", *a.ues);
  validate(config);

  const auto layout = build_layout(config.system.tiers, config.system.cell_radius_m, config.system.bs_height_m);
  auto result = run_sweep(config.system, config.grid, layout, {a.threads, &err});
  if (a.throughput) result = scale_rates(std::move(result), config.system.rb_bandwidth_hz);
  write_csv(result, std::filesystem::path(a.out_path));
  out << "wrote " << result.rows.size() << " rows to " << a.out_path << "\n";
  return 0;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"aerolink: cellular-connected UAV interference mitigation simulator"};
  app.require_subcommand(1, 1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the Monte Carlo sweep and write a CSV");
  simulate_cmd->add_option("--config", sim.config_path, "Key-value configuration file");
  simulate_cmd->add_option("--out", sim.out_path, "Output CSV path")->required();
  simulate_cmd->add_option("--seed", sim.seed, "Master seed");
  simulate_cmd->add_option("--drops", sim.drops, "Drops per sweep point");
  simulate_cmd->add_option("--scheme", sim.scheme, "1..5, comma list, or all");
  simulate_cmd->add_option("--direction", sim.direction, "ul, dl or both");
  simulate_cmd->add_option("--ues", sim.ues, "Comma-separated terrestrial UE counts");
  simulate_cmd->add_option("--threads", sim.threads, "Worker threads (0 = AEROLINK_THREADS or auto)");
  simulate_cmd->add_flag("--throughput", sim.throughput, "Report bit/s per RB instead of bps/Hz");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate-config", "Check a configuration file without running");
  validate_cmd->add_option("--config,config", validate_path, "Key-value configuration file")->required();

  auto* defaults_cmd = app.add_subcommand("print-defaults", "Print the default configuration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (simulate_cmd->parsed()) return simulate(sim, out, err);
    if (validate_cmd->parsed()) {
      const auto config = load_or_default(validate_path);
      validate(config);
      out << "ok: " << validate_path << "\n";
      return 0;
    }
    if (defaults_cmd->parsed()) {
      write_config(out, RunConfig{});
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace aerolink
