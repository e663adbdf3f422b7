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


#ifndef AEROLINK_CONFIG_HPP
#define AEROLINK_CONFIG_HPP

#include "aerolink/channel.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aerolink {

enum class Scheme : int {
  Exclusive = 1,        // RBs reserved for UAVs, terrestrial UEs locked out
  Opportunistic = 2,    // terrestrial UEs may use reserved RBs no UAV holds
  TerrestrialIcic = 3,  // UAVs treated like UEs, first-tier coordination only
  SensingIcic = 4,      // UAV picks the lowest sensed-power RB
  Cic = 5,              // sensing plus cooperative interference cancellation
};

enum class Direction { Uplink, Downlink };

inline constexpr Scheme kAllSchemes[] = {Scheme::Exclusive, Scheme::Opportunistic, Scheme::TerrestrialIcic,
                                         Scheme::SensingIcic, Scheme::Cic};

std::string_view to_string(Direction d);
int to_int(Scheme s);
Scheme scheme_from_int(int v);
Direction direction_from_string(std::string_view s);

// Physical and scheme parameters for one evaluation point. Defaults are the
// reference deployment: 37 cells of 800 m radius, 8 UAVs at 200 m, 10 RBs of
// 180 kHz at 2 GHz, 20 dBm everywhere, -164 dBm/Hz noise.
struct SystemConfig {
  double fc_ghz = 2.0;
  double rb_bandwidth_hz = 180e3;
  int n_rbs = 10;
  double noise_psd_dbm_hz = -164.0;
  double tx_power_dbm = 20.0;
  int tiers = 3;
  double cell_radius_m = 800.0;
  double bs_height_m = 25.0;
  double uav_altitude_m = 200.0;
  double ue_height_m = 1.5;
  int n_uavs = 8;
  int n_ues = 40;
  AntennaPattern antenna;
  Scheme scheme = Scheme::SensingIcic;
  Direction direction = Direction::Uplink;
  int n_drops = 1000;
  std::uint64_t master_seed = 1;

  bool honest_helper_accounting = true;
  bool qf_enabled = false;
  int qf_bits = 8;
  bool forward_uav_message = false;
  bool association_includes_antenna = false;

  ChannelParams channel() const { return {fc_ghz, bs_height_m, antenna}; }
  double tx_power_mw() const;
  // Thermal noise over one RB, mW.
  double noise_power_mw() const;
};

// Grid swept by the harness; each point copies the base SystemConfig and
// overrides scheme, direction and n_ues.
struct SweepGrid {
  std::vector<Scheme> schemes{std::begin(kAllSchemes), std::end(kAllSchemes)};
  std::vector<Direction> directions{Direction::Uplink, Direction::Downlink};
  std::vector<int> n_ues{20, 40, 80, 120, 160, 200};
};

struct RunConfig {
  SystemConfig system;
  SweepGrid grid;
};

// Throws ConfigError naming the first violated constraint.
void validate(const SystemConfig& config);
void validate(const RunConfig& config);

// Flat `key = value` text with `#` comments. Unknown keys and malformed values
// throw ConfigError naming the key. Keys absent from the text keep `base` values.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Applies a single key/value pair; shared by the file parser and CLI overrides.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

void write_config(std::ostream& os, const RunConfig& config);

std::vector<Scheme> parse_scheme_list(std::string_view value);
std::vector<Direction> parse_direction_list(std::string_view value);
std::vector<int> parse_int_list(std::string_view value);

}  // namespace aerolink

#endif  // AEROLINK_CONFIG_HPP
