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


#include "aerolink/config.hpp"

#include "aerolink/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace aerolink {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) + "': expected " +
                    std::string(expected));
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto v = trim(value);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) bad_value(key, value, "a number");
  return out;
}

long long parse_integer(std::string_view key, std::string_view value) {
  long long out = 0;
  const auto v = trim(value);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, value, "an integer");
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  const auto v = parse_integer(key, value);
  if (v < -2147483647LL || v > 2147483647LL) bad_value(key, value, "a 32-bit integer");
  return static_cast<int>(v);
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto v = trim(value);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, value, "an unsigned 64-bit integer");
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  const auto v = trim(value);
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  bad_value(key, value, "true/false");
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

template <typename T>
std::string join(const std::vector<T>& items, auto&& to_text) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += to_text(items[i]);
  }
  return out;
}

struct Setting {
  std::string_view key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define AEROLINK_DOUBLE(name, member)                                                     \
  Setting {                                                                               \
    name, [](RunConfig& c, std::string_view v) { c.system.member = parse_double(name, v); }, \
        [](const RunConfig& c) { return fmt_double(c.system.member); }                    \
  }
#define AEROLINK_INT(name, member)                                                     \
  Setting {                                                                            \
    name, [](RunConfig& c, std::string_view v) { c.system.member = parse_int(name, v); }, \
        [](const RunConfig& c) { return std::to_string(c.system.member); }             \
  }
#define AEROLINK_BOOL(name, member)                                                     \
  Setting {                                                                             \
    name, [](RunConfig& c, std::string_view v) { c.system.member = parse_bool(name, v); }, \
        [](const RunConfig& c) { return fmt_bool(c.system.member); }                    \
  }

const std::vector<Setting>& settings() {
  static const std::vector<Setting> table = {
      AEROLINK_DOUBLE("fc_ghz", fc_ghz),
      AEROLINK_DOUBLE("rb_bandwidth_hz", rb_bandwidth_hz),
      AEROLINK_INT("n_rbs", n_rbs),
      AEROLINK_DOUBLE("noise_psd_dbm_hz", noise_psd_dbm_hz),
      AEROLINK_DOUBLE("tx_power_dbm", tx_power_dbm),
      AEROLINK_INT("tiers", tiers),
      AEROLINK_DOUBLE("cell_radius_m", cell_radius_m),
      AEROLINK_DOUBLE("bs_height_m", bs_height_m),
      AEROLINK_DOUBLE("uav_altitude_m", uav_altitude_m),
      AEROLINK_DOUBLE("ue_height_m", ue_height_m),
      AEROLINK_INT("n_uavs", n_uavs),
      Setting{"n_ues",
              [](RunConfig& c, std::string_view v) {
                c.grid.n_ues = parse_int_list(v);
                c.system.n_ues = c.grid.n_ues.front();
              },
              [](const RunConfig& c) { return join(c.grid.n_ues, [](int n) { return std::to_string(n); }); }},
      AEROLINK_DOUBLE("downtilt_deg", antenna.downtilt_deg),
      AEROLINK_DOUBLE("antenna_max_gain_dbi", antenna.max_gain_dbi),
      AEROLINK_DOUBLE("antenna_beamwidth_deg", antenna.beamwidth_deg),
      AEROLINK_DOUBLE("antenna_side_lobe_db", antenna.side_lobe_db),
      Setting{"scheme",
              [](RunConfig& c, std::string_view v) {
                c.grid.schemes = parse_scheme_list(v);
                c.system.scheme = c.grid.schemes.front();
              },
              [](const RunConfig& c) {
                if (c.grid.schemes.size() == std::size(kAllSchemes) &&
                    std::equal(c.grid.schemes.begin(), c.grid.schemes.end(), std::begin(kAllSchemes)))
                  return std::string("all");
                return join(c.grid.schemes, [](Scheme s) { return std::to_string(to_int(s)); });
              }},
      Setting{"direction",
              [](RunConfig& c, std::string_view v) {
                c.grid.directions = parse_direction_list(v);
                c.system.direction = c.grid.directions.front();
              },
              [](const RunConfig& c) {
                if (c.grid.directions == std::vector{Direction::Uplink, Direction::Downlink}) return std::string("both");
                return join(c.grid.directions, [](Direction d) { return std::string(to_string(d)); });
              }},
      AEROLINK_INT("n_drops", n_drops),
      Setting{"master_seed", [](RunConfig& c, std::string_view v) { c.system.master_seed = parse_u64("master_seed", v); },
              [](const RunConfig& c) { return std::to_string(c.system.master_seed); }},
      AEROLINK_BOOL("honest_helper_accounting", honest_helper_accounting),
      AEROLINK_BOOL("qf_enabled", qf_enabled),
      AEROLINK_INT("qf_bits", qf_bits),
      AEROLINK_BOOL("forward_uav_message", forward_uav_message),
      AEROLINK_BOOL("association_includes_antenna", association_includes_antenna),
  };
  return table;
}

#undef AEROLINK_DOUBLE
#undef AEROLINK_INT
#undef AEROLINK_BOOL

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::Uplink ? "ul" : "dl"; }

int to_int(Scheme s) { return static_cast<int>(s); }

Scheme scheme_from_int(int v) {
  if (v < 1 || v > 5) throw ConfigError("scheme must be in 1..5, got " + std::to_string(v));
  return static_cast<Scheme>(v);
}

Direction direction_from_string(std::string_view s) {
  s = trim(s);
  if (s == "ul" || s == "uplink") return Direction::Uplink;
  if (s == "dl" || s == "downlink") return Direction::Downlink;
  throw ConfigError("direction must be ul or dl, got '" + std::string(s) + "'");
}

std::vector<Scheme> parse_scheme_list(std::string_view value) {
  if (trim(value) == "all") return {std::begin(kAllSchemes), std::end(kAllSchemes)};
  std::vector<Scheme> out;
  for (const auto item : split(value, ',')) {
    const auto s = scheme_from_int(parse_int("scheme", item));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<Direction> parse_direction_list(std::string_view value) {
  if (trim(value) == "both") return {Direction::Uplink, Direction::Downlink};
  std::vector<Direction> out;
  for (const auto item : split(value, ',')) {
    const auto d = direction_from_string(item);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view value) {
  std::vector<int> out;
  for (const auto item : split(value, ',')) out.push_back(parse_int("n_ues", item));
  return out;
}

double SystemConfig::tx_power_mw() const { return std::pow(10.0, tx_power_dbm / 10.0); }

double SystemConfig::noise_power_mw() const {
  return std::pow(10.0, (noise_psd_dbm_hz + 10.0 * std::log10(rb_bandwidth_hz)) / 10.0);
}

void validate(const SystemConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  require(c.n_rbs > 0, "n_rbs must be positive");
  require(c.n_uavs >= 0, "n_uavs must be >= 0");
  require(c.n_uavs <= c.n_rbs, "n_uavs (" + std::to_string(c.n_uavs) + ") exceeds n_rbs (" + std::to_string(c.n_rbs) +
                                   "): UAVs must occupy mutually orthogonal RBs");
  require(c.n_ues >= 0, "n_ues must be >= 0");
  require(c.tiers >= 0, "tiers must be >= 0");
  require(c.fc_ghz > 0.0, "fc_ghz must be positive");
  require(c.rb_bandwidth_hz > 0.0, "rb_bandwidth_hz must be positive");
  require(c.cell_radius_m > 0.0, "cell_radius_m must be positive");
  require(c.bs_height_m > 1.0, "bs_height_m must exceed 1 m");
  require(c.ue_height_m > 1.0 && c.ue_height_m <= 22.5, "ue_height_m must be in (1, 22.5]");
  require(c.uav_altitude_m > 22.5 && c.uav_altitude_m <= 300.0, "uav_altitude_m must be in (22.5, 300]");
  require(c.antenna.beamwidth_deg > 0.0, "antenna_beamwidth_deg must be positive");
  require(c.antenna.side_lobe_db >= 0.0, "antenna_side_lobe_db must be >= 0");
  require(c.n_drops > 0, "n_drops must be positive");
  require(c.qf_bits > 0 && c.qf_bits <= 24, "qf_bits must be in 1..24");
}

void validate(const RunConfig& c) {
  validate(c.system);
  if (c.grid.schemes.empty()) throw ConfigError("scheme list is empty");
  if (c.grid.directions.empty()) throw ConfigError("direction list is empty");
  if (c.grid.n_ues.empty()) throw ConfigError("n_ues list is empty");
  for (const int n : c.grid.n_ues) {
    if (n < 0) throw ConfigError("n_ues entries must be >= 0, got " + std::to_string(n));
  }
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  for (const auto& s : settings()) {
    if (s.key == key) {
      s.set(config, value);
      return;
    }
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + std::string(line) + "'");
    }
    apply_setting(base, line.substr(0, eq), trim(line.substr(eq + 1)));
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

void write_config(std::ostream& os, const RunConfig& config) {
  os << "# aerolink configuration\n";
  for (const auto& s : settings()) os << s.key << " = " << s.get(config) << "\n";
}

}  // namespace aerolink
