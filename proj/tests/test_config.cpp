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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

using namespace aerolink;

namespace {

std::string dump(const RunConfig& c) {
  std::ostringstream os;
  write_config(os, c);
  return os.str();
}

}  // namespace

TEST_CASE("defaults") {
  const SystemConfig c;
  CHECK(c.fc_ghz == 2.0);
  CHECK(c.rb_bandwidth_hz == 180e3);
  CHECK(c.n_rbs == 10);
  CHECK(c.noise_psd_dbm_hz == -164.0);
  CHECK(c.tx_power_dbm == 20.0);
  CHECK(c.tiers == 3);
  CHECK(c.cell_radius_m == 800.0);
  CHECK(c.bs_height_m == 25.0);
  CHECK(c.uav_altitude_m == 200.0);
  CHECK(c.ue_height_m == 1.5);
  CHECK(c.n_uavs == 8);
  CHECK(c.antenna.downtilt_deg == 10.0);
  CHECK(c.honest_helper_accounting);
  CHECK_FALSE(c.qf_enabled);
  CHECK(c.qf_bits == 8);
  CHECK_FALSE(c.forward_uav_message);
  CHECK_FALSE(c.association_includes_antenna);
  CHECK(c.n_drops == 1000);
  CHECK(c.tx_power_mw() == doctest::Approx(100.0).epsilon(1e-14));
}

TEST_CASE("noise power per RB") {
  const SystemConfig c;
  const double dbm = 10.0 * std::log10(c.noise_power_mw());
  CHECK(std::abs(dbm - (-111.44727494896694)) < 1e-9);
}

TEST_CASE("parse: comments, whitespace, lists") {
  const auto c = parse_config(
      "# header\n"
      "\n"
      "   \n"
      "n_drops = 12   # trailing\n"
      "  master_seed=99\n"
      "scheme = 3,5\n"
      "direction = dl\n"
      "n_ues = 10, 30\n"
      "qf_enabled = true\n");
  CHECK(c.system.n_drops == 12);
  CHECK(c.system.master_seed == 99);
  CHECK(c.grid.schemes == std::vector<Scheme>{Scheme::TerrestrialIcic, Scheme::Cic});
  CHECK(c.grid.directions == std::vector<Direction>{Direction::Downlink});
  CHECK(c.grid.n_ues == std::vector<int>{10, 30});
  CHECK(c.system.qf_enabled);
}

TEST_CASE("scheme and direction keywords") {
  CHECK(parse_scheme_list("all").size() == 5);
  CHECK(parse_direction_list("both") == std::vector<Direction>{Direction::Uplink, Direction::Downlink});
  CHECK(parse_direction_list("ul") == std::vector<Direction>{Direction::Uplink});
  CHECK_THROWS_AS(parse_scheme_list("6"), ConfigError);
  CHECK_THROWS_AS(parse_direction_list("sideways"), ConfigError);
  CHECK(to_string(Direction::Uplink) == "ul");
  CHECK(to_string(Direction::Downlink) == "dl");
  CHECK(direction_from_string("dl") == Direction::Downlink);
  for (int s = 1; s <= 5; ++s) CHECK(to_int(scheme_from_int(s)) == s);
}

TEST_CASE("unknown keys are named") {
  try {
    parse_config("n_drops = 3\nbogus_key = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
  }
}

TEST_CASE("malformed values and lines") {
  CHECK_THROWS_AS(parse_config("n_drops = many\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_drops 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("qf_enabled = maybe\n"), ConfigError);
}

TEST_CASE("validation") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));

  c.system.n_uavs = 12;
  try {
    validate(c);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("n_uavs") != std::string::npos);
    CHECK(what.find("orthogonal") != std::string::npos);
  }

  c = {};
  c.system.rb_bandwidth_hz = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.grid.n_ues.clear();
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.system.n_drops = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("write_config round-trips") {
  RunConfig c;
  c.system.master_seed = 123456789012345ULL;
  c.system.cell_radius_m = 577.3502691896258;
  c.grid.n_ues = {5, 7};
  c.grid.schemes = {Scheme::Cic};
  c.system.forward_uav_message = true;
  const auto text = dump(c);
  const auto back = parse_config(text);
  CHECK(dump(back) == text);
  CHECK(back.system.cell_radius_m == c.system.cell_radius_m);
  CHECK(back.system.master_seed == c.system.master_seed);
}

TEST_CASE("sweep grid cardinality is schemes x directions x n_ues") {
  const RunConfig c;
  CHECK(c.grid.schemes.size() * c.grid.directions.size() * c.grid.n_ues.size() == 5 * 2 * 6);
}
