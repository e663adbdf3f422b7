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


#ifndef AEROLINK_SCENARIO_HPP
#define AEROLINK_SCENARIO_HPP

#include "aerolink/channel.hpp"
#include "aerolink/config.hpp"
#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"
#include "aerolink/table.hpp"

#include <span>
#include <vector>

namespace aerolink {

// One Monte Carlo snapshot. Links are reciprocal: ue_bs(i, c) serves both the
// downlink c->i and the uplink i->c.
struct Drop {
  int drop_index = 0;
  std::vector<Point3> ue_positions;
  std::vector<Point3> uav_positions;
  std::vector<int> ue_serving_bs;
  std::vector<int> uav_serving_bs;
  Table<LinkGain> ue_bs;   // (ue, cell)
  Table<LinkGain> uav_bs;  // (uav, cell)
  Table<LinkGain> ue_uav;  // (ue, uav)

  int n_ues() const { return static_cast<int>(ue_positions.size()); }
  int n_uavs() const { return static_cast<int>(uav_positions.size()); }

  bool operator==(const Drop&) const = default;
};

// Uniform over the union of the layout's hexagons, by rejection from the bounding box.
Point2 sample_in_layout(const Layout& layout, Rng& rng);

double association_metric(const LinkGain& link, bool include_antenna);

// Index of the BS minimising path loss + shadowing (minus antenna gain when
// include_antenna); ties go to the lowest index. Fast fading never enters.
int associate(std::span<const LinkGain> links_per_bs, bool include_antenna);

// Pure function of (config, layout, drop_index). Node i's position and links
// come from streams keyed by i, so UE i is the same node at every n_ues.
Drop generate_drop(const SystemConfig& config, const Layout& layout, int drop_index);

}  // namespace aerolink

#endif  // AEROLINK_SCENARIO_HPP
