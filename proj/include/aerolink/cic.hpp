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


#ifndef AEROLINK_CIC_HPP
#define AEROLINK_CIC_HPP

#include "aerolink/allocation.hpp"
#include "aerolink/config.hpp"
#include "aerolink/geometry.hpp"
#include "aerolink/scenario.hpp"

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace aerolink {

// A message a helper BS may retransmit: the terrestrial message of a
// co-channel cell, or a UAV's own message.
struct ComponentId {
  enum class Kind { Cell, Uav };
  Kind kind = Kind::Cell;
  int id = 0;

  static ComponentId cell(int c) { return {Kind::Cell, c}; }
  static ComponentId uav(int u) { return {Kind::Uav, u}; }

  auto operator<=>(const ComponentId&) const = default;
};

// Quantize-and-forward link: helper_cell quantizes what it hears from `uav`
// and forwards it to target_cell, adding quantization_noise_mw of distortion.
struct QfLink {
  int helper_cell = kNone;
  int target_cell = kNone;
  int uav = kNone;
  double quantization_noise_mw = 0.0;

  bool operator==(const QfLink&) const = default;
};

// (helper cell, component) -> complex transmit amplitude in sqrt(mW).
using HelperWeights = std::map<std::pair<int, ComponentId>, std::complex<double>>;

struct DownlinkRbPlan {
  int rb = kNone;
  int uav = kNone;
  std::map<int, std::vector<int>> helpers;  // co-channel cell -> up to two idle helper cells
  HelperWeights weights;
  std::optional<int> uav_message_helper;

  bool operator==(const DownlinkRbPlan&) const = default;
};

struct CicPlan {
  std::set<std::pair<int, int>> uplink_cancellations;  // (co-channel cell, uav)
  std::vector<QfLink> qf_links;
  std::vector<DownlinkRbPlan> downlink;

  bool empty() const { return uplink_cancellations.empty() && qf_links.empty() && downlink.empty(); }
  bool cancels(int cell, int uav) const { return uplink_cancellations.contains({cell, uav}); }
  const QfLink* qf_link_for(int target_cell, int uav) const;
  const DownlinkRbPlan* downlink_for(int rb) const;

  bool operator==(const CicPlan&) const = default;
};

struct ResidualComponent {
  ComponentId id;
  std::complex<double> amplitude;  // as received at the UAV, sqrt(mW)
};

struct HelperResource {
  int id = kNone;
  std::complex<double> channel;  // helper -> UAV
  double budget_mw = 0.0;
  std::vector<ComponentId> serves;
};

// Splits each helper's power over the components it may serve so that the
// total residual power sum_k |c_k + sum_b g_b w_bk|^2 at the UAV is minimised.
// Contributions are phase-aligned against each residual and never overshoot it.
// Block-coordinate descent over helpers (strongest |g| first, ties to the lower
// id); each block has the closed-form water-filling solution
//   a = t/|g|                if it fits the budget,
//   a = sqrt(B) * t / ||t||  otherwise,
// where t are the residual magnitudes left by the other helpers.
// Throws PlanningError on non-positive budgets, unknown or duplicated
// components, or a component served by more than two helpers.
HelperWeights allocate_helper_power(std::span<const ResidualComponent> residuals,
                                    std::span<const HelperResource> helpers);

// Residual amplitude of every component after applying `weights`.
std::map<ComponentId, std::complex<double>> residual_after(std::span<const ResidualComponent> residuals,
                                                           std::span<const HelperResource> helpers,
                                                           const HelperWeights& weights);

// Cells in `pool` ordered by site distance to `from`, ties to the lower id.
std::vector<int> nearest_cells(const Layout& layout, int from, std::vector<int> pool, std::size_t count);

// Cells idle on rb: no terrestrial UE there, and not the UAV's serving cell.
std::vector<int> idle_cells(const RbAllocation& alloc, int rb, int uav_serving_cell);

// Uplink: the UAV's serving BS forwards the decoded UAV message to the two
// co-channel BSs nearest to it, which subtract it. With qf_enabled the next
// nearest co-channel BS gets a quantized copy from its nearest idle BS.
CicPlan plan_uplink_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc, const SystemConfig& config);

// Downlink: every co-channel BS forwards its terrestrial message to its two
// nearest idle BSs, which transmit cancelling copies towards the UAV.
CicPlan plan_downlink_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc,
                          const SystemConfig& config);

}  // namespace aerolink

#endif  // AEROLINK_CIC_HPP
