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


#ifndef AEROLINK_ALLOCATION_HPP
#define AEROLINK_ALLOCATION_HPP

#include "aerolink/config.hpp"
#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"
#include "aerolink/scenario.hpp"
#include "aerolink/table.hpp"

#include <span>
#include <vector>

namespace aerolink {

inline constexpr int kNone = -1;

// Per-RB schedule. At most one terrestrial UE per (cell, RB); UAV RBs are
// pairwise distinct. The UAV RB list doubles as the broadcast RB-index
// information every BS in the region sees.
class RbAllocation {
 public:
  RbAllocation() = default;
  RbAllocation(int n_cells, int n_rbs, int n_ues, int n_uavs);

  int n_cells() const { return terrestrial_.rows(); }
  int n_rbs() const { return terrestrial_.cols(); }
  int n_ues() const { return static_cast<int>(ue_rb_.size()); }
  int n_uavs() const { return static_cast<int>(uav_rb_.size()); }

  // UE scheduled in `cell` on `rb`, or kNone.
  int ue_on(int cell, int rb) const { return terrestrial_(cell, rb); }
  bool cell_uses(int cell, int rb) const { return terrestrial_(cell, rb) != kNone; }
  int ue_rb(int ue) const { return ue_rb_[ue]; }
  bool is_scheduled(int ue) const { return ue_rb_[ue] != kNone; }

  int uav_rb(int uav) const { return uav_rb_[uav]; }
  std::span<const int> uav_rbs() const { return uav_rb_; }
  // UAV holding `rb`, or kNone.
  int uav_on(int rb) const;

  // Cells serving a terrestrial UE on rb, ascending.
  std::vector<int> cochannel_cells(int rb) const;
  std::vector<int> unscheduled_ues() const;
  int scheduled_count() const;

  void schedule_ue(int ue, int cell, int rb);
  void assign_uav(int uav, int rb);

  bool operator==(const RbAllocation&) const = default;

 private:
  Table<int> terrestrial_;
  std::vector<int> ue_rb_;
  std::vector<int> uav_rb_;
};

using RbMask = std::vector<bool>;

// Terrestrial users on rb in `cell` and its first-tier neighbours.
int first_tier_load(const RbAllocation& alloc, const Layout& layout, int cell, int rb);

// Exclusive reservation: a random permutation of RB indices truncated to
// n_uavs. No terrestrial UE is scheduled. Throws InfeasibleError if n_uavs > n_rbs.
RbAllocation allocate_uavs_reserved(const Drop& drop, const Layout& layout, const SystemConfig& config, Rng& rng);

// Greedy terrestrial ICIC over UEs in random order. Each UE takes an RB free in
// its cell and not forbidden there, minimising the first-tier co-channel count
// (ties uniform). UEs with no admissible RB stay unscheduled. `base` supplies
// pre-assigned UAV RBs; its terrestrial map must be empty.
RbAllocation allocate_terrestrial_icic(const Drop& drop, const Layout& layout, RbAllocation base,
                                       std::span<const RbMask> forbidden_rbs_per_cell, Rng& rng);

// Large-scale power (mW) a UAV senses on rb: co-channel BS transmissions in the
// downlink, co-channel terrestrial UE transmissions in the uplink. The UAV's
// own serving BS is excluded.
double sense_rb_power(int uav, int rb, Direction direction, const Drop& drop, const RbAllocation& alloc,
                      const SystemConfig& config);

// RBs free in the serving cell and its first tier and not held by another UAV.
std::vector<int> available_rbs(int uav, const Drop& drop, const Layout& layout, const RbAllocation& alloc);

// Candidates when nothing is available: unheld RBs (preferring ones the
// serving cell does not use) with the minimum first-tier co-channel count.
std::vector<int> fallback_rbs(int uav, const Drop& drop, const Layout& layout, const RbAllocation& alloc);

// Terrestrial-ICIC UAV assignment: uniform pick from the available set.
std::vector<int> allocate_uav_scheme3(const Drop& drop, const Layout& layout, const RbAllocation& terrestrial, Rng& rng);

// Sensing-assisted assignment: argmin sensed power over the available set
// (or the fallback set), ties to the lowest RB index.
std::vector<int> allocate_uav_scheme4(const Drop& drop, const Layout& layout, const SystemConfig& config,
                                      const RbAllocation& terrestrial, Rng& rng);

// Full scheduling pipeline for config.scheme / config.direction. Scheme 5 uses
// the scheme-4 allocation. Each stage draws from its own per-drop stream.
RbAllocation allocate(const Drop& drop, const Layout& layout, const SystemConfig& config);

// Seeded Fisher-Yates permutation of 0..n-1.
std::vector<int> random_order(int n, Rng& rng);

}  // namespace aerolink

#endif  // AEROLINK_ALLOCATION_HPP
