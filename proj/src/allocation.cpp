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


#include "aerolink/allocation.hpp"

#include "aerolink/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace aerolink {

RbAllocation::RbAllocation(int n_cells, int n_rbs, int n_ues, int n_uavs)
    : terrestrial_(n_cells, n_rbs, kNone), ue_rb_(n_ues, kNone), uav_rb_(n_uavs, kNone) {}

int RbAllocation::uav_on(int rb) const {
  const auto it = std::find(uav_rb_.begin(), uav_rb_.end(), rb);
  return it == uav_rb_.end() ? kNone : static_cast<int>(it - uav_rb_.begin());
}

std::vector<int> RbAllocation::cochannel_cells(int rb) const {
  std::vector<int> cells;
  for (int c = 0; c < n_cells(); ++c) {
    if (cell_uses(c, rb)) cells.push_back(c);
  }
  return cells;
}

std::vector<int> RbAllocation::unscheduled_ues() const {
  std::vector<int> out;
  for (int i = 0; i < n_ues(); ++i) {
    if (!is_scheduled(i)) out.push_back(i);
  }
  return out;
}

int RbAllocation::scheduled_count() const {
  return static_cast<int>(std::count_if(ue_rb_.begin(), ue_rb_.end(), [](int rb) { return rb != kNone; }));
}

void RbAllocation::schedule_ue(int ue, int cell, int rb) {
  if (cell_uses(cell, rb)) {
    throw ContractError("cell " + std::to_string(cell) + " already serves a UE on RB " + std::to_string(rb));
  }
  terrestrial_(cell, rb) = ue;
  ue_rb_[ue] = rb;
}

void RbAllocation::assign_uav(int uav, int rb) {
  const int holder = uav_on(rb);
  if (holder != kNone && holder != uav) {
    throw InfeasibleError("RB " + std::to_string(rb) + " already held by UAV " + std::to_string(holder));
  }
  uav_rb_[uav] = rb;
}

std::vector<int> random_order(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(pick_index(rng, static_cast<std::size_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

int first_tier_load(const RbAllocation& alloc, const Layout& layout, int cell, int rb) {
  int load = alloc.cell_uses(cell, rb) ? 1 : 0;
  for (const int n : layout.neighbor_map[cell]) load += alloc.cell_uses(n, rb) ? 1 : 0;
  return load;
}

RbAllocation allocate_uavs_reserved(const Drop& drop, const Layout& layout, const SystemConfig& config, Rng& rng) {
  if (drop.n_uavs() > config.n_rbs) {
    throw InfeasibleError("cannot give " + std::to_string(drop.n_uavs()) + " UAVs orthogonal RBs out of " +
                          std::to_string(config.n_rbs));
  }
  RbAllocation alloc(layout.size(), config.n_rbs, drop.n_ues(), drop.n_uavs());
  const auto perm = random_order(config.n_rbs, rng);
  for (int j = 0; j < drop.n_uavs(); ++j) alloc.assign_uav(j, perm[j]);
  return alloc;
}

RbAllocation allocate_terrestrial_icic(const Drop& drop, const Layout& layout, RbAllocation base,
                                       std::span<const RbMask> forbidden_rbs_per_cell, Rng& rng) {
  auto alloc = std::move(base);
  const int n_rbs = alloc.n_rbs();
  auto forbidden = [&](int cell, int rb) {
    return !forbidden_rbs_per_cell.empty() && forbidden_rbs_per_cell[cell][rb];
  };

  std::vector<int> best;
  for (const int ue : random_order(drop.n_ues(), rng)) {
    const int cell = drop.ue_serving_bs[ue];
    int best_load = std::numeric_limits<int>::max();
    best.clear();
    for (int rb = 0; rb < n_rbs; ++rb) {
      if (alloc.cell_uses(cell, rb) || forbidden(cell, rb)) continue;
      const int load = first_tier_load(alloc, layout, cell, rb);
      if (load < best_load) {
        best_load = load;
        best.assign(1, rb);
      } else if (load == best_load) {
        best.push_back(rb);
      }
    }
    if (best.empty()) continue;
    alloc.schedule_ue(ue, cell, best[pick_index(rng, best.size())]);
  }
  return alloc;
}

double sense_rb_power(int uav, int rb, Direction direction, const Drop& drop, const RbAllocation& alloc,
                      const SystemConfig& config) {
  const double p = config.tx_power_mw();
  const int serving = drop.uav_serving_bs[uav];
  double sensed = 0.0;
  if (direction == Direction::Downlink) {
    for (int c = 0; c < alloc.n_cells(); ++c) {
      if (c == serving) continue;
      const int other_uav = alloc.uav_on(rb);
      const bool transmits =
          alloc.cell_uses(c, rb) || (other_uav != kNone && other_uav != uav && drop.uav_serving_bs[other_uav] == c);
      if (transmits) sensed += p * drop.uav_bs(uav, c).large_scale_linear();
    }
  } else {
    for (int c = 0; c < alloc.n_cells(); ++c) {
      const int ue = alloc.ue_on(c, rb);
      if (ue != kNone) sensed += p * drop.ue_uav(ue, uav).large_scale_linear();
    }
  }
  return sensed;
}

std::vector<int> available_rbs(int uav, const Drop& drop, const Layout& layout, const RbAllocation& alloc) {
  const int serving = drop.uav_serving_bs[uav];
  std::vector<int> out;
  for (int rb = 0; rb < alloc.n_rbs(); ++rb) {
    const int holder = alloc.uav_on(rb);
    if (holder != kNone && holder != uav) continue;
    if (first_tier_load(alloc, layout, serving, rb) == 0) out.push_back(rb);
  }
  return out;
}

std::vector<int> fallback_rbs(int uav, const Drop& drop, const Layout& layout, const RbAllocation& alloc) {
  const int serving = drop.uav_serving_bs[uav];
  std::vector<int> unheld;
  for (int rb = 0; rb < alloc.n_rbs(); ++rb) {
    const int holder = alloc.uav_on(rb);
    if (holder == kNone || holder == uav) unheld.push_back(rb);
  }
  if (unheld.empty()) {
    throw InfeasibleError("every RB is held by another UAV; UAV " + std::to_string(uav) + " cannot be placed");
  }
  std::vector<int> candidates;
  std::copy_if(unheld.begin(), unheld.end(), std::back_inserter(candidates),
               [&](int rb) { return !alloc.cell_uses(serving, rb); });
  if (candidates.empty()) candidates = unheld;

  int best_load = std::numeric_limits<int>::max();
  std::vector<int> best;
  for (const int rb : candidates) {
    const int load = first_tier_load(alloc, layout, serving, rb);
    if (load < best_load) {
      best_load = load;
      best.assign(1, rb);
    } else if (load == best_load) {
      best.push_back(rb);
    }
  }
  return best;
}

std::vector<int> allocate_uav_scheme3(const Drop& drop, const Layout& layout, const RbAllocation& terrestrial, Rng& rng) {
  auto alloc = terrestrial;
  for (const int uav : random_order(drop.n_uavs(), rng)) {
    auto choices = available_rbs(uav, drop, layout, alloc);
    if (choices.empty()) choices = fallback_rbs(uav, drop, layout, alloc);
    alloc.assign_uav(uav, choices[pick_index(rng, choices.size())]);
  }
  return {alloc.uav_rbs().begin(), alloc.uav_rbs().end()};
}

std::vector<int> allocate_uav_scheme4(const Drop& drop, const Layout& layout, const SystemConfig& config,
                                      const RbAllocation& terrestrial, Rng& rng) {
  auto alloc = terrestrial;
  for (const int uav : random_order(drop.n_uavs(), rng)) {
    auto choices = available_rbs(uav, drop, layout, alloc);
    if (choices.empty()) choices = fallback_rbs(uav, drop, layout, alloc);
    int best_rb = kNone;
    double best_power = std::numeric_limits<double>::infinity();
    for (const int rb : choices) {  // ascending, so strict < keeps the lowest index on ties
      const double sensed = sense_rb_power(uav, rb, config.direction, drop, alloc, config);
      if (sensed < best_power) {
        best_power = sensed;
        best_rb = rb;
      }
    }
    alloc.assign_uav(uav, best_rb);
  }
  return {alloc.uav_rbs().begin(), alloc.uav_rbs().end()};
}

RbAllocation allocate(const Drop& drop, const Layout& layout, const SystemConfig& config) {
  const auto seed = config.master_seed;
  const auto idx = static_cast<std::uint64_t>(drop.drop_index);
  if (drop.n_uavs() > config.n_rbs) {
    throw InfeasibleError("n_uavs (" + std::to_string(drop.n_uavs()) + ") exceeds n_rbs (" +
                          std::to_string(config.n_rbs) + ")");
  }

  switch (config.scheme) {
    case Scheme::Exclusive: {
      auto rng = make_stream(seed, idx, StreamTag::UavReserved);
      return allocate_uavs_reserved(drop, layout, config, rng);
    }
    case Scheme::Opportunistic: {
      auto rng = make_stream(seed, idx, StreamTag::UavReserved);
      auto alloc = allocate_uavs_reserved(drop, layout, config, rng);
      RbMask uav_held(config.n_rbs, false);
      for (const int rb : alloc.uav_rbs()) uav_held[rb] = true;
      const std::vector<RbMask> forbidden(layout.size(), uav_held);
      auto icic_rng = make_stream(seed, idx, StreamTag::TerrestrialIcic);
      return allocate_terrestrial_icic(drop, layout, std::move(alloc), forbidden, icic_rng);
    }
    case Scheme::TerrestrialIcic:
    case Scheme::SensingIcic:
    case Scheme::Cic: {
      auto icic_rng = make_stream(seed, idx, StreamTag::TerrestrialIcic);
      auto alloc = allocate_terrestrial_icic(
          drop, layout, RbAllocation(layout.size(), config.n_rbs, drop.n_ues(), drop.n_uavs()), {}, icic_rng);
      std::vector<int> uav_rb;
      if (config.scheme == Scheme::TerrestrialIcic) {
        auto rng = make_stream(seed, idx, StreamTag::UavScheme3);
        uav_rb = allocate_uav_scheme3(drop, layout, alloc, rng);
      } else {
        auto rng = make_stream(seed, idx, StreamTag::UavScheme4);
        uav_rb = allocate_uav_scheme4(drop, layout, config, alloc, rng);
      }
      for (int j = 0; j < drop.n_uavs(); ++j) alloc.assign_uav(j, uav_rb[j]);
      return alloc;
    }
  }
  throw ConfigError("unknown scheme");
}

}  // namespace aerolink
