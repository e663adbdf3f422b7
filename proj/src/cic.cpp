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


#include "aerolink/cic.hpp"

#include "aerolink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace aerolink {

namespace {

constexpr int kMaxHelpersPerComponent = 2;
constexpr int kMaxSweeps = 200000;

std::string describe(const ComponentId& id) {
  return (id.kind == ComponentId::Kind::Cell ? "cell " : "uav ") + std::to_string(id.id);
}

}  // namespace

const QfLink* CicPlan::qf_link_for(int target_cell, int uav) const {
  for (const auto& q : qf_links) {
    if (q.target_cell == target_cell && q.uav == uav) return &q;
  }
  return nullptr;
}

const DownlinkRbPlan* CicPlan::downlink_for(int rb) const {
  for (const auto& d : downlink) {
    if (d.rb == rb) return &d;
  }
  return nullptr;
}

HelperWeights allocate_helper_power(std::span<const ResidualComponent> residuals,
                                    std::span<const HelperResource> helpers) {
  const auto n_comp = residuals.size();
  std::map<ComponentId, std::size_t> index;
  for (std::size_t k = 0; k < n_comp; ++k) {
    if (!index.emplace(residuals[k].id, k).second) throw PlanningError("duplicate component " + describe(residuals[k].id));
  }

  // members[b] = component indices helper b may serve.
  std::vector<std::vector<std::size_t>> members(helpers.size());
  std::vector<int> served_by(n_comp, 0);
  for (std::size_t b = 0; b < helpers.size(); ++b) {
    const auto& h = helpers[b];
    if (!(h.budget_mw > 0.0)) throw PlanningError("helper " + std::to_string(h.id) + " has a non-positive power budget");
    for (const auto& c : h.serves) {
      const auto it = index.find(c);
      if (it == index.end()) {
        throw PlanningError("helper " + std::to_string(h.id) + " references unknown component " + describe(c));
      }
      if (std::find(members[b].begin(), members[b].end(), it->second) != members[b].end()) continue;
      members[b].push_back(it->second);
      if (++served_by[it->second] > kMaxHelpersPerComponent) {
        throw PlanningError("component " + describe(c) + " is served by more than two helpers");
      }
    }
  }

  std::vector<std::size_t> order(helpers.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ga = std::abs(helpers[a].channel);
    const double gb = std::abs(helpers[b].channel);
    if (ga != gb) return ga > gb;
    return helpers[a].id < helpers[b].id;
  });

  // amp[b][m]: real, non-negative amplitude helper b spends on members[b][m].
  std::vector<std::vector<double>> amp(helpers.size());
  std::vector<double> covered(n_comp, 0.0);  // sum_b |g_b| * amp, per component
  double scale = 0.0;
  for (std::size_t b = 0; b < helpers.size(); ++b) {
    amp[b].assign(members[b].size(), 0.0);
    scale = std::max(scale, std::sqrt(helpers[b].budget_mw));
  }
  const double tolerance = 1e-15 * std::max(scale, 1e-300);

  std::vector<double> target;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_change = 0.0;
    for (const auto b : order) {
      const double g = std::abs(helpers[b].channel);
      if (g == 0.0 || members[b].empty()) continue;
      target.assign(members[b].size(), 0.0);
      double need = 0.0;
      for (std::size_t m = 0; m < members[b].size(); ++m) {
        const auto k = members[b][m];
        const double others = covered[k] - g * amp[b][m];
        target[m] = std::max(std::abs(residuals[k].amplitude) - others, 0.0) / g;
        need += target[m] * target[m];
      }
      const double shrink = need <= helpers[b].budget_mw ? 1.0 : std::sqrt(helpers[b].budget_mw / need);
      for (std::size_t m = 0; m < members[b].size(); ++m) {
        const auto k = members[b][m];
        const double next = target[m] * shrink;
        max_change = std::max(max_change, std::abs(next - amp[b][m]));
        covered[k] += g * (next - amp[b][m]);
        amp[b][m] = next;
      }
    }
    if (max_change <= tolerance) break;
  }

  HelperWeights weights;
  for (std::size_t b = 0; b < helpers.size(); ++b) {
    const auto g = helpers[b].channel;
    for (std::size_t m = 0; m < members[b].size(); ++m) {
      const auto& comp = residuals[members[b][m]];
      std::complex<double> w{0.0, 0.0};
      if (amp[b][m] > 0.0 && std::abs(comp.amplitude) > 0.0) {
        // g * w = -|g| a * (c / |c|): opposes the residual phasor.
        w = -(comp.amplitude / std::abs(comp.amplitude)) * (std::conj(g) / std::abs(g)) * amp[b][m];
      }
      weights[{helpers[b].id, comp.id}] = w;
    }
  }
  return weights;
}

std::map<ComponentId, std::complex<double>> residual_after(std::span<const ResidualComponent> residuals,
                                                           std::span<const HelperResource> helpers,
                                                           const HelperWeights& weights) {
  std::map<ComponentId, std::complex<double>> out;
  for (const auto& r : residuals) out[r.id] = r.amplitude;
  for (const auto& h : helpers) {
    for (const auto& c : h.serves) {
      if (const auto it = weights.find({h.id, c}); it != weights.end()) out[c] += h.channel * it->second;
    }
  }
  return out;
}

std::vector<int> nearest_cells(const Layout& layout, int from, std::vector<int> pool, std::size_t count) {
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
    const double da = layout.site_distance(from, a);
    const double db = layout.site_distance(from, b);
    if (da != db) return da < db;
    return a < b;
  });
  if (pool.size() > count) pool.resize(count);
  return pool;
}

std::vector<int> idle_cells(const RbAllocation& alloc, int rb, int uav_serving_cell) {
  std::vector<int> out;
  for (int c = 0; c < alloc.n_cells(); ++c) {
    if (c != uav_serving_cell && !alloc.cell_uses(c, rb)) out.push_back(c);
  }
  return out;
}

CicPlan plan_uplink_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc, const SystemConfig& config) {
  CicPlan plan;
  const double p = config.tx_power_mw();
  const double noise = config.noise_power_mw();
  for (int u = 0; u < drop.n_uavs(); ++u) {
    const int rb = alloc.uav_rb(u);
    if (rb == kNone) continue;
    const int serving = drop.uav_serving_bs[u];
    auto cochannel = alloc.cochannel_cells(rb);
    std::erase(cochannel, serving);
    if (cochannel.empty()) continue;

    const auto ranked = nearest_cells(layout, serving, cochannel, cochannel.size());
    for (std::size_t i = 0; i < ranked.size() && i < 2; ++i) plan.uplink_cancellations.insert({ranked[i], u});

    if (!config.qf_enabled || ranked.size() < 3) continue;
    const int target = ranked[2];
    const auto idle = nearest_cells(layout, target, idle_cells(alloc, rb, serving), 1);
    if (idle.empty()) continue;
    const int helper = idle.front();

    double received = noise + p * drop.uav_bs(u, helper).power_gain();
    for (const int c : alloc.cochannel_cells(rb)) received += p * drop.ue_bs(alloc.ue_on(c, rb), helper).power_gain();
    const double levels = std::pow(2.0, 2.0 * config.qf_bits) - 1.0;
    plan.qf_links.push_back({helper, target, u, received / levels});
  }
  return plan;
}

CicPlan plan_downlink_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc,
                          const SystemConfig& config) {
  CicPlan plan;
  const double amp = std::sqrt(config.tx_power_mw());
  for (int u = 0; u < drop.n_uavs(); ++u) {
    const int rb = alloc.uav_rb(u);
    if (rb == kNone) continue;
    const int serving = drop.uav_serving_bs[u];
    const auto cochannel = alloc.cochannel_cells(rb);
    const auto idle = idle_cells(alloc, rb, serving);

    DownlinkRbPlan rb_plan;
    rb_plan.rb = rb;
    rb_plan.uav = u;

    std::vector<ResidualComponent> residuals;
    std::map<int, HelperResource> resources;
    auto helper_entry = [&](int cell) -> HelperResource& {
      auto [it, inserted] = resources.try_emplace(cell);
      if (inserted) it->second = {cell, drop.uav_bs(u, cell).composite_amplitude, config.tx_power_mw(), {}};
      return it->second;
    };

    for (const int k : cochannel) {
      auto chosen = nearest_cells(layout, k, idle, 2);
      if (chosen.empty()) continue;
      residuals.push_back({ComponentId::cell(k), amp * drop.uav_bs(u, k).composite_amplitude});
      for (const int b : chosen) helper_entry(b).serves.push_back(ComponentId::cell(k));
      rb_plan.helpers[k] = std::move(chosen);
    }
    if (config.forward_uav_message) {
      const auto chosen = nearest_cells(layout, serving, idle, 1);
      if (!chosen.empty()) {
        // Opposing the negated desired phasor adds in phase with the serving BS.
        residuals.push_back({ComponentId::uav(u), -amp * drop.uav_bs(u, serving).composite_amplitude});
        helper_entry(chosen.front()).serves.push_back(ComponentId::uav(u));
        rb_plan.uav_message_helper = chosen.front();
      }
    }
    if (residuals.empty()) continue;

    std::vector<HelperResource> helpers;
    for (auto& [cell, res] : resources) helpers.push_back(std::move(res));
    rb_plan.weights = allocate_helper_power(residuals, helpers);
    plan.downlink.push_back(std::move(rb_plan));
  }
  return plan;
}

}  // namespace aerolink
