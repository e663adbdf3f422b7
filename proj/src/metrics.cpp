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


#include "aerolink/metrics.hpp"

#include "aerolink/errors.hpp"

#include <map>
#include <string>

namespace aerolink {

namespace {

const LinkGain& bs_link(const Drop& drop, NodeRef node, int cell) {
  return node.kind == NodeRef::Kind::Ue ? drop.ue_bs(node.id, cell) : drop.uav_bs(node.id, cell);
}

int serving_cell(const Drop& drop, NodeRef node) {
  return node.kind == NodeRef::Kind::Ue ? drop.ue_serving_bs[node.id] : drop.uav_serving_bs[node.id];
}

bool scheduled_on(const RbAllocation& alloc, NodeRef node, int rb) {
  return node.kind == NodeRef::Kind::Ue ? alloc.ue_rb(node.id) == rb : alloc.uav_rb(node.id) == rb;
}

// Everyone transmitting on rb in the uplink.
std::vector<NodeRef> uplink_transmitters(const RbAllocation& alloc, int rb) {
  std::vector<NodeRef> out;
  for (int c = 0; c < alloc.n_cells(); ++c) {
    if (const int ue = alloc.ue_on(c, rb); ue != kNone) out.push_back(NodeRef::ue(ue));
  }
  if (const int uav = alloc.uav_on(rb); uav != kNone) out.push_back(NodeRef::uav(uav));
  return out;
}

}  // namespace

double uplink_sinr(int receiver_cell, NodeRef desired, int rb, const Drop& drop, const RbAllocation& alloc,
                   const CicPlan& plan, const SystemConfig& config) {
  if (!scheduled_on(alloc, desired, rb) || serving_cell(drop, desired) != receiver_cell) {
    throw ContractError("uplink SINR requested for a transmitter not scheduled on RB " + std::to_string(rb) +
                        " at cell " + std::to_string(receiver_cell));
  }
  const double p = config.tx_power_mw();
  const double noise = config.noise_power_mw();
  const auto transmitters = uplink_transmitters(alloc, rb);
  const int uav = alloc.uav_on(rb);

  const QfLink* qf = nullptr;
  if (desired.kind == NodeRef::Kind::Ue && uav != kNone && !plan.cancels(receiver_cell, uav)) {
    qf = plan.qf_link_for(receiver_cell, uav);
  }

  if (qf == nullptr) {
    double interference = 0.0;
    for (const auto& tx : transmitters) {
      if (tx.kind == desired.kind && tx.id == desired.id) continue;
      if (tx.kind == NodeRef::Kind::Uav && plan.cancels(receiver_cell, tx.id)) continue;
      interference += p * bs_link(drop, tx, receiver_cell).power_gain();
    }
    return p * bs_link(drop, desired, receiver_cell).power_gain() / (interference + noise);
  }

  const double sqrt_p = std::sqrt(p);
  auto observation = [&](NodeRef tx) {
    return Vector2c<double>{sqrt_p * bs_link(drop, tx, receiver_cell).composite_amplitude,
                            sqrt_p * bs_link(drop, tx, qf->helper_cell).composite_amplitude};
  };
  Matrix2c<double> covariance = Matrix2c<double>::Zero();
  covariance(0, 0) = noise;
  covariance(1, 1) = noise + qf->quantization_noise_mw;
  for (const auto& tx : transmitters) {
    if (tx.kind == desired.kind && tx.id == desired.id) continue;
    const auto v = observation(tx);
    covariance.noalias() += v * v.adjoint();
  }
  return mmse_sinr<double>(observation(desired), covariance);
}

double downlink_sinr(NodeRef receiver, int rb, const Drop& drop, const RbAllocation& alloc, const CicPlan& plan,
                     const SystemConfig& config) {
  if (!scheduled_on(alloc, receiver, rb)) {
    throw ContractError("downlink SINR requested for a receiver not scheduled on RB " + std::to_string(rb));
  }
  const double amp = std::sqrt(config.tx_power_mw());

  std::map<ComponentId, std::complex<double>> messages;
  for (int c = 0; c < alloc.n_cells(); ++c) {
    if (alloc.cell_uses(c, rb)) messages[ComponentId::cell(c)] += amp * bs_link(drop, receiver, c).composite_amplitude;
  }
  const int uav = alloc.uav_on(rb);
  if (uav != kNone) {
    messages[ComponentId::uav(uav)] += amp * bs_link(drop, receiver, drop.uav_serving_bs[uav]).composite_amplitude;
  }

  const bool helpers_visible = receiver.kind == NodeRef::Kind::Uav || config.honest_helper_accounting;
  if (const auto* rb_plan = plan.downlink_for(rb); rb_plan != nullptr && helpers_visible) {
    for (const auto& [key, w] : rb_plan->weights) {
      messages[key.second] += bs_link(drop, receiver, key.first).composite_amplitude * w;
    }
  }

  const ComponentId wanted = receiver.kind == NodeRef::Kind::Ue ? ComponentId::cell(drop.ue_serving_bs[receiver.id])
                                                                : ComponentId::uav(receiver.id);
  double signal = 0.0;
  double interference = 0.0;
  for (const auto& [id, a] : messages) {
    (id == wanted ? signal : interference) += std::norm(a);
  }
  return signal / (interference + config.noise_power_mw());
}

MetricsRecord sum_rates(const Drop& drop, const RbAllocation& alloc, const CicPlan& plan, const SystemConfig& config) {
  MetricsRecord record;
  record.ue_rates.assign(drop.n_ues(), 0.0);
  record.uav_rates.assign(drop.n_uavs(), 0.0);
  const bool uplink = config.direction == Direction::Uplink;

  for (int i = 0; i < drop.n_ues(); ++i) {
    const int rb = alloc.ue_rb(i);
    if (rb == kNone) continue;
    const auto node = NodeRef::ue(i);
    const double sinr = uplink ? uplink_sinr(drop.ue_serving_bs[i], node, rb, drop, alloc, plan, config)
                               : downlink_sinr(node, rb, drop, alloc, plan, config);
    record.ue_rates[i] = spectral_efficiency(sinr);
    record.terrestrial_sum_rate += record.ue_rates[i];
  }
  for (int j = 0; j < drop.n_uavs(); ++j) {
    const int rb = alloc.uav_rb(j);
    if (rb == kNone) continue;
    const auto node = NodeRef::uav(j);
    const double sinr = uplink ? uplink_sinr(drop.uav_serving_bs[j], node, rb, drop, alloc, plan, config)
                               : downlink_sinr(node, rb, drop, alloc, plan, config);
    record.uav_rates[j] = spectral_efficiency(sinr);
    record.uav_sum_rate += record.uav_rates[j];
  }
  record.network_sum_rate = record.uav_sum_rate + record.terrestrial_sum_rate;
  return record;
}

}  // namespace aerolink
