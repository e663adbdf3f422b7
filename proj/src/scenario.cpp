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


#include "aerolink/scenario.hpp"

#include <limits>

namespace aerolink {

Point2 sample_in_layout(const Layout& layout, Rng& rng) {
  const auto [lo, hi] = layout.bounding_box();
  while (true) {
    const Point2 p{lo.x() + (hi.x() - lo.x()) * unit_uniform(rng), lo.y() + (hi.y() - lo.y()) * unit_uniform(rng)};
    if (layout.contains(p)) return p;
  }
}

double association_metric(const LinkGain& link, bool include_antenna) {
  return link.path_loss_db + link.shadowing_db - (include_antenna ? link.antenna_gain_db : 0.0);
}

int associate(std::span<const LinkGain> links_per_bs, bool include_antenna) {
  int best = -1;
  double best_metric = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < links_per_bs.size(); ++c) {
    const double m = association_metric(links_per_bs[c], include_antenna);
    if (m < best_metric) {
      best_metric = m;
      best = static_cast<int>(c);
    }
  }
  return best;
}

Drop generate_drop(const SystemConfig& config, const Layout& layout, int drop_index) {
  const auto seed = config.master_seed;
  const auto idx = static_cast<std::uint64_t>(drop_index);
  const auto params = config.channel();

  Drop drop;
  drop.drop_index = drop_index;
  drop.ue_positions.reserve(config.n_ues);
  for (int i = 0; i < config.n_ues; ++i) {
    auto rng = make_stream(seed, idx, StreamTag::UePosition, i);
    const Point2 p = sample_in_layout(layout, rng);
    drop.ue_positions.emplace_back(p.x(), p.y(), config.ue_height_m);
  }
  for (int j = 0; j < config.n_uavs; ++j) {
    auto rng = make_stream(seed, idx, StreamTag::UavPosition, j);
    const Point2 p = sample_in_layout(layout, rng);
    drop.uav_positions.emplace_back(p.x(), p.y(), config.uav_altitude_m);
  }

  const int n_cells = layout.size();
  drop.ue_bs = Table<LinkGain>(config.n_ues, n_cells);
  drop.uav_bs = Table<LinkGain>(config.n_uavs, n_cells);
  drop.ue_uav = Table<LinkGain>(config.n_ues, config.n_uavs);

  for (int i = 0; i < config.n_ues; ++i) {
    auto rng = make_stream(seed, idx, StreamTag::UeBsLink, i);
    for (const auto& site : layout.cells) {
      drop.ue_bs(i, site.id) =
          sample_link(LinkClass::BsToTerrestrialUe, site.antenna(), drop.ue_positions[i], site, params, rng);
    }
  }
  for (int j = 0; j < config.n_uavs; ++j) {
    auto rng = make_stream(seed, idx, StreamTag::UavBsLink, j);
    for (const auto& site : layout.cells) {
      drop.uav_bs(j, site.id) = sample_link(LinkClass::BsToUav, site.antenna(), drop.uav_positions[j], site, params, rng);
    }
  }
  for (int i = 0; i < config.n_ues; ++i) {
    auto rng = make_stream(seed, idx, StreamTag::UeUavLink, i);
    for (int j = 0; j < config.n_uavs; ++j) {
      drop.ue_uav(i, j) = sample_link(LinkClass::TerrestrialUeToUav, drop.ue_positions[i], drop.uav_positions[j],
                                      std::nullopt, params, rng);
    }
  }

  drop.ue_serving_bs.resize(config.n_ues);
  for (int i = 0; i < config.n_ues; ++i) {
    drop.ue_serving_bs[i] = associate(drop.ue_bs.row(i), config.association_includes_antenna);
  }
  drop.uav_serving_bs.resize(config.n_uavs);
  for (int j = 0; j < config.n_uavs; ++j) {
    drop.uav_serving_bs[j] = associate(drop.uav_bs.row(j), config.association_includes_antenna);
  }
  return drop;
}

}  // namespace aerolink
