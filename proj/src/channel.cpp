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


#include "aerolink/channel.hpp"

#include <random>

namespace aerolink {

void assemble_composite(LinkGain& link) {
  link.composite_amplitude = std::sqrt(link.large_scale_linear()) * link.small_scale;
}

LinkGain sample_link(LinkClass cls, const Point3& tx, const Point3& rx, const std::optional<CellSite>& bs_site,
                     const ChannelParams& params, Rng& rng) {
  const double d3d = std::max(distance_3d(tx, rx), 1.0);
  const double d2d = distance_2d(tx, rx);

  Point3 ut = tx.z() >= rx.z() ? tx : rx;
  if (bs_site) ut = distance_3d(tx, bs_site->antenna()) < 1e-9 ? rx : tx;
  const double h_ut = ut.z();
  const double h_bs = bs_site ? bs_site->bs_height_m : params.bs_height_m;

  LinkGain link;
  link.is_los = unit_uniform(rng) < los_probability(cls, d2d, h_ut);
  link.path_loss_db = path_loss_db(cls, link.is_los, d3d, d2d, h_ut, params.fc_ghz, h_bs);
  link.shadowing_db = std::normal_distribution<double>(0.0, shadowing_sigma_db(cls, link.is_los, h_ut))(rng);
  link.antenna_gain_db = bs_site ? antenna_gain_db(elevation_angle_deg(*bs_site, ut), params.antenna) : 0.0;

  if (link.is_los && uses_aerial_model(cls, h_ut)) {
    link.small_scale = std::polar(1.0, 2.0 * std::numbers::pi * unit_uniform(rng));
  } else {
    std::normal_distribution<double> half(0.0, std::sqrt(0.5));
    const double re = half(rng);
    const double im = half(rng);
    link.small_scale = {re, im};
  }
  assemble_composite(link);
  return link;
}

}  // namespace aerolink
