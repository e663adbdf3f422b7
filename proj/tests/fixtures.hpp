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


// Hand-built drops with prescribed link amplitudes, for tests that need exact
// control over every channel.

#ifndef AEROLINK_TESTS_FIXTURES_HPP
#define AEROLINK_TESTS_FIXTURES_HPP

#include "aerolink/scenario.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace aerolink::testing {

// A link whose composite amplitude is exactly `amp`; large-scale terms are
// set so the LinkGain invariant holds.
inline LinkGain link_with_amplitude(std::complex<double> amp) {
  LinkGain g;
  g.is_los = true;
  const double mag = std::abs(amp);
  g.path_loss_db = mag > 0.0 ? -20.0 * std::log10(mag) : 400.0;
  g.small_scale = mag > 0.0 ? amp / mag : std::complex<double>{1.0, 0.0};
  g.composite_amplitude = mag > 0.0 ? amp : std::complex<double>{0.0, 0.0};
  return g;
}

// Drop over `layout` with every link amplitude zero. UEs sit at the centre of
// their serving cell, UAVs 200 m above theirs.
inline Drop blank_drop(const Layout& layout, const std::vector<int>& ue_cells, const std::vector<int>& uav_cells) {
  Drop d;
  const int n_cells = layout.size();
  for (const int c : ue_cells) {
    d.ue_positions.push_back({layout.cells[c].center.x(), layout.cells[c].center.y(), 1.5});
    d.ue_serving_bs.push_back(c);
  }
  for (const int c : uav_cells) {
    d.uav_positions.push_back({layout.cells[c].center.x(), layout.cells[c].center.y(), 200.0});
    d.uav_serving_bs.push_back(c);
  }
  const auto zero = link_with_amplitude(0.0);
  d.ue_bs = Table<LinkGain>(d.n_ues(), n_cells, zero);
  d.uav_bs = Table<LinkGain>(d.n_uavs(), n_cells, zero);
  d.ue_uav = Table<LinkGain>(d.n_ues(), d.n_uavs(), zero);
  return d;
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

}  // namespace aerolink::testing

#endif  // AEROLINK_TESTS_FIXTURES_HPP
