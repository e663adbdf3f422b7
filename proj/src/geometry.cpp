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


#include "aerolink/geometry.hpp"

#include "aerolink/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace aerolink {

namespace {

Point2 unit_direction(int k) {
  const double a = (std::numbers::pi / 3.0) * (k % 6);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

double Layout::inter_site_distance() const { return std::sqrt(3.0) * cell_radius_m; }

int Layout::cell_of(const Point2& p) const {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& c : cells) {
    const double d = (p - c.center).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c.id;
    }
  }
  if (best < 0) return -1;

  // Edge normals of a hexagon whose flat sides face its six neighbours.
  const double apothem = 0.5 * inter_site_distance() * (1.0 + 1e-12);
  const Point2 rel = p - cells[best].center;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(rel.dot(unit_direction(k))) > apothem) return -1;
  }
  return best;
}

std::pair<Point2, Point2> Layout::bounding_box() const {
  Point2 lo = Point2::Constant(std::numeric_limits<double>::infinity());
  Point2 hi = -lo;
  for (const auto& c : cells) {
    lo = lo.cwiseMin(c.center);
    hi = hi.cwiseMax(c.center);
  }
  lo.array() -= cell_radius_m;
  hi.array() += cell_radius_m;
  return {lo, hi};
}

Layout build_layout(int tiers, double cell_radius_m, double bs_height_m) {
  if (tiers < 0) throw ConfigError("tiers must be >= 0, got " + std::to_string(tiers));
  if (!(cell_radius_m > 0.0)) throw ConfigError("cell_radius_m must be positive");
  if (!(bs_height_m > 0.0)) throw ConfigError("bs_height_m must be positive");

  Layout layout;
  layout.tiers = tiers;
  layout.cell_radius_m = cell_radius_m;
  const double isd = layout.inter_site_distance();

  layout.cells.reserve(cell_count(tiers));
  layout.cells.push_back({0, Point2::Zero(), bs_height_m});
  for (int t = 1; t <= tiers; ++t) {
    for (int k = 0; k < 6; ++k) {
      // Side k runs from corner t*e_k towards corner t*e_{k+1}; the step is e_{k+2}.
      const Point2 corner = t * isd * unit_direction(k);
      const Point2 step = isd * unit_direction(k + 2);
      for (int j = 0; j < t; ++j) {
        layout.cells.push_back({static_cast<int>(layout.cells.size()), corner + j * step, bs_height_m});
      }
    }
  }

  const double reach = 1.01 * isd;
  layout.neighbor_map.assign(layout.cells.size(), {});
  for (int i = 0; i < layout.size(); ++i) {
    for (int j = 0; j < layout.size(); ++j) {
      if (i != j && layout.site_distance(i, j) <= reach) layout.neighbor_map[i].push_back(j);
    }
  }
  return layout;
}

double elevation_angle_deg(const CellSite& bs, const Point3& node) {
  const Point3 a = bs.antenna();
  const double horizontal = distance_2d(a, node);
  const double vertical = node.z() - a.z();
  if (horizontal == 0.0 && vertical == 0.0) throw GeometryError("node coincides with BS antenna of cell " + std::to_string(bs.id));
  if (horizontal == 0.0) return vertical > 0.0 ? 90.0 : -90.0;
  return std::atan2(vertical, horizontal) * 180.0 / std::numbers::pi;
}

}  // namespace aerolink
