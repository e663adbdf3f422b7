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


#ifndef AEROLINK_GEOMETRY_HPP
#define AEROLINK_GEOMETRY_HPP

#include <Eigen/Core>

#include <vector>

namespace aerolink {

using Point2 = Eigen::Vector2d;
using Point3 = Eigen::Vector3d;

struct CellSite {
  int id = 0;
  Point2 center = Point2::Zero();
  double bs_height_m = 25.0;

  Point3 antenna() const { return {center.x(), center.y(), bs_height_m}; }
};

// Hexagonal multi-tier layout centred at the origin. cell_radius_m is the hex
// circumradius, so first-tier sites are sqrt(3) * cell_radius_m apart.
// No wrap-around: boundary cells have fewer than six neighbours.
struct Layout {
  std::vector<CellSite> cells;
  int tiers = 0;
  double cell_radius_m = 0.0;
  std::vector<std::vector<int>> neighbor_map;

  int size() const { return static_cast<int>(cells.size()); }
  double inter_site_distance() const;
  double site_distance(int a, int b) const { return (cells[a].center - cells[b].center).norm(); }

  // Cell whose hexagon contains p, or -1 when p lies outside the union.
  int cell_of(const Point2& p) const;
  bool contains(const Point2& p) const { return cell_of(p) >= 0; }

  // Axis-aligned box enclosing every hexagon: {min corner, max corner}.
  std::pair<Point2, Point2> bounding_box() const;
};

// Cells are numbered tier by tier, counter-clockwise within a tier starting on
// the +x axis. Throws ConfigError for negative tiers or non-positive dimensions.
Layout build_layout(int tiers, double cell_radius_m, double bs_height_m);

// Number of cells in a layout with the given tier count: 1 + 3t(t+1).
constexpr int cell_count(int tiers) { return 1 + 3 * tiers * (tiers + 1); }

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance_3d(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance_2d(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a.template head<2>() - b.template head<2>()).norm();
}

// Elevation of `node` as seen from the BS antenna, degrees in (-90, 90].
// Throws GeometryError when node coincides with the antenna.
double elevation_angle_deg(const CellSite& bs, const Point3& node);

}  // namespace aerolink

#endif  // AEROLINK_GEOMETRY_HPP
