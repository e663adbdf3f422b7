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


#ifndef AEROLINK_CHANNEL_HPP
#define AEROLINK_CHANNEL_HPP

#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace aerolink {

enum class LinkClass { BsToTerrestrialUe, BsToUav, TerrestrialUeToUav };

// Vertical BS pattern, horizontally omnidirectional. Boresight sits at
// -downtilt_deg elevation.
struct AntennaPattern {
  double max_gain_dbi = 8.0;
  double downtilt_deg = 10.0;
  double beamwidth_deg = 10.0;
  double side_lobe_db = 20.0;
};

struct ChannelParams {
  double fc_ghz = 2.0;
  double bs_height_m = 25.0;
  AntennaPattern antenna;
};

struct LinkGain {
  bool is_los = false;
  double path_loss_db = 0.0;
  double shadowing_db = 0.0;
  double antenna_gain_db = 0.0;
  std::complex<double> small_scale{1.0, 0.0};
  std::complex<double> composite_amplitude{1.0, 0.0};

  // Large-scale gain in dB (fading excluded).
  double large_scale_db() const { return -path_loss_db - shadowing_db + antenna_gain_db; }
  double large_scale_linear() const { return std::pow(10.0, large_scale_db() / 10.0); }
  // |composite_amplitude|^2, the instantaneous power gain.
  double power_gain() const { return std::norm(composite_amplitude); }

  bool operator==(const LinkGain&) const = default;
};

namespace detail {
constexpr double speed_of_light = 3.0e8;
constexpr double aerial_min_height_m = 22.5;
constexpr double aerial_always_los_height_m = 100.0;
}  // namespace detail

// True when the aerial (UMa-AV) formulas apply to this endpoint.
template <typename Scalar>
bool uses_aerial_model(LinkClass cls, Scalar h_ut_m) {
  return cls != LinkClass::BsToTerrestrialUe && h_ut_m > Scalar(detail::aerial_min_height_m);
}

template <typename Scalar>
Scalar los_probability(LinkClass cls, Scalar d2d_m, Scalar h_ut_m) {
  using std::exp;
  using std::log10;
  using std::max;
  using std::min;
  using std::pow;
  if (uses_aerial_model(cls, h_ut_m)) {
    if (h_ut_m > Scalar(detail::aerial_always_los_height_m)) return Scalar(1);
    const Scalar p1 = Scalar(4300) * log10(h_ut_m) - Scalar(3800);
    const Scalar d1 = max(Scalar(460) * log10(h_ut_m) - Scalar(700), Scalar(18));
    if (d2d_m <= d1) return Scalar(1);
    return d1 / d2d_m + exp(-d2d_m / p1) * (Scalar(1) - d1 / d2d_m);
  }
  if (d2d_m <= Scalar(18)) return Scalar(1);
  // Height term saturates at the 23 m edge of the ground model.
  const Scalar h = min(h_ut_m, Scalar(23));
  const Scalar c_prime = h <= Scalar(13) ? Scalar(0) : pow((h - Scalar(13)) / Scalar(10), Scalar(1.5));
  const Scalar base = Scalar(18) / d2d_m + exp(-d2d_m / Scalar(63)) * (Scalar(1) - Scalar(18) / d2d_m);
  return min(Scalar(1),
             base * (Scalar(1) + c_prime * Scalar(1.25) * pow(d2d_m / Scalar(100), Scalar(3)) * exp(-d2d_m / Scalar(150))));
}

// Urban-macro path loss. Terrestrial links use the dual-slope LoS model with the
// breakpoint on d2D and the max()-bounded NLoS model; aerial endpoints use the
// UMa-AV expressions. h_bs_m only matters for the terrestrial breakpoint.
template <typename Scalar>
Scalar path_loss_db(LinkClass cls, bool is_los, Scalar d3d_m, Scalar d2d_m, Scalar h_ut_m, Scalar fc_ghz,
                    Scalar h_bs_m = Scalar(25)) {
  using std::log10;
  using std::max;
  const Scalar fc_term = Scalar(20) * log10(fc_ghz);
  if (uses_aerial_model(cls, h_ut_m)) {
    if (is_los) return Scalar(28) + Scalar(22) * log10(d3d_m) + fc_term;
    return Scalar(-17.5) + (Scalar(46) - Scalar(7) * log10(h_ut_m)) * log10(d3d_m) +
           Scalar(20) * log10(Scalar(40) * Scalar(std::numbers::pi) * fc_ghz / Scalar(3));
  }
  const Scalar d_bp = Scalar(4) * (h_bs_m - Scalar(1)) * (h_ut_m - Scalar(1)) * fc_ghz * Scalar(1e9) /
                      Scalar(detail::speed_of_light);
  Scalar los;
  if (d2d_m <= d_bp) {
    los = Scalar(28) + Scalar(22) * log10(d3d_m) + fc_term;
  } else {
    const Scalar dh = h_bs_m - h_ut_m;
    los = Scalar(28) + Scalar(40) * log10(d3d_m) + fc_term - Scalar(9) * log10(d_bp * d_bp + dh * dh);
  }
  if (is_los) return los;
  const Scalar nlos = Scalar(13.54) + Scalar(39.08) * log10(d3d_m) + fc_term - Scalar(0.6) * (h_ut_m - Scalar(1.5));
  return max(los, nlos);
}

template <typename Scalar>
Scalar shadowing_sigma_db(LinkClass cls, bool is_los, Scalar h_ut_m) {
  using std::exp;
  if (uses_aerial_model(cls, h_ut_m)) return is_los ? Scalar(4.64) * exp(Scalar(-0.0066) * h_ut_m) : Scalar(6);
  return is_los ? Scalar(4) : Scalar(6);
}

template <typename Scalar>
Scalar antenna_gain_db(Scalar elevation_deg, const AntennaPattern& pattern = {}) {
  using std::min;
  const Scalar x = (elevation_deg + Scalar(pattern.downtilt_deg)) / Scalar(pattern.beamwidth_deg);
  return Scalar(pattern.max_gain_dbi) - min(Scalar(12) * x * x, Scalar(pattern.side_lobe_db));
}

// Draws one link realisation. With bs_site set, the endpoint that is not the BS
// antenna is the UT and the vertical pattern is applied; otherwise the link is
// UE<->UAV and the UT height is the higher endpoint.
LinkGain sample_link(LinkClass cls, const Point3& tx, const Point3& rx, const std::optional<CellSite>& bs_site,
                     const ChannelParams& params, Rng& rng);

// Rebuilds composite_amplitude from the other fields.
void assemble_composite(LinkGain& link);

}  // namespace aerolink

#endif  // AEROLINK_CHANNEL_HPP
