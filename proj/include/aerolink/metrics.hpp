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


#ifndef AEROLINK_METRICS_HPP
#define AEROLINK_METRICS_HPP

#include "aerolink/allocation.hpp"
#include "aerolink/cic.hpp"
#include "aerolink/config.hpp"
#include "aerolink/scenario.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <vector>

namespace aerolink {

struct NodeRef {
  enum class Kind { Ue, Uav };
  Kind kind = Kind::Ue;
  int id = 0;

  static NodeRef ue(int i) { return {Kind::Ue, i}; }
  static NodeRef uav(int j) { return {Kind::Uav, j}; }
};

// Sum spectral efficiencies of one drop, bps/Hz.
struct MetricsRecord {
  double uav_sum_rate = 0.0;
  double terrestrial_sum_rate = 0.0;
  double network_sum_rate = 0.0;
  std::vector<double> ue_rates;   // 0 for unscheduled UEs
  std::vector<double> uav_rates;

  bool operator==(const MetricsRecord&) const = default;
};

inline double spectral_efficiency(double sinr) { return std::log2(1.0 + sinr); }

template <typename Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;
template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

// Output SINR of the linear MMSE combiner, h^H R^{-1} h, for a desired
// effective channel h (power folded in) and Hermitian interference-plus-noise
// covariance R.
template <typename Scalar>
Scalar mmse_sinr(const Vector2c<Scalar>& h, const Matrix2c<Scalar>& covariance) {
  const Vector2c<Scalar> x = covariance.llt().solve(h);
  return std::real(h.dot(x));
}

// SINR of `desired` (a UE or UAV transmitting on rb) at BS receiver_cell.
// Cancelled UAV terms are dropped; a QF link to this receiver switches to
// two-observation MMSE combining with the helper's quantized copy.
// Throws ContractError if desired is not scheduled on rb at this receiver.
double uplink_sinr(int receiver_cell, NodeRef desired, int rb, const Drop& drop, const RbAllocation& alloc,
                   const CicPlan& plan, const SystemConfig& config);

// SINR at a UE or UAV receiving on rb. Every message is summed coherently over
// all BSs carrying it (serving BS plus helpers). Helper emissions reach
// terrestrial receivers only with honest_helper_accounting.
double downlink_sinr(NodeRef receiver, int rb, const Drop& drop, const RbAllocation& alloc, const CicPlan& plan,
                     const SystemConfig& config);

MetricsRecord sum_rates(const Drop& drop, const RbAllocation& alloc, const CicPlan& plan, const SystemConfig& config);

}  // namespace aerolink

#endif  // AEROLINK_METRICS_HPP
