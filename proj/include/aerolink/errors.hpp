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

#ifndef AEROLINK_ERRORS_HPP
#define AEROLINK_ERRORS_HPP

#include <stdexcept>

namespace aerolink {

// Bad or inconsistent configuration values (file, CLI or programmatic).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scheduling request that cannot be met, e.g. more UAVs than RBs.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlanningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (e.g. asked for the SINR of an unscheduled user).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace aerolink

#endif  // AEROLINK_ERRORS_HPP
