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


#ifndef AEROLINK_CLI_HPP
#define AEROLINK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace aerolink {

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Returns the process exit status; diagnostics go to `err` as a
// single line naming the offending token.
//
//   simulate [--config FILE] --out FILE [--seed N] [--drops N]
//            [--scheme 1..5|all|LIST] [--direction ul|dl|both] [--ues LIST]
//            [--threads N] [--throughput]
//   validate-config --config FILE
//   print-defaults
//
// Command-line values override values read from the config file.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aerolink

#endif  // AEROLINK_CLI_HPP
