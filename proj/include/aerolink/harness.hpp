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


#ifndef AEROLINK_HARNESS_HPP
#define AEROLINK_HARNESS_HPP

#include "aerolink/cic.hpp"
#include "aerolink/config.hpp"
#include "aerolink/geometry.hpp"
#include "aerolink/metrics.hpp"
#include "aerolink/scenario.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace aerolink {

struct SweepRow {
  Scheme scheme = Scheme::Exclusive;
  Direction direction = Direction::Uplink;
  int n_ues = 0;
  int n_drops = 0;
  double uav_rate_mean = 0.0;
  double uav_rate_se = 0.0;
  double terr_rate_mean = 0.0;
  double terr_rate_se = 0.0;
  double net_rate_mean = 0.0;
  double net_rate_se = 0.0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  // Row for one sweep point; throws std::out_of_range when absent.
  const SweepRow& at(Scheme scheme, Direction direction, int n_ues) const;

  bool operator==(const SweepResult&) const = default;
};

struct SweepOptions {
  unsigned threads = 0;            // 0: AEROLINK_THREADS, else hardware concurrency
  std::ostream* progress = nullptr;
};

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Sample mean and standard error (sample std / sqrt(n)), summed in index order.
MeanAndError summarize(std::span<const double> samples);

// CIC plan for config.scheme/direction: empty unless the scheme is Cic.
CicPlan plan_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc, const SystemConfig& config);

// allocation -> optional CIC plan -> metrics for one drop.
MetricsRecord evaluate(const Drop& drop, const Layout& layout, const SystemConfig& point);

// Per-drop sum rates of one sweep point, indexed by drop.
struct PointSamples {
  SystemConfig point;
  std::vector<double> uav;
  std::vector<double> terrestrial;
  std::vector<double> network;
};

struct SweepSamples {
  std::vector<PointSamples> points;

  const PointSamples& at(Scheme scheme, Direction direction, int n_ues) const;
};

// Evaluates every (scheme, direction, n_ues) point over drops 0..n_drops-1 and
// keeps the per-drop values, so schemes can be compared drop by drop.
SweepSamples collect_samples(const SystemConfig& base, const SweepGrid& grid, const Layout& layout,
                             const SweepOptions& options = {});

// Means and standard errors, rows ordered scheme-major, then direction, then n_ues.
SweepResult aggregate(const SweepSamples& samples, const SweepGrid& grid);

// Every (scheme, direction, n_ues) point over drops 0..n_drops-1. A drop is
// generated once per n_ues and shared by all schemes and both directions.
// Output is independent of the thread count.
SweepResult run_sweep(const SystemConfig& base, const SweepGrid& grid, const Layout& layout,
                      const SweepOptions& options = {});

// Worker count: explicit request, else AEROLINK_THREADS (0 = auto), else hardware.
unsigned resolve_thread_count(unsigned requested);

inline constexpr const char* kCsvHeader =
    "scheme,direction,n_ues,n_drops,uav_rate_mean,uav_rate_se,terr_rate_mean,terr_rate_se,net_rate_mean,net_rate_se";

void write_csv(const SweepResult& result, std::ostream& os);
// Throws std::runtime_error naming the path on I/O failure.
void write_csv(const SweepResult& result, const std::filesystem::path& path);
SweepResult read_csv(std::istream& is);

// Multiplies every rate column by `factor` (e.g. the RB bandwidth for bit/s).
SweepResult scale_rates(SweepResult result, double factor);

}  // namespace aerolink

#endif  // AEROLINK_HARNESS_HPP
