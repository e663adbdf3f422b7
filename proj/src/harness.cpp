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


#include "aerolink/harness.hpp"

#include "aerolink/allocation.hpp"
#include "aerolink/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace aerolink {

namespace {

std::string point_label(const SystemConfig& p) {
  return "scheme=" + std::to_string(to_int(p.scheme)) + " direction=" + std::string(to_string(p.direction)) +
         " n_ues=" + std::to_string(p.n_ues);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace

const SweepRow& SweepResult::at(Scheme scheme, Direction direction, int n_ues) const {
  for (const auto& r : rows) {
    if (r.scheme == scheme && r.direction == direction && r.n_ues == n_ues) return r;
  }
  throw std::out_of_range("no sweep row for scheme " + std::to_string(to_int(scheme)) + " " +
                          std::string(to_string(direction)) + " n_ues=" + std::to_string(n_ues));
}

MeanAndError summarize(std::span<const double> samples) {
  MeanAndError out;
  if (samples.empty()) return out;
  double sum = 0.0;
  for (const double s : samples) sum += s;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) return out;
  double ss = 0.0;
  for (const double s : samples) ss += (s - out.mean) * (s - out.mean);
  const double n = static_cast<double>(samples.size());
  out.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return out;
}

CicPlan plan_cic(const Drop& drop, const Layout& layout, const RbAllocation& alloc, const SystemConfig& config) {
  if (config.scheme != Scheme::Cic) return {};
  return config.direction == Direction::Uplink ? plan_uplink_cic(drop, layout, alloc, config)
                                               : plan_downlink_cic(drop, layout, alloc, config);
}

MetricsRecord evaluate(const Drop& drop, const Layout& layout, const SystemConfig& point) {
  const auto alloc = allocate(drop, layout, point);
  const auto plan = plan_cic(drop, layout, alloc, point);
  return sum_rates(drop, alloc, plan, point);
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AEROLINK_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw ConfigError("AEROLINK_THREADS must be a non-negative integer");
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

const PointSamples& SweepSamples::at(Scheme scheme, Direction direction, int n_ues) const {
  for (const auto& p : points) {
    if (p.point.scheme == scheme && p.point.direction == direction && p.point.n_ues == n_ues) return p;
  }
  throw std::out_of_range("no samples for scheme " + std::to_string(to_int(scheme)) + " " +
                          std::string(to_string(direction)) + " n_ues=" + std::to_string(n_ues));
}

SweepSamples collect_samples(const SystemConfig& base, const SweepGrid& grid, const Layout& layout,
                             const SweepOptions& options) {
  validate(RunConfig{base, grid});
  const int n_drops = base.n_drops;
  const unsigned threads = std::min<unsigned>(resolve_thread_count(options.threads), static_cast<unsigned>(n_drops));

  SweepSamples out;
  for (const int n_ues : grid.n_ues) {
    const auto first = out.points.size();
    for (const auto scheme : grid.schemes) {
      for (const auto direction : grid.directions) {
        PointSamples ps;
        ps.point = base;
        ps.point.scheme = scheme;
        ps.point.direction = direction;
        ps.point.n_ues = n_ues;
        ps.uav.assign(n_drops, 0.0);
        ps.terrestrial.assign(n_drops, 0.0);
        ps.network.assign(n_drops, 0.0);
        out.points.push_back(std::move(ps));
      }
    }
    const std::span<PointSamples> points(out.points.data() + first, out.points.size() - first);
    auto drop_config = base;
    drop_config.n_ues = n_ues;

    // Each (point, drop) slot is written by exactly one worker.
    std::atomic<int> next{0};
    std::mutex error_mutex;
    int error_drop = n_drops;
    std::string error_text;

    auto worker = [&] {
      while (true) {
        const int d = next.fetch_add(1);
        if (d >= n_drops) return;
        std::size_t current = 0;
        try {
          const auto drop = generate_drop(drop_config, layout, d);
          for (current = 0; current < points.size(); ++current) {
            const auto rec = evaluate(drop, layout, points[current].point);
            points[current].uav[d] = rec.uav_sum_rate;
            points[current].terrestrial[d] = rec.terrestrial_sum_rate;
            points[current].network[d] = rec.network_sum_rate;
          }
        } catch (const std::exception& e) {
          const std::lock_guard lock(error_mutex);
          if (d < error_drop) {
            error_drop = d;
            const auto& where = points[std::min(current, points.size() - 1)].point;
            error_text = "sweep point (" + point_label(where) + ") drop " + std::to_string(d) + ": " + e.what();
          }
        }
      }
    };

    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error_drop < n_drops) throw std::runtime_error(error_text);

    if (options.progress != nullptr) {
      *options.progress << "[aerolink] n_ues=" << n_ues << ": " << points.size() << " points x " << n_drops
                        << " drops done\n";
    }
  }
  return out;
}

SweepResult aggregate(const SweepSamples& samples, const SweepGrid& grid) {
  SweepResult result;
  for (const auto scheme : grid.schemes) {
    for (const auto direction : grid.directions) {
      for (const int n_ues : grid.n_ues) {
        const auto& ps = samples.at(scheme, direction, n_ues);
        const auto u = summarize(ps.uav);
        const auto t = summarize(ps.terrestrial);
        const auto n = summarize(ps.network);
        result.rows.push_back({scheme, direction, n_ues, static_cast<int>(ps.uav.size()), u.mean, u.standard_error,
                               t.mean, t.standard_error, u.mean + t.mean, n.standard_error});
      }
    }
  }
  return result;
}

SweepResult run_sweep(const SystemConfig& base, const SweepGrid& grid, const Layout& layout,
                      const SweepOptions& options) {
  return aggregate(collect_samples(base, grid, layout, options), grid);
}

void write_csv(const SweepResult& result, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    os << to_int(r.scheme) << ',' << to_string(r.direction) << ',' << r.n_ues << ',' << r.n_drops << ','
       << format_number(r.uav_rate_mean) << ',' << format_number(r.uav_rate_se) << ',' << format_number(r.terr_rate_mean)
       << ',' << format_number(r.terr_rate_se) << ',' << format_number(r.net_rate_mean) << ','
       << format_number(r.net_rate_se) << '\n';
  }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

SweepResult read_csv(std::istream& is) {
  SweepResult result;
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::runtime_error("CSV header mismatch");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 10) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields: " + line);
    SweepRow r;
    r.scheme = scheme_from_int(std::stoi(f[0]));
    r.direction = direction_from_string(f[1]);
    r.n_ues = std::stoi(f[2]);
    r.n_drops = std::stoi(f[3]);
    r.uav_rate_mean = std::strtod(f[4].c_str(), nullptr);
    r.uav_rate_se = std::strtod(f[5].c_str(), nullptr);
    r.terr_rate_mean = std::strtod(f[6].c_str(), nullptr);
    r.terr_rate_se = std::strtod(f[7].c_str(), nullptr);
    r.net_rate_mean = std::strtod(f[8].c_str(), nullptr);
    r.net_rate_se = std::strtod(f[9].c_str(), nullptr);
    result.rows.push_back(r);
  }
  return result;
}

SweepResult scale_rates(SweepResult result, double factor) {
  for (auto& r : result.rows) {
    for (double* v : {&r.uav_rate_mean, &r.uav_rate_se, &r.terr_rate_mean, &r.terr_rate_se, &r.net_rate_mean,
                      &r.net_rate_se}) {
      *v *= factor;
    }
    r.net_rate_mean = r.uav_rate_mean + r.terr_rate_mean;
  }
  return result;
}

}  // namespace aerolink
