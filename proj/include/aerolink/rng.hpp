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


#ifndef AEROLINK_RNG_HPP
#define AEROLINK_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <random>

namespace aerolink {

using Rng = std::mt19937_64;

// Purpose tags keep the substreams of one drop disjoint. Values are part of the
// output contract: changing one changes every simulated number.
enum class StreamTag : std::uint64_t {
  UePosition = 0x11,
  UavPosition = 0x12,
  UeBsLink = 0x21,
  UavBsLink = 0x22,
  UeUavLink = 0x23,
  UavReserved = 0x31,
  TerrestrialIcic = 0x32,
  UavScheme3 = 0x33,
  UavScheme4 = 0x34,
};

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds the keys into the master seed one at a time; order matters.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = mix64(master);
  for (const auto k : keys) h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_stream(std::uint64_t master, std::uint64_t drop_index, StreamTag tag,
                       std::uint64_t a = 0, std::uint64_t b = 0) {
  return Rng{derive_seed(master, {drop_index, static_cast<std::uint64_t>(tag), a, b})};
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double unit_uniform(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform pick in [0, n), n > 0.
inline std::size_t pick_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(n));
}

}  // namespace aerolink

#endif  // AEROLINK_RNG_HPP
