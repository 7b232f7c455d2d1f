// Copyright 2026 The compind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded synthetic enterprise event series. The data is synthetic: a
// triangle-wave seasonal cycle plus noise per channel, with an optional
// per-period cost added from an intervention period onward. It stands in for
// real enterprise ledgers and reproduces nothing measured.
//
// Randomness is SplitMix64 (Steele, Lea & Flood 2014):
//
//     state += 0x9E3779B97F4A7C15
//     z = state
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
//
// Channel c (0-based, across all processes in order) draws from its own
// stream whose initial state is mix(seed + 0x9E3779B97F4A7C15 * (c + 1)),
// where mix is the three output steps above. A uniform draw is
// (next() >> 11) * 2^-53. Each cell consumes 12 uniforms u_1..u_12 and its
// noise is noise_scale * ((u_1 + ... + u_12) - 6), summed left to right.
// Only IEEE-exact operations are used, so streams are identical on every
// platform.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compind/enterprise.hpp"

namespace compind {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Stream for one channel of a scenario.
  static SplitMix64 for_channel(std::uint64_t seed, std::uint64_t channel) {
    return SplitMix64(mix(seed + kGamma * (channel + 1)));
  }

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct ProcessConfig {
  std::string name;
  std::size_t channels = 1;
  double base_level = 0.0;
  double amplitude = 0.0;
  std::size_t period_length = 12;
  double noise_scale = 0.0;
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  std::size_t periods = 1;
  std::vector<ProcessConfig> processes;
  std::optional<std::size_t> intervention_period;  // 1-based
  double intervention_cost_per_period = 0.0;

  /// Throws ValidationError.
  void validate() const;
};

/// Triangle wave in [-1, 1] with the given cycle length; -1 at period 1.
double seasonal_cycle(std::size_t period, std::size_t period_length);

/// Channels are labelled "<process>_<index>" with 1-based indices. With an
/// intervention, the first channel of every process gets the cost added from
/// intervention_period on.
EnterpriseModel generate_series(const ScenarioConfig& config);

struct ScenarioPair {
  EnterpriseModel baseline;  // intervention disabled
  EnterpriseModel treated;   // intervention as configured
};

ScenarioPair paired_scenarios(const ScenarioConfig& config);

}  // namespace compind
