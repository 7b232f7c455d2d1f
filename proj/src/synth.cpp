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

#include "compind/synth.hpp"

#include <cmath>
#include <set>

#include "compind/error.hpp"

namespace compind {

void ScenarioConfig::validate() const {
  if (periods < 1) throw ValidationError("scenario needs at least one period");
  if (processes.empty()) throw ValidationError("scenario needs at least one process");
  std::set<std::string_view> names;
  for (const auto& p : processes) {
    if (p.name.empty()) throw ValidationError("process name is empty");
    if (!names.insert(p.name).second) throw ValidationError("duplicate process '" + p.name + "'");
    if (p.channels < 1) throw ValidationError("process '" + p.name + "' needs at least one channel");
    if (p.period_length < 1) throw ValidationError("process '" + p.name + "' needs period_length >= 1");
    if (!std::isfinite(p.noise_scale) || p.noise_scale < 0.0) {
      throw ValidationError("process '" + p.name + "' needs a finite noise_scale >= 0");
    }
    if (!std::isfinite(p.base_level) || !std::isfinite(p.amplitude)) {
      throw ValidationError("process '" + p.name + "' has a non-finite level or amplitude");
    }
  }
  if (intervention_period && (*intervention_period < 1 || *intervention_period > periods)) {
    throw ValidationError("intervention_period must lie in 1.." + std::to_string(periods));
  }
  if (!std::isfinite(intervention_cost_per_period)) {
    throw ValidationError("intervention_cost_per_period must be finite");
  }
}

double seasonal_cycle(std::size_t period, std::size_t period_length) {
  const double phase =
      static_cast<double>((period - 1) % period_length) / static_cast<double>(period_length);
  return 1.0 - 4.0 * std::fabs(phase - 0.5);
}

EnterpriseModel generate_series(const ScenarioConfig& config) {
  config.validate();
  std::size_t n = 0;
  for (const auto& p : config.processes) n += p.channels;

  Matrix events(config.periods, n);
  std::vector<std::string> labels;
  labels.reserve(n);
  std::size_t channel = 0;
  for (const auto& p : config.processes) {
    for (std::size_t c = 0; c < p.channels; ++c, ++channel) {
      labels.push_back(p.name + "_" + std::to_string(c + 1));
      auto rng = SplitMix64::for_channel(config.seed, channel);
      const bool intervened = c == 0 && config.intervention_period.has_value();
      for (std::size_t t = 1; t <= config.periods; ++t) {
        double u = 0.0;
        for (int q = 0; q < 12; ++q) u += rng.uniform();
        double value = p.base_level + p.amplitude * seasonal_cycle(t, p.period_length) +
                       p.noise_scale * (u - 6.0);
        if (intervened && t >= *config.intervention_period) value += config.intervention_cost_per_period;
        events(t - 1, channel) = value;
      }
    }
  }
  return EnterpriseModel(std::move(events), std::move(labels));
}

ScenarioPair paired_scenarios(const ScenarioConfig& config) {
  ScenarioConfig baseline = config;
  baseline.intervention_period.reset();
  return {generate_series(baseline), generate_series(config)};
}

}  // namespace compind
