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

#include "compind/enterprise.hpp"

#include <cmath>
#include <set>

#include "compind/catalog.hpp"
#include "compind/error.hpp"
#include "compind/kernels.hpp"
#include "window_internal.hpp"

namespace compind {

std::string_view to_string(NormalizationMode mode) {
  return mode == NormalizationMode::kRaw ? "raw" : "standardized";
}

NormalizationMode parse_mode(std::string_view text) {
  if (text == "raw") return NormalizationMode::kRaw;
  if (text == "standardized") return NormalizationMode::kStandardized;
  throw ValidationError("unknown normalization mode '" + std::string(text) +
                        "' (expected raw or standardized)");
}

EnterpriseModel::EnterpriseModel(Matrix events, std::vector<std::string> channel_labels)
    : events_(std::move(events)), labels_(std::move(channel_labels)) {
  if (events_.rows() == 0) throw ValidationError("enterprise model needs at least one period");
  if (events_.cols() == 0) throw ValidationError("enterprise model needs at least one channel");
  if (labels_.size() != events_.cols()) {
    throw ValidationError("expected " + std::to_string(events_.cols()) + " channel labels, got " +
                          std::to_string(labels_.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw ValidationError("channel label is empty");
    if (!seen.insert(label).second) throw ValidationError("duplicate channel label '" + label + "'");
  }
  for (std::size_t t = 0; t < events_.rows(); ++t) {
    for (std::size_t c = 0; c < events_.cols(); ++c) {
      if (!std::isfinite(events_(t, c))) {
        throw ValidationError("non-finite event value at period " + std::to_string(t + 1) +
                              ", channel '" + labels_[c] + "'");
      }
    }
  }
}

bool CompetencyMapping::is_active(std::size_t competency) const {
  for (std::size_t c = 0; c < channels; ++c) {
    if (flag(competency, c)) return true;
  }
  return false;
}

void CompetencyMapping::validate() const {
  if (flags.size() != competencies() * channels) {
    throw ValidationError("mapping flags must be " + std::to_string(competencies()) + " x " +
                          std::to_string(channels));
  }
  if (costs.size() != competencies()) throw ValidationError("mapping needs one cost per competency");
  for (const auto f : flags) {
    if (f > 1) throw ValidationError("mapping flag must be 0 or 1");
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (!std::isfinite(costs[i]) || costs[i] < 0.0) {
      throw ValidationError("cost of competency '" + competency_ids[i] + "' must be finite and non-negative");
    }
  }
  if (!std::isfinite(budget) || budget < 0.0) throw ValidationError("budget must be finite and non-negative");
  std::set<std::string_view> seen;
  for (const auto& id : competency_ids) {
    if (!seen.insert(id).second) throw ValidationError("duplicate competency '" + id + "'");
  }
}

void CompetencyMapping::validate_against(const DescriptorCatalog& catalog) const {
  validate();
  for (const auto& id : competency_ids) {
    if (!catalog.contains(id)) throw ValidationError("competency '" + id + "' is not in the catalog");
  }
}

CompetencyMapping CompetencyMapping::identity(std::size_t channels) {
  CompetencyMapping mapping;
  mapping.competency_ids = {"*"};
  mapping.channels = channels;
  mapping.flags.assign(channels, 1);
  mapping.costs = {0.0};
  mapping.budget = 0.0;
  return mapping;
}

BudgetReport check_budget(const CompetencyMapping& mapping) {
  BudgetReport report;
  report.budget = mapping.budget;
  for (std::size_t i = 0; i < mapping.competencies(); ++i) {
    if (mapping.is_active(i)) report.total_cost += mapping.costs[i];
  }
  report.satisfied = report.total_cost <= mapping.budget;
  return report;
}

MappedSeries MappedSeries::from_model(const EnterpriseModel& model) {
  return MappedSeries{model.events(), model.channel_labels(), NormalizationMode::kRaw};
}

MappingResult apply_mapping(const MappedSeries& series, const CompetencyMapping& mapping) {
  if (mapping.channels != series.channels()) {
    throw DimensionError("mapping covers " + std::to_string(mapping.channels) + " channels, series has " +
                         std::to_string(series.channels()));
  }
  mapping.validate();
  const auto budget = check_budget(mapping);
  if (!budget.satisfied) throw BudgetError(budget.total_cost, budget.budget);

  MappingResult result{series, {}};
  result.series.mode = NormalizationMode::kRaw;
  for (std::size_t c = 0; c < series.channels(); ++c) {
    bool kept = false;
    for (std::size_t i = 0; i < mapping.competencies() && !kept; ++i) kept = mapping.flag(i, c) != 0;
    if (kept) continue;
    result.masked_channels.push_back(c);
    for (std::size_t t = 0; t < series.t_max(); ++t) result.series.values(t, c) = 0.0;
  }
  return result;
}

MappingResult apply_mapping(const EnterpriseModel& model, const CompetencyMapping& mapping) {
  return apply_mapping(MappedSeries::from_model(model), mapping);
}

void check_window(std::size_t t, std::size_t k, std::size_t t_max) {
  if (k < 2) throw InvalidWindowError("window length must be at least 2, got " + std::to_string(k));
  if (t <= k || t > t_max) {
    throw InsufficientHistoryError("period " + std::to_string(t) + " needs " + std::to_string(k) +
                                   " earlier periods within 1.." + std::to_string(t_max));
  }
}

namespace detail {

WindowMatrix copy_window(const MappedSeries& series, std::size_t t, std::size_t k) {
  check_window(t, k, series.t_max());
  WindowMatrix window;
  window.t = t;
  window.k = k;
  window.block = Matrix(k, series.channels());
  for (std::size_t l = 1; l <= k; ++l) {
    const auto src = series.values.row(t - l - 1);
    std::copy(src.begin(), src.end(), window.block.row(l - 1).begin());
  }
  return window;
}

}  // namespace detail

WindowMatrix standardize_window(const MappedSeries& series, std::size_t t, std::size_t k) {
  auto window = detail::copy_window(series, t, k);
  window.mode = NormalizationMode::kStandardized;
  window.degenerate.assign(window.channels(), 0);
  kernels::active_kernels().standardize(window.block.data(), k, window.channels(), kDegenerateTolerance,
                                        window.degenerate.data());
  return window;
}

}  // namespace compind
