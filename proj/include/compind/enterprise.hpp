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

// Enterprise event model S = {T, X}, the competency mapping that masks event
// channels, and the per-window standardization used by the standardized mode.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compind/matrix.hpp"

namespace compind {

class DescriptorCatalog;

enum class NormalizationMode { kRaw, kStandardized };

std::string_view to_string(NormalizationMode mode);
/// Accepts "raw" or "standardized". Throws ValidationError otherwise.
NormalizationMode parse_mode(std::string_view text);

/// Event values x^i(t) in thousand rubles. Periods are 1-based, channels 0-based.
class EnterpriseModel {
 public:
  /// `events` is row-major with t_max rows and labels.size() columns.
  /// Throws ValidationError on empty shape, non-finite cells or duplicate labels.
  EnterpriseModel(Matrix events, std::vector<std::string> channel_labels);

  std::size_t t_max() const noexcept { return events_.rows(); }
  std::size_t channels() const noexcept { return events_.cols(); }
  const Matrix& events() const noexcept { return events_; }
  const std::vector<std::string>& channel_labels() const noexcept { return labels_; }

  double value(std::size_t period, std::size_t channel) const { return events_(period - 1, channel); }

  friend bool operator==(const EnterpriseModel&, const EnterpriseModel&) = default;

 private:
  Matrix events_;
  std::vector<std::string> labels_;
};

/// Binary compliance flags (competency x channel) with per-competency costs
/// and the resource budget C.
struct CompetencyMapping {
  std::vector<std::string> competency_ids;
  std::size_t channels = 0;
  std::vector<std::uint8_t> flags;  // competency_ids.size() x channels, row-major
  std::vector<double> costs;
  double budget = 0.0;

  std::size_t competencies() const noexcept { return competency_ids.size(); }
  std::uint8_t flag(std::size_t competency, std::size_t channel) const {
    return flags[competency * channels + channel];
  }
  bool is_active(std::size_t competency) const;

  /// Shape, flag values, and non-negative finite costs/budget. Throws ValidationError.
  void validate() const;
  /// validate() plus every competency id resolving in the catalog.
  void validate_against(const DescriptorCatalog& catalog) const;

  /// A single pseudo-competency "*" flagging every channel at zero cost.
  static CompetencyMapping identity(std::size_t channels);
};

struct BudgetReport {
  double total_cost = 0.0;
  double budget = 0.0;
  bool satisfied = true;
};

/// Sums costs over competencies that flag at least one channel and compares
/// against the budget. A violation is reported, not thrown.
BudgetReport check_budget(const CompetencyMapping& mapping);

/// The channel vectors v(t) seen by the indicator engine.
struct MappedSeries {
  Matrix values;  // t_max x n
  std::vector<std::string> channel_labels;
  NormalizationMode mode = NormalizationMode::kRaw;

  std::size_t t_max() const noexcept { return values.rows(); }
  std::size_t channels() const noexcept { return values.cols(); }

  static MappedSeries from_model(const EnterpriseModel& model);
};

struct MappingResult {
  MappedSeries series;
  std::vector<std::size_t> masked_channels;  // channels no competency flags
};

/// Keeps x^j(t) where any competency flags channel j and zeroes the rest.
/// Throws DimensionError on a channel-count mismatch and BudgetError when
/// check_budget fails.
MappingResult apply_mapping(const EnterpriseModel& model, const CompetencyMapping& mapping);
MappingResult apply_mapping(const MappedSeries& series, const CompetencyMapping& mapping);

/// The k x n block of periods t-1 ... t-k (row l-1 holds period t-l).
struct WindowMatrix {
  std::size_t t = 0;
  std::size_t k = 0;
  Matrix block;
  NormalizationMode mode = NormalizationMode::kRaw;
  std::vector<std::uint8_t> degenerate;  // per channel; only set in standardized mode

  std::size_t channels() const noexcept { return block.cols(); }
};

/// Throws InvalidWindowError for k < 2 and InsufficientHistoryError unless
/// k < t <= t_max.
void check_window(std::size_t t, std::size_t k, std::size_t t_max);

/// Relative spread below which a window column counts as constant.
inline constexpr double kDegenerateTolerance = 1e-12;

/// Window block with every column replaced by its z-score (divisor k-1).
/// Constant columns become zero and are flagged degenerate.
WindowMatrix standardize_window(const MappedSeries& series, std::size_t t, std::size_t k);

}  // namespace compind
