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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "compind/enterprise.hpp"
#include "compind/indicator.hpp"
#include "compind/regime.hpp"

namespace compind {

struct RunMetadata {
  std::optional<std::size_t> k;
  std::optional<NormalizationMode> mode;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> masked_channels;
};

/// Either per-channel indicators (analyze) or a two-regime comparison.
struct AnalysisReport {
  RunMetadata meta;
  std::optional<IndicatorSeries> indicators;
  std::optional<RegimeComparison> comparison;
  /// Emit zero rows for warm-up periods 1..k in the plot file, flagged.
  bool pad_warmup = false;
};

struct EmittedFiles {
  std::filesystem::path table;     // indicators.csv or comparison.csv
  std::filesystem::path plot;      // plot.csv
  std::filesystem::path metadata;  // metadata.json
};

/// Throws ValidationError if the stored totals disagree with the per-period
/// records beyond 1e-9 relative, or if there is nothing to report.
void check_report(const AnalysisReport& report);

/// Writes the table, plot-data and metadata files into `dir` (created if
/// needed). Each file is written atomically. Throws IoError.
EmittedFiles emit_report(const AnalysisReport& report, const std::filesystem::path& dir);

}  // namespace compind
