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

#include <cstddef>
#include <vector>

namespace compind {

struct IndicatorSeries;

/// Aggregate indicator V(t) = sum_i V_i(t) over consecutive periods.
struct IndicatorColumn {
  std::size_t first_period = 1;
  std::vector<double> values;

  static IndicatorColumn from_series(const IndicatorSeries& series);
};

struct RegimeRow {
  std::size_t t = 0;
  double basic = 0.0;
  double treated = 0.0;
  double delta = 0.0;  // treated - basic

  friend bool operator==(const RegimeRow&, const RegimeRow&) = default;
};

struct RegimeComparison {
  std::vector<RegimeRow> rows;
  double basic_total = 0.0;
  double treated_total = 0.0;
  double delta_total = 0.0;  // treated_total - basic_total
};

/// Per-period deltas and column totals. Throws RangeMismatchError unless both
/// columns cover the same periods.
RegimeComparison compare_regimes(const IndicatorColumn& basic, const IndicatorColumn& treated);

}  // namespace compind
