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

#include "compind/regime.hpp"

#include <string>

#include "compind/error.hpp"
#include "compind/indicator.hpp"

namespace compind {

IndicatorColumn IndicatorColumn::from_series(const IndicatorSeries& series) {
  return IndicatorColumn{series.first_period, series.period_sums};
}

RegimeComparison compare_regimes(const IndicatorColumn& basic, const IndicatorColumn& treated) {
  if (basic.first_period != treated.first_period || basic.values.size() != treated.values.size()) {
    auto range = [](const IndicatorColumn& c) {
      return std::to_string(c.first_period) + ".." + std::to_string(c.first_period + c.values.size() - 1);
    };
    throw RangeMismatchError("regimes cover different periods: " + range(basic) + " vs " + range(treated));
  }
  RegimeComparison out;
  out.rows.reserve(basic.values.size());
  for (std::size_t p = 0; p < basic.values.size(); ++p) {
    const double b = basic.values[p];
    const double d = treated.values[p];
    out.rows.push_back({basic.first_period + p, b, d, d - b});
    out.basic_total += b;
    out.treated_total += d;
  }
  out.delta_total = out.treated_total - out.basic_total;
  return out;
}

}  // namespace compind
