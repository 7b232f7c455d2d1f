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

#include "naive_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "compind/error.hpp"

namespace compind::testing {

OracleResult naive_oracle(const MappedSeries& series, std::size_t t, std::size_t k, NormalizationMode mode) {
  if (k < 2) throw InvalidWindowError("oracle: k < 2");
  if (t <= k || t > series.t_max()) throw InsufficientHistoryError("oracle: no full window");
  const std::size_t n = series.channels();
  // x(l, i) = v^i(t - l), l = 1..k
  auto x = [&](std::size_t l, std::size_t i) { return series.values(t - l - 1, i); };

  OracleResult out{Matrix(n, n), std::vector<double>(n, 0.0)};
  if (mode == NormalizationMode::kRaw) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 1; l <= k; ++l) s += x(l, i) * x(l, j);
        out.r(i, j) = s / static_cast<double>(k - 1);
      }
    }
  } else {
    std::vector<double> mean(n, 0.0);
    std::vector<double> centered_ss(n, 0.0);
    std::vector<bool> flat(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      double peak = 0.0;
      for (std::size_t l = 1; l <= k; ++l) {
        s += x(l, i);
        peak = std::max(peak, std::fabs(x(l, i)));
      }
      mean[i] = s / static_cast<double>(k);
      for (std::size_t l = 1; l <= k; ++l) centered_ss[i] += (x(l, i) - mean[i]) * (x(l, i) - mean[i]);
      flat[i] = std::sqrt(centered_ss[i] / static_cast<double>(k - 1)) <= kDegenerateTolerance * peak;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (flat[i] || flat[j]) continue;
        double cross = 0.0;
        for (std::size_t l = 1; l <= k; ++l) cross += (x(l, i) - mean[i]) * (x(l, j) - mean[j]);
        out.r(i, j) = cross / std::sqrt(centered_ss[i] * centered_ss[j]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.indicator[i] += std::fabs(out.r(i, j));
  }
  return out;
}

double naive_total(const MappedSeries& series, std::size_t k, NormalizationMode mode) {
  double total = 0.0;
  for (std::size_t t = k + 1; t <= series.t_max(); ++t) {
    for (const double v : naive_oracle(series, t, k, mode).indicator) total += v;
  }
  return total;
}

}  // namespace compind::testing
