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

// Sliding-window correlation matrices and integral indicators.
//
// For a period t and window length k the engine takes the k x n block of
// channel vectors v(t-1) ... v(t-k), forms R = B^T B / (k-1), and reduces each
// row to V_i(t) = sum_j |r_ij|. The diagonal is included. Periods t <= k have no
// full window and are excluded from the evaluable range k+1 .. t_max.

#include <cstddef>
#include <vector>

#include "compind/enterprise.hpp"
#include "compind/matrix.hpp"

namespace compind {

inline constexpr std::size_t kDefaultWindow = 12;

struct CorrelationMatrix {
  std::size_t t = 0;
  std::size_t k = 0;
  Matrix r;  // n x n, symmetric
  NormalizationMode mode = NormalizationMode::kRaw;
};

/// Rows are v(t-1), ..., v(t-k); standardized mode z-scores each column.
WindowMatrix build_window_matrix(const MappedSeries& series, std::size_t t, std::size_t k,
                                 NormalizationMode mode = NormalizationMode::kRaw);

/// (1/(k-1)) * sum_l block[l][i] * block[l][j]
double pairwise_coefficient(const WindowMatrix& window, std::size_t i, std::size_t j);

CorrelationMatrix correlation_matrix(const WindowMatrix& window);

std::vector<double> integral_indicator(const CorrelationMatrix& corr);

/// Per-period integral indicators over the evaluable range.
struct IndicatorSeries {
  std::size_t k = 0;
  NormalizationMode mode = NormalizationMode::kRaw;
  std::size_t first_period = 0;  // k + 1
  Matrix values;                 // periods x n; row p holds V_i(first_period + p)
  std::vector<double> period_sums;  // sum_i V_i(t), channels in order
  double total = 0.0;               // sum of period_sums, periods in order
  std::vector<std::string> channel_labels;

  std::size_t periods() const noexcept { return values.rows(); }
  std::size_t channels() const noexcept { return values.cols(); }
  std::size_t last_period() const noexcept { return first_period + periods() - 1; }
};

struct IndicatorOptions {
  /// Worker threads for per-period evaluation; 0 picks hardware concurrency.
  /// Results are bit-identical for any value.
  std::size_t threads = 1;
};

/// Throws InvalidWindowError for k < 2 and InsufficientHistoryError when
/// t_max <= k.
IndicatorSeries indicator_series(const MappedSeries& series, std::size_t k, NormalizationMode mode,
                                 IndicatorOptions options = {});

}  // namespace compind
