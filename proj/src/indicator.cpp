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

#include "compind/indicator.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "compind/error.hpp"
#include "compind/kernels.hpp"
#include "window_internal.hpp"

namespace compind {

WindowMatrix build_window_matrix(const MappedSeries& series, std::size_t t, std::size_t k,
                                 NormalizationMode mode) {
  if (mode == NormalizationMode::kStandardized) return standardize_window(series, t, k);
  return detail::copy_window(series, t, k);
}

double pairwise_coefficient(const WindowMatrix& window, std::size_t i, std::size_t j) {
  double sum = 0.0;
  for (std::size_t l = 0; l < window.k; ++l) sum += window.block(l, i) * window.block(l, j);
  return sum / static_cast<double>(window.k - 1);
}

CorrelationMatrix correlation_matrix(const WindowMatrix& window) {
  const std::size_t n = window.channels();
  CorrelationMatrix corr{window.t, window.k, Matrix(n, n), window.mode};
  kernels::active_kernels().gram(window.block.data(), window.k, n, corr.r.data());
  const double dof = static_cast<double>(window.k - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : corr.r.row(i)) x /= dof;
  }
  return corr;
}

std::vector<double> integral_indicator(const CorrelationMatrix& corr) {
  std::vector<double> out(corr.r.rows());
  kernels::active_kernels().abs_row_sums(corr.r.data(), corr.r.rows(), out.data());
  return out;
}

IndicatorSeries indicator_series(const MappedSeries& series, std::size_t k, NormalizationMode mode,
                                 IndicatorOptions options) {
  if (k < 2) throw InvalidWindowError("window length must be at least 2, got " + std::to_string(k));
  if (series.t_max() <= k) {
    throw InsufficientHistoryError("series has " + std::to_string(series.t_max()) +
                                   " periods; window " + std::to_string(k) + " needs at least " +
                                   std::to_string(k + 1));
  }
  const std::size_t n = series.channels();
  const std::size_t periods = series.t_max() - k;

  IndicatorSeries out;
  out.k = k;
  out.mode = mode;
  out.first_period = k + 1;
  out.values = Matrix(periods, n);
  out.channel_labels = series.channel_labels;

  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const auto window = build_window_matrix(series, out.first_period + p, k, mode);
      const auto v = integral_indicator(correlation_matrix(window));
      std::copy(v.begin(), v.end(), out.values.row(p).begin());
    }
  };

  std::size_t threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                             : options.threads;
  threads = std::min(threads, periods);
  if (threads <= 1) {
    evaluate(0, periods);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (periods + threads - 1) / threads;
      for (std::size_t w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(periods, w * chunk);
        const std::size_t end = std::min(periods, begin + chunk);
        workers.emplace_back([&, w, begin, end] {
          try {
            evaluate(begin, end);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  out.period_sums.resize(periods);
  for (std::size_t p = 0; p < periods; ++p) {
    double s = 0.0;
    for (const double v : out.values.row(p)) s += v;
    out.period_sums[p] = s;
    out.total += s;
  }
  return out;
}

}  // namespace compind
