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

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace compind::kernels::detail {

// Scalar z-score of one column of a k x n row-major block. Reference order
// for every variant's vector lanes.
inline void standardize_column(double* block, std::size_t k, std::size_t n, std::size_t c,
                               double tolerance, std::uint8_t* degenerate) {
  const double count = static_cast<double>(k);
  const double dof = static_cast<double>(k - 1);
  double sum = 0.0;
  double max_abs = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    const double x = block[l * n + c];
    sum += x;
    max_abs = std::fmax(max_abs, std::fabs(x));
  }
  const double mean = sum / count;
  double ss = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    const double d = block[l * n + c] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / dof);
  const bool flat = sd <= tolerance * max_abs;
  degenerate[c] = flat ? 1 : 0;
  for (std::size_t l = 0; l < k; ++l) {
    block[l * n + c] = flat ? 0.0 : (block[l * n + c] - mean) / sd;
  }
}

}  // namespace compind::kernels::detail
