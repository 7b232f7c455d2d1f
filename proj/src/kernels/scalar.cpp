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

#include <cmath>
#include <cstring>

#include "column.hpp"
#include "compind/kernels.hpp"

namespace compind::kernels {
namespace {

void gram_scalar(const double* block, std::size_t k, std::size_t n, double* out) {
  std::memset(out, 0, n * n * sizeof(double));
  for (std::size_t l = 0; l < k; ++l) {
    const double* row = block + l * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = row[i];
      double* acc = out + i * n;
      for (std::size_t j = i; j < n; ++j) acc[j] += xi * row[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) out[i * n + j] = out[j * n + i];
  }
}

void abs_row_sums_scalar(const double* r, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::fabs(r[i * n + j]);
    out[i] = s;
  }
}

void standardize_scalar(double* block, std::size_t k, std::size_t n, double tolerance,
                        std::uint8_t* degenerate) {
  for (std::size_t c = 0; c < n; ++c) detail::standardize_column(block, k, n, c, tolerance, degenerate);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static constexpr KernelTable table{"scalar", gram_scalar, abs_row_sums_scalar, standardize_scalar};
  return table;
}

}  // namespace compind::kernels
