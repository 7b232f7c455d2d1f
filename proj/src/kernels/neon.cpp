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

#include <arm_neon.h>

#include <cmath>
#include <cstring>

#include "column.hpp"
#include "variants.hpp"

namespace compind::kernels {
namespace {

void gram_neon(const double* block, std::size_t k, std::size_t n, double* out) {
  std::memset(out, 0, n * n * sizeof(double));
  for (std::size_t l = 0; l < k; ++l) {
    const double* row = block + l * n;
    for (std::size_t i = 0; i < n; ++i) {
      const float64x2_t xi = vdupq_n_f64(row[i]);
      double* acc = out + i * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const float64x2_t prod = vmulq_f64(xi, vld1q_f64(row + j));
        vst1q_f64(acc + j, vaddq_f64(vld1q_f64(acc + j), prod));
      }
      for (; j < n; ++j) acc[j] += row[i] * row[j];
    }
  }
}

void abs_row_sums_neon(const double* r, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < n; ++j) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(r + j * n + i)));
    vst1q_f64(out + i, acc);
  }
  for (; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::fabs(r[i * n + j]);
    out[i] = s;
  }
}

void standardize_neon(double* block, std::size_t k, std::size_t n, double tolerance,
                      std::uint8_t* degenerate) {
  const float64x2_t count = vdupq_n_f64(static_cast<double>(k));
  const float64x2_t dof = vdupq_n_f64(static_cast<double>(k - 1));
  const float64x2_t tol = vdupq_n_f64(tolerance);
  std::size_t c = 0;
  for (; c + 2 <= n; c += 2) {
    float64x2_t sum = vdupq_n_f64(0.0);
    float64x2_t max_abs = vdupq_n_f64(0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const float64x2_t x = vld1q_f64(block + l * n + c);
      sum = vaddq_f64(sum, x);
      max_abs = vmaxq_f64(max_abs, vabsq_f64(x));
    }
    const float64x2_t mean = vdivq_f64(sum, count);
    float64x2_t ss = vdupq_n_f64(0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const float64x2_t d = vsubq_f64(vld1q_f64(block + l * n + c), mean);
      ss = vaddq_f64(ss, vmulq_f64(d, d));
    }
    const float64x2_t sd = vsqrtq_f64(vdivq_f64(ss, dof));
    const uint64x2_t flat = vcleq_f64(sd, vmulq_f64(tol, max_abs));
    degenerate[c] = vgetq_lane_u64(flat, 0) ? 1 : 0;
    degenerate[c + 1] = vgetq_lane_u64(flat, 1) ? 1 : 0;
    for (std::size_t l = 0; l < k; ++l) {
      double* p = block + l * n + c;
      const float64x2_t z = vdivq_f64(vsubq_f64(vld1q_f64(p), mean), sd);
      const uint64x2_t kept = vbicq_u64(vreinterpretq_u64_f64(z), flat);
      vst1q_f64(p, vreinterpretq_f64_u64(kept));
    }
  }
  for (; c < n; ++c) detail::standardize_column(block, k, n, c, tolerance, degenerate);
}

}  // namespace

const KernelTable& neon_kernels() {
  static constexpr KernelTable table{"neon", gram_neon, abs_row_sums_neon, standardize_neon};
  return table;
}

}  // namespace compind::kernels
