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

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "column.hpp"
#include "variants.hpp"

#if !defined(__AVX2__)
#error "avx2.cpp must be compiled with -mavx2"
#endif

namespace compind::kernels {
namespace {

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Row-major outer-product accumulation, four output columns per step. The
// per-element order over l matches gram_scalar; mul and add stay separate.
void gram_avx2(const double* block, std::size_t k, std::size_t n, double* out) {
  std::memset(out, 0, n * n * sizeof(double));
  for (std::size_t l = 0; l < k; ++l) {
    const double* row = block + l * n;
    for (std::size_t i = 0; i < n; ++i) {
      const __m256d xi = _mm256_set1_pd(row[i]);
      double* acc = out + i * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        const __m256d prod = _mm256_mul_pd(xi, _mm256_loadu_pd(row + j));
        _mm256_storeu_pd(acc + j, _mm256_add_pd(_mm256_loadu_pd(acc + j), prod));
      }
      for (; j < n; ++j) acc[j] += row[i] * row[j];
    }
  }
}

// Uses symmetry: column j of r read contiguously equals row j.
void abs_row_sums_avx2(const double* r, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(r + j * n + i)));
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::fabs(r[i * n + j]);
    out[i] = s;
  }
}

void standardize_avx2(double* block, std::size_t k, std::size_t n, double tolerance,
                      std::uint8_t* degenerate) {
  const __m256d count = _mm256_set1_pd(static_cast<double>(k));
  const __m256d dof = _mm256_set1_pd(static_cast<double>(k - 1));
  const __m256d tol = _mm256_set1_pd(tolerance);
  std::size_t c = 0;
  for (; c + 4 <= n; c += 4) {
    __m256d sum = _mm256_setzero_pd();
    __m256d max_abs = _mm256_setzero_pd();
    for (std::size_t l = 0; l < k; ++l) {
      const __m256d x = _mm256_loadu_pd(block + l * n + c);
      sum = _mm256_add_pd(sum, x);
      max_abs = _mm256_max_pd(max_abs, abs_pd(x));
    }
    const __m256d mean = _mm256_div_pd(sum, count);
    __m256d ss = _mm256_setzero_pd();
    for (std::size_t l = 0; l < k; ++l) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(block + l * n + c), mean);
      ss = _mm256_add_pd(ss, _mm256_mul_pd(d, d));
    }
    const __m256d sd = _mm256_sqrt_pd(_mm256_div_pd(ss, dof));
    const __m256d flat = _mm256_cmp_pd(sd, _mm256_mul_pd(tol, max_abs), _CMP_LE_OQ);
    const int mask = _mm256_movemask_pd(flat);
    for (int q = 0; q < 4; ++q) degenerate[c + q] = (mask >> q) & 1;
    for (std::size_t l = 0; l < k; ++l) {
      double* p = block + l * n + c;
      const __m256d z = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(p), mean), sd);
      _mm256_storeu_pd(p, _mm256_andnot_pd(flat, z));
    }
  }
  for (; c < n; ++c) detail::standardize_column(block, k, n, c, tolerance, degenerate);
}

}  // namespace

const KernelTable& avx2_kernels() {
  static constexpr KernelTable table{"avx2", gram_avx2, abs_row_sums_avx2, standardize_avx2};
  return table;
}

}  // namespace compind::kernels
