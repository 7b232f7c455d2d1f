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

// Inner loops of the indicator pipeline. Every variant reproduces the scalar
// reference bit-for-bit: accumulation order per output element is identical
// and no fused multiply-add is used.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace compind::kernels {

struct KernelTable {
  std::string_view name;

  /// out[i*n + j] = sum_l block[l*n + i] * block[l*n + j], summed over l = 0..k-1
  /// in order. `block` is k x n row-major; `out` is n x n.
  void (*gram)(const double* block, std::size_t k, std::size_t n, double* out);

  /// out[i] = sum_j |r[i*n + j]| for j = 0..n-1 in order. `r` must be symmetric.
  void (*abs_row_sums)(const double* r, std::size_t n, double* out);

  /// Per-column z-score in place (mean over k rows, sample deviation with
  /// divisor k-1). Columns whose deviation is at most `tolerance` times their
  /// largest magnitude are zeroed and flagged in `degenerate`.
  void (*standardize)(double* block, std::size_t k, std::size_t n, double tolerance,
                      std::uint8_t* degenerate);
};

const KernelTable& scalar_kernels();

/// Variants compiled in and supported by the running CPU, scalar first.
std::span<const KernelTable* const> available_kernels();

/// Kernel table in use. Chosen once: COMPIND_KERNEL=<name> if set and
/// available, otherwise the widest supported variant.
const KernelTable& active_kernels();

/// Overrides the active table; returns false if `name` is not available.
bool select_kernels(std::string_view name);

}  // namespace compind::kernels
