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

// Brute-force reference for the indicator engine. Reads the series by direct
// indexing, never forms a window block, and in standardized mode evaluates
// Pearson's formula from centered sums instead of z-scoring first.

#include <cstddef>
#include <vector>

#include "compind/enterprise.hpp"
#include "compind/matrix.hpp"

namespace compind::testing {

struct OracleResult {
  Matrix r;
  std::vector<double> indicator;
};

OracleResult naive_oracle(const MappedSeries& series, std::size_t t, std::size_t k, NormalizationMode mode);

/// Sum over t = k+1..t_max of sum_i V_i(t), computed with naive_oracle.
double naive_total(const MappedSeries& series, std::size_t k, NormalizationMode mode);

}  // namespace compind::testing
