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

// The published two-regime indicator table (57 periods) and the arithmetic
// checks it must satisfy. The source event data behind it is not available,
// so only its internal consistency can be verified.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compind/io.hpp"

namespace compind {

struct ReferenceTable {
  static constexpr std::size_t kRows = 57;

  std::vector<RegimeRow> rows;
  RegimeRow printed_totals;
};

/// Printed values are rounded to cents; a row's delta may be off by this much.
inline constexpr double kRowDeltaSlack = 0.02;
/// Accumulated rounding allowed between a column sum and its printed total.
inline constexpr double kColumnTotalSlack = 0.3;

/// Enterprise costs over five years without and with descriptor-based
/// control, in thousand rubles.
inline constexpr std::int64_t kBaseEnterpriseCost = 5'641'442;
inline constexpr std::int64_t kDescriptorInstallCost = 28'208;
inline constexpr std::int64_t kFiveYearTotalCost = 5'669'650;

/// Structural checks only (row count, dense periods 1..57, totals row).
/// Throws IntegrityError.
ReferenceTable to_reference(RegimeTable table);
ReferenceTable load_reference_text(std::string_view text, std::string_view source = "<reference>");
/// The bundled copy.
ReferenceTable load_reference();

struct VerificationCheck {
  std::string id;  // "row-deltas", "column-totals", "total-delta", "cost-identity"
  std::string description;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  double basic_sum = 0.0;
  double treated_sum = 0.0;

  bool passed() const;
  const VerificationCheck* find(std::string_view id) const;
};

VerificationReport verify_reference(const ReferenceTable& table);

}  // namespace compind
