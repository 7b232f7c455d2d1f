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

#include "compind/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "compind/bundled.hpp"
#include "compind/error.hpp"

namespace compind {
namespace {

// Absorbs binary representation error of cent-rounded decimals.
constexpr double kRepresentationSlack = 1e-9;

std::int64_t cents(double v) { return std::llround(v * 100.0); }

std::string fixed2(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

}  // namespace

ReferenceTable to_reference(RegimeTable table) {
  if (table.rows.size() != ReferenceTable::kRows) {
    throw IntegrityError("reference table must have " + std::to_string(ReferenceTable::kRows) +
                         " rows, found " + std::to_string(table.rows.size()));
  }
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].t != i + 1) {
      throw IntegrityError("reference table periods must run 1.." + std::to_string(ReferenceTable::kRows) +
                           "; row " + std::to_string(i + 1) + " has t=" + std::to_string(table.rows[i].t));
    }
  }
  if (!table.totals) throw IntegrityError("reference table has no total row");
  return ReferenceTable{std::move(table.rows), *table.totals};
}

ReferenceTable load_reference_text(std::string_view text, std::string_view source) {
  try {
    return to_reference(parse_regime_table(text, source));
  } catch (const ParseError& e) {
    throw IntegrityError(std::string("corrupted reference table: ") + e.what());
  }
}

ReferenceTable load_reference() {
  return load_reference_text(bundled::reference_document(), "<bundled reference>");
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

VerificationReport verify_reference(const ReferenceTable& table) {
  VerificationReport report;

  {
    VerificationCheck check{"row-deltas", "every row: |dv - (v_ddescr - v_basic)| <= " + fixed2(kRowDeltaSlack),
                            true, ""};
    double worst = 0.0;
    for (const auto& row : table.rows) {
      const double gap = std::fabs(row.delta - (row.treated - row.basic));
      worst = std::max(worst, gap);
      if (gap > kRowDeltaSlack + kRepresentationSlack) {
        check.passed = false;
        check.detail += (check.detail.empty() ? "" : "; ") + std::string("row t=") + std::to_string(row.t) +
                        " off by " + fixed2(gap);
      }
    }
    if (check.passed) check.detail = "max gap " + fixed2(worst);
    report.checks.push_back(std::move(check));
  }

  for (const auto& row : table.rows) {
    report.basic_sum += row.basic;
    report.treated_sum += row.treated;
  }
  {
    const double basic_gap = std::fabs(report.basic_sum - table.printed_totals.basic);
    const double treated_gap = std::fabs(report.treated_sum - table.printed_totals.treated);
    VerificationCheck check{"column-totals",
                            "column sums within " + fixed2(kColumnTotalSlack) + " of printed totals",
                            basic_gap <= kColumnTotalSlack && treated_gap <= kColumnTotalSlack, ""};
    check.detail = "v_basic sum " + fixed2(report.basic_sum) + " vs " + fixed2(table.printed_totals.basic) +
                   ", v_ddescr sum " + fixed2(report.treated_sum) + " vs " +
                   fixed2(table.printed_totals.treated);
    report.checks.push_back(std::move(check));
  }
  {
    const auto& tot = table.printed_totals;
    const bool ok = cents(tot.treated) - cents(tot.basic) == cents(tot.delta);
    report.checks.push_back({"total-delta", "printed v_ddescr total - v_basic total = dv total (to the cent)", ok,
                             fixed2(tot.treated) + " - " + fixed2(tot.basic) + " vs " + fixed2(tot.delta)});
  }
  {
    const bool ok = kBaseEnterpriseCost + kDescriptorInstallCost == kFiveYearTotalCost;
    report.checks.push_back({"cost-identity", "enterprise cost + descriptor installation = five-year total", ok,
                             std::to_string(kBaseEnterpriseCost) + " + " + std::to_string(kDescriptorInstallCost) +
                                 " = " + std::to_string(kBaseEnterpriseCost + kDescriptorInstallCost) + " vs " +
                                 std::to_string(kFiveYearTotalCost)});
  }
  return report;
}

}  // namespace compind
