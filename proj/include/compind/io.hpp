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

// Text file formats.
//
// Event series (comma-separated):
//     t,<label_1>,...,<label_n>
//     1,<x_1(1)>,...,<x_n(1)>
// Periods must form the dense sequence 1..t_max (any row order).
//
// Competency mapping (comma-separated; header block, then flag rows):
//     budget,<C>
//     cost,<competency_id>,<cost>        one per competency
//     competency_id,channel_label,flag
//     <competency_id>,<channel_label>,<0|1>
// Pairs not listed are 0. Competencies are ordered as their cost lines.
//
// Regime table (comparison output and bundled reference):
//     t,v_basic,v_ddescr,dv
//     <t>,<basic>,<treated>,<delta>
//     total,<basic_total>,<treated_total>,<delta_total>
//
// Indicator table (analyze output):
//     t,<label_1>,...,<label_n>,row_sum
//     <t>,<V_1(t)>,...,<V_n(t)>,<sum_i V_i(t)>
//     total,<sum_t V_1(t)>,...,<sum_t V_n(t)>,<V>
//
// Blank lines and lines starting with '#' are ignored everywhere. Computed
// values are written with the shortest round-trip representation.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compind/enterprise.hpp"
#include "compind/regime.hpp"
#include "compind/synth.hpp"

namespace compind {

class DescriptorCatalog;
struct IndicatorSeries;

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents);

EnterpriseModel parse_events(std::string_view text, std::string_view source = "<events>");
EnterpriseModel read_events(const std::filesystem::path& path);
std::string format_events(const EnterpriseModel& model);

/// Channel labels must match the events file the mapping is applied to.
/// With a catalog, every competency id must resolve in it.
CompetencyMapping parse_mapping(std::string_view text, const std::vector<std::string>& channel_labels,
                                const DescriptorCatalog* catalog, std::string_view source = "<mapping>");
std::string format_mapping(const CompetencyMapping& mapping, const std::vector<std::string>& channel_labels);

/// JSON object with keys seed, periods, processes (array of objects with
/// name, channels, base_level, amplitude, period_length, noise_scale),
/// intervention_period (optional, null allowed) and
/// intervention_cost_per_period (default 0).
ScenarioConfig parse_scenario(std::string_view json_text, std::string_view source = "<scenario>");
std::string format_scenario(const ScenarioConfig& config);

struct RegimeTable {
  std::vector<RegimeRow> rows;
  std::optional<RegimeRow> totals;  // t unused

  friend bool operator==(const RegimeTable&, const RegimeTable&) = default;
};

RegimeTable parse_regime_table(std::string_view text, std::string_view source = "<regime table>");
std::string format_regime_table(const RegimeComparison& comparison);
RegimeTable to_table(const RegimeComparison& comparison);

std::string format_indicator_table(const IndicatorSeries& series);
/// Reads the t and row_sum columns of an indicator table.
IndicatorColumn parse_indicator_column(std::string_view text, std::string_view source = "<indicators>");

/// True if the header row ends in "row_sum" (an analyze output rather than events).
bool looks_like_indicator_table(std::string_view text);

}  // namespace compind
