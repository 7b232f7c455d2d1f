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

#include "compind/report.hpp"

#include <cmath>

#include "compind/csv.hpp"
#include "compind/error.hpp"
#include "compind/io.hpp"
#include "json.hpp"

namespace compind {
namespace {

using csv::format_double;

bool close_relative(double stored, double recomputed) {
  return std::fabs(stored - recomputed) <= 1e-9 * std::max(1.0, std::fabs(recomputed));
}

std::string indicator_plot(const IndicatorSeries& s, bool pad) {
  std::string out = pad ? "t,V,warmup\n" : "t,V\n";
  if (pad) {
    for (std::size_t t = 1; t < s.first_period; ++t) out += std::to_string(t) + ",0,1\n";
  }
  for (std::size_t p = 0; p < s.periods(); ++p) {
    out += std::to_string(s.first_period + p) + ',' + format_double(s.period_sums[p]) + (pad ? ",0\n" : "\n");
  }
  return out;
}

std::string comparison_plot(const RegimeComparison& c, bool pad) {
  std::string out = pad ? "t,v_basic,v_ddescr,warmup\n" : "t,v_basic,v_ddescr\n";
  if (pad) {
    for (std::size_t t = 1; t < c.rows.front().t; ++t) out += std::to_string(t) + ",0,0,1\n";
  }
  for (const auto& r : c.rows) {
    out += std::to_string(r.t) + ',' + format_double(r.basic) + ',' + format_double(r.treated) +
           (pad ? ",0\n" : "\n");
  }
  return out;
}

}  // namespace

void check_report(const AnalysisReport& report) {
  if (report.indicators.has_value() == report.comparison.has_value()) {
    throw ValidationError("report must hold exactly one of indicators or comparison");
  }
  if (report.indicators) {
    const auto& s = *report.indicators;
    if (s.periods() == 0) throw ValidationError("refusing to emit a report with no evaluable periods");
    double total = 0.0;
    for (std::size_t p = 0; p < s.periods(); ++p) {
      double row = 0.0;
      for (const double v : s.values.row(p)) row += v;
      if (!close_relative(s.period_sums[p], row)) {
        throw ValidationError("period " + std::to_string(s.first_period + p) + " sum disagrees with its indicators");
      }
      total += row;
    }
    if (!close_relative(s.total, total)) throw ValidationError("stored total disagrees with per-period indicators");
  } else {
    const auto& c = *report.comparison;
    if (c.rows.empty()) throw ValidationError("refusing to emit a comparison with no periods");
    double basic = 0.0;
    double treated = 0.0;
    for (const auto& r : c.rows) {
      basic += r.basic;
      treated += r.treated;
    }
    if (!close_relative(c.basic_total, basic) || !close_relative(c.treated_total, treated) ||
        !close_relative(c.delta_total, c.treated_total - c.basic_total)) {
      throw ValidationError("comparison totals disagree with per-period rows");
    }
  }
}

EmittedFiles emit_report(const AnalysisReport& report, const std::filesystem::path& dir) {
  check_report(report);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());

  using nlohmann::json;
  json meta;
  meta["window"] = report.meta.k ? json(*report.meta.k) : json(nullptr);
  meta["mode"] = report.meta.mode ? json(std::string(to_string(*report.meta.mode))) : json(nullptr);
  meta["seed"] = report.meta.seed ? json(*report.meta.seed) : json(nullptr);
  meta["masked_channels"] = report.meta.masked_channels;
  meta["warmup_padded"] = report.pad_warmup;

  EmittedFiles files;
  files.plot = dir / "plot.csv";
  files.metadata = dir / "metadata.json";
  if (report.indicators) {
    const auto& s = *report.indicators;
    files.table = dir / "indicators.csv";
    meta["kind"] = "indicators";
    meta["channels"] = s.channel_labels;
    meta["first_period"] = s.first_period;
    meta["last_period"] = s.last_period();
    meta["total"] = s.total;
    write_text_file_atomic(files.table, format_indicator_table(s));
    write_text_file_atomic(files.plot, indicator_plot(s, report.pad_warmup));
  } else {
    const auto& c = *report.comparison;
    files.table = dir / "comparison.csv";
    meta["kind"] = "comparison";
    meta["first_period"] = c.rows.front().t;
    meta["last_period"] = c.rows.back().t;
    meta["basic_total"] = c.basic_total;
    meta["treated_total"] = c.treated_total;
    meta["delta_total"] = c.delta_total;
    write_text_file_atomic(files.table, format_regime_table(c));
    write_text_file_atomic(files.plot, comparison_plot(c, report.pad_warmup));
  }
  write_text_file_atomic(files.metadata, meta.dump(2) + '\n');
  return files;
}

}  // namespace compind
