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

#include "compind/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "compind/catalog.hpp"
#include "compind/csv.hpp"
#include "compind/error.hpp"
#include "compind/indicator.hpp"
#include "json.hpp"

namespace compind {
namespace {

using csv::format_double;

constexpr std::string_view kMappingHeader = "competency_id,channel_label,flag";
constexpr std::string_view kRegimeHeader = "t,v_basic,v_ddescr,dv";

std::string join_fields(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

void check_label(const std::string& label) {
  if (label.find_first_of(",\n\r") != std::string::npos) {
    throw ValidationError("label '" + label + "' cannot be written to a comma-separated file");
  }
}

std::size_t parse_period(const csv::Line& line, std::string_view field, const std::string& src) {
  std::size_t t = 0;
  if (!csv::parse_size(field, t) || t == 0) {
    throw ParseError(src, line.number, "t", "period '" + std::string(field) + "' is not a positive integer");
  }
  return t;
}

double parse_value(const csv::Line& line, std::string_view field, const std::string& name,
                   const std::string& src) {
  double v = 0.0;
  if (!csv::parse_double(field, v)) {
    throw ParseError(src, line.number, name, "'" + std::string(field) + "' is not a finite number");
  }
  return v;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

// --- events -----------------------------------------------------------------

EnterpriseModel parse_events(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = csv::content_lines(text);
  if (lines.empty()) throw ParseError(src, 1, "header", "missing header row 't,<labels>'");

  const auto header = csv::split(lines.front().text, ',');
  if (csv::trim(header.front()) != "t") {
    throw ParseError(src, lines.front().number, "t", "first header column must be 't'");
  }
  if (header.size() < 2) throw ParseError(src, lines.front().number, "header", "no event channels");
  std::vector<std::string> labels;
  for (std::size_t c = 1; c < header.size(); ++c) labels.emplace_back(csv::trim(header[c]));
  const std::size_t n = labels.size();
  if (lines.size() == 1) {
    throw ParseError(src, lines.front().number + 1, "t", "no data rows (t_max = 0)");
  }

  std::map<std::size_t, std::pair<std::size_t, std::vector<double>>> rows;  // t -> (line, values)
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = csv::split(line.text, ',');
    if (fields.size() != n + 1) {
      throw ParseError(src, line.number, "row",
                       "expected " + std::to_string(n + 1) + " fields, found " + std::to_string(fields.size()));
    }
    const std::size_t t = parse_period(line, fields[0], src);
    std::vector<double> values(n);
    for (std::size_t c = 0; c < n; ++c) values[c] = parse_value(line, fields[c + 1], labels[c], src);
    if (!rows.emplace(t, std::pair(line.number, std::move(values))).second) {
      throw ParseError(src, line.number, "t", "duplicate period " + std::to_string(t));
    }
  }

  Matrix events(rows.size(), n);
  std::size_t expected = 1;
  for (const auto& [t, entry] : rows) {
    if (t != expected) {
      throw ParseError(src, entry.first, "t", "missing period " + std::to_string(expected));
    }
    std::copy(entry.second.begin(), entry.second.end(), events.row(t - 1).begin());
    ++expected;
  }
  try {
    return EnterpriseModel(std::move(events), std::move(labels));
  } catch (const ValidationError& e) {
    throw ParseError(src, lines.front().number, "header", e.what());
  }
}

EnterpriseModel read_events(const std::filesystem::path& path) {
  return parse_events(read_text_file(path), path.string());
}

std::string format_events(const EnterpriseModel& model) {
  std::string out = "t";
  for (const auto& label : model.channel_labels()) {
    check_label(label);
    out += ',' + label;
  }
  out += '\n';
  for (std::size_t t = 1; t <= model.t_max(); ++t) {
    out += std::to_string(t);
    for (std::size_t c = 0; c < model.channels(); ++c) out += ',' + format_double(model.value(t, c));
    out += '\n';
  }
  return out;
}

// --- mapping ----------------------------------------------------------------

CompetencyMapping parse_mapping(std::string_view text, const std::vector<std::string>& channel_labels,
                                const DescriptorCatalog* catalog, std::string_view source) {
  const std::string src(source);
  CompetencyMapping mapping;
  mapping.channels = channel_labels.size();
  std::optional<double> budget;
  std::map<std::string, std::size_t, std::less<>> competency_index;
  std::map<std::string, std::size_t, std::less<>> channel_index;
  for (std::size_t c = 0; c < channel_labels.size(); ++c) channel_index.emplace(channel_labels[c], c);
  std::set<std::pair<std::size_t, std::size_t>> seen;

  bool in_table = false;
  for (const auto& line : csv::content_lines(text)) {
    const auto fields = csv::split(line.text, ',');
    if (!in_table) {
      const auto key = csv::trim(fields.front());
      if (csv::trim(line.text) == kMappingHeader) {
        in_table = true;
        mapping.flags.assign(mapping.competencies() * mapping.channels, 0);
      } else if (key == "budget") {
        if (fields.size() != 2) throw ParseError(src, line.number, "budget", "expected 'budget,<value>'");
        if (budget) throw ParseError(src, line.number, "budget", "budget given twice");
        budget = parse_value(line, fields[1], "budget", src);
      } else if (key == "cost") {
        if (fields.size() != 3) {
          throw ParseError(src, line.number, "cost", "expected 'cost,<competency_id>,<value>'");
        }
        const std::string id(csv::trim(fields[1]));
        if (id.empty()) throw ParseError(src, line.number, "competency_id", "empty competency id");
        if (!competency_index.emplace(id, mapping.competencies()).second) {
          throw ParseError(src, line.number, "competency_id", "duplicate cost line for '" + id + "'");
        }
        mapping.competency_ids.push_back(id);
        mapping.costs.push_back(parse_value(line, fields[2], "cost", src));
      } else {
        throw ParseError(src, line.number, std::string(key),
                         "expected 'budget', 'cost' or the header '" + std::string(kMappingHeader) + "'");
      }
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError(src, line.number, "row", "expected 'competency_id,channel_label,flag'");
    }
    const auto id = csv::trim(fields[0]);
    const auto comp = competency_index.find(id);
    if (comp == competency_index.end()) {
      throw ParseError(src, line.number, "competency_id", "'" + std::string(id) + "' has no cost line");
    }
    const auto label = csv::trim(fields[1]);
    const auto chan = channel_index.find(label);
    if (chan == channel_index.end()) {
      throw ParseError(src, line.number, "channel_label", "unknown channel '" + std::string(label) + "'");
    }
    const auto flag = csv::trim(fields[2]);
    if (flag != "0" && flag != "1") throw ParseError(src, line.number, "flag", "flag must be 0 or 1");
    if (!seen.emplace(comp->second, chan->second).second) {
      throw ParseError(src, line.number, "row", "duplicate pair (" + std::string(id) + ", " + std::string(label) + ")");
    }
    mapping.flags[comp->second * mapping.channels + chan->second] = flag == "1" ? 1 : 0;
  }
  if (!budget) throw ParseError(src, 0, "budget", "missing 'budget,<value>' line");
  if (!in_table) throw ParseError(src, 0, "header", "missing '" + std::string(kMappingHeader) + "' header");
  mapping.budget = *budget;
  if (catalog) {
    mapping.validate_against(*catalog);
  } else {
    mapping.validate();
  }
  return mapping;
}

std::string format_mapping(const CompetencyMapping& mapping, const std::vector<std::string>& channel_labels) {
  mapping.validate();
  if (channel_labels.size() != mapping.channels) throw DimensionError("mapping/label count mismatch");
  std::string out = "budget," + format_double(mapping.budget) + '\n';
  for (std::size_t i = 0; i < mapping.competencies(); ++i) {
    check_label(mapping.competency_ids[i]);
    out += "cost," + mapping.competency_ids[i] + ',' + format_double(mapping.costs[i]) + '\n';
  }
  out += std::string(kMappingHeader) + '\n';
  for (std::size_t i = 0; i < mapping.competencies(); ++i) {
    for (std::size_t c = 0; c < mapping.channels; ++c) {
      if (mapping.flag(i, c)) out += mapping.competency_ids[i] + ',' + channel_labels[c] + ",1\n";
    }
  }
  return out;
}

// --- scenario ---------------------------------------------------------------

ScenarioConfig parse_scenario(std::string_view json_text, std::string_view source) {
  using nlohmann::json;
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, json_text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(json_text.begin(), json_text.begin() + upto, '\n'));
    throw ParseError(src, line, "json", e.what());
  }
  if (!doc.is_object()) throw ParseError(src, 1, "scenario", "expected a JSON object");

  auto unsigned_field = [&](const json& obj, const char* key, const std::string& where) -> std::uint64_t {
    if (!obj.contains(key)) throw ParseError(src, 0, where + key, "missing field");
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned()) throw ParseError(src, 0, where + key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  };
  auto real_field = [&](const json& obj, const char* key, const std::string& where,
                        std::optional<double> fallback) -> double {
    if (!obj.contains(key)) {
      if (fallback) return *fallback;
      throw ParseError(src, 0, where + key, "missing field");
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ParseError(src, 0, where + key, "expected a number");
    return v.get<double>();
  };

  ScenarioConfig config;
  config.seed = unsigned_field(doc, "seed", "");
  config.periods = unsigned_field(doc, "periods", "");
  if (!doc.contains("processes") || !doc["processes"].is_array()) {
    throw ParseError(src, 0, "processes", "expected an array of process objects");
  }
  std::size_t idx = 0;
  for (const auto& p : doc["processes"]) {
    const std::string where = "processes[" + std::to_string(idx++) + "].";
    if (!p.is_object()) throw ParseError(src, 0, where, "expected an object");
    ProcessConfig pc;
    if (!p.contains("name") || !p["name"].is_string()) throw ParseError(src, 0, where + "name", "expected a string");
    pc.name = p["name"].get<std::string>();
    pc.channels = unsigned_field(p, "channels", where);
    pc.base_level = real_field(p, "base_level", where, 0.0);
    pc.amplitude = real_field(p, "amplitude", where, 0.0);
    pc.period_length = unsigned_field(p, "period_length", where);
    pc.noise_scale = real_field(p, "noise_scale", where, 0.0);
    config.processes.push_back(std::move(pc));
  }
  if (doc.contains("intervention_period") && !doc["intervention_period"].is_null()) {
    config.intervention_period = unsigned_field(doc, "intervention_period", "");
  }
  config.intervention_cost_per_period = real_field(doc, "intervention_cost_per_period", "", 0.0);
  config.validate();
  return config;
}

std::string format_scenario(const ScenarioConfig& config) {
  using nlohmann::json;
  json doc;
  doc["seed"] = config.seed;
  doc["periods"] = config.periods;
  doc["processes"] = json::array();
  for (const auto& p : config.processes) {
    doc["processes"].push_back({{"name", p.name},
                                {"channels", p.channels},
                                {"base_level", p.base_level},
                                {"amplitude", p.amplitude},
                                {"period_length", p.period_length},
                                {"noise_scale", p.noise_scale}});
  }
  doc["intervention_period"] = config.intervention_period ? json(*config.intervention_period) : json(nullptr);
  doc["intervention_cost_per_period"] = config.intervention_cost_per_period;
  return doc.dump(2) + '\n';
}

// --- regime table -----------------------------------------------------------

RegimeTable parse_regime_table(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = csv::content_lines(text);
  if (lines.empty() || csv::trim(lines.front().text) != kRegimeHeader) {
    throw ParseError(src, lines.empty() ? 1 : lines.front().number, "header",
                     "expected '" + std::string(kRegimeHeader) + "'");
  }
  RegimeTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = csv::split(line.text, ',');
    if (fields.size() != 4) throw ParseError(src, line.number, "row", "expected 4 fields");
    if (table.totals) throw ParseError(src, line.number, "t", "rows after the total row");
    RegimeRow row;
    row.basic = parse_value(line, fields[1], "v_basic", src);
    row.treated = parse_value(line, fields[2], "v_ddescr", src);
    row.delta = parse_value(line, fields[3], "dv", src);
    if (csv::trim(fields[0]) == "total") {
      table.totals = row;
      continue;
    }
    row.t = parse_period(line, fields[0], src);
    if (!table.rows.empty() && row.t <= table.rows.back().t) {
      throw ParseError(src, line.number, "t", "periods must be strictly increasing");
    }
    table.rows.push_back(row);
  }
  return table;
}

RegimeTable to_table(const RegimeComparison& comparison) {
  return RegimeTable{comparison.rows,
                     RegimeRow{0, comparison.basic_total, comparison.treated_total, comparison.delta_total}};
}

std::string format_regime_table(const RegimeComparison& comparison) {
  std::string out = std::string(kRegimeHeader) + '\n';
  for (const auto& r : comparison.rows) {
    out += std::to_string(r.t) + ',' + format_double(r.basic) + ',' + format_double(r.treated) + ',' +
           format_double(r.delta) + '\n';
  }
  out += "total," + format_double(comparison.basic_total) + ',' + format_double(comparison.treated_total) +
         ',' + format_double(comparison.delta_total) + '\n';
  return out;
}

// --- indicator table --------------------------------------------------------

std::string format_indicator_table(const IndicatorSeries& series) {
  std::vector<std::string> header{"t"};
  for (const auto& label : series.channel_labels) {
    check_label(label);
    header.push_back(label);
  }
  header.emplace_back("row_sum");
  std::string out = join_fields(header) + '\n';
  std::vector<double> channel_totals(series.channels(), 0.0);
  for (std::size_t p = 0; p < series.periods(); ++p) {
    out += std::to_string(series.first_period + p);
    const auto row = series.values.row(p);
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += ',' + format_double(row[c]);
      channel_totals[c] += row[c];
    }
    out += ',' + format_double(series.period_sums[p]) + '\n';
  }
  out += "total";
  for (const double v : channel_totals) out += ',' + format_double(v);
  out += ',' + format_double(series.total) + '\n';
  return out;
}

bool looks_like_indicator_table(std::string_view text) {
  const auto lines = csv::content_lines(text);
  if (lines.empty()) return false;
  const auto header = csv::split(lines.front().text, ',');
  return header.size() >= 2 && csv::trim(header.back()) == "row_sum";
}

IndicatorColumn parse_indicator_column(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = csv::content_lines(text);
  if (lines.empty() || !looks_like_indicator_table(text)) {
    throw ParseError(src, 1, "header", "expected 't,<labels>,row_sum'");
  }
  const std::size_t width = csv::split(lines.front().text, ',').size();
  IndicatorColumn column;
  bool have_total = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = csv::split(line.text, ',');
    if (fields.size() != width) throw ParseError(src, line.number, "row", "ragged row");
    if (have_total) throw ParseError(src, line.number, "t", "rows after the total row");
    if (csv::trim(fields[0]) == "total") {
      have_total = true;
      continue;
    }
    const std::size_t t = parse_period(line, fields[0], src);
    if (column.values.empty()) {
      column.first_period = t;
    } else if (t != column.first_period + column.values.size()) {
      throw ParseError(src, line.number, "t", "periods must be consecutive");
    }
    column.values.push_back(parse_value(line, fields.back(), "row_sum", src));
  }
  if (column.values.empty()) throw ParseError(src, 0, "t", "no indicator rows");
  return column;
}

}  // namespace compind
