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

#include "compind/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "compind/bundled.hpp"
#include "compind/csv.hpp"
#include "compind/error.hpp"

namespace compind {
namespace {

constexpr std::array<std::string_view, 6> kFields = {"level",      "level_name", "skill_id",
                                                     "skill_name", "request_id", "request_text"};

std::string header_line() {
  std::string out;
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    if (i) out += '\t';
    out += kFields[i];
  }
  return out;
}

void validate_entry(const DescriptorEntry& e) {
  const auto where = "entry " + (e.skill_id.empty() ? std::string("<unnamed>") : e.skill_id);
  if (e.level < 1 || e.level > static_cast<int>(DescriptorCatalog::kLevels)) {
    throw ValidationError(where + ": level must be 1, 2 or 3");
  }
  const std::string prefix = std::to_string(e.level) + ".";
  if (e.skill_id.size() != 3 || e.skill_id.compare(0, 2, prefix) != 0 || e.skill_id[2] < '1' ||
      e.skill_id[2] > '5') {
    throw ValidationError(where + ": skill_id must be \"" + prefix + "<1..5>\"");
  }
  if (e.request_id != e.skill_id + ".1") {
    throw ValidationError(where + ": request_id must be skill_id + \".1\"");
  }
  if (e.request_text.empty()) throw ValidationError(where + ": request_text is empty");
  if (e.level_name.empty() || e.skill_name.empty()) {
    throw ValidationError(where + ": level_name and skill_name must be non-empty");
  }
}

}  // namespace

int DescriptorEntry::skill_number() const {
  return skill_id.size() == 3 ? skill_id[2] - '0' : 0;
}

DescriptorCatalog DescriptorCatalog::from_entries(std::vector<DescriptorEntry> entries) {
  std::set<std::pair<int, std::string>> seen;
  for (const auto& e : entries) {
    validate_entry(e);
    if (!seen.emplace(e.level, e.skill_id).second) {
      throw ValidationError("duplicate catalog key (level " + std::to_string(e.level) +
                            ", skill_id " + e.skill_id + ")");
    }
  }
  if (entries.size() != kEntryCount) {
    throw ValidationError("catalog must hold " + std::to_string(kEntryCount) + " entries, found " +
                          std::to_string(entries.size()));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::pair(a.skill_number(), a.level) < std::pair(b.skill_number(), b.level);
  });
  return DescriptorCatalog(std::move(entries));
}

std::optional<DescriptorEntry> DescriptorCatalog::lookup(std::string_view skill_id) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const auto& e) { return e.skill_id == skill_id; });
  if (it == entries_.end()) return std::nullopt;
  return *it;
}

std::size_t DescriptorCatalog::count_level(int level) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.level == level; }));
}

DescriptorCatalog load_catalog(std::string_view document, std::string_view source) {
  const std::string src(source);
  const auto lines = csv::content_lines(document);
  std::vector<DescriptorEntry> entries;
  bool have_header = false;
  for (const auto& line : lines) {
    const auto fields = csv::split(line.text, '\t');
    if (!have_header) {
      if (line.text != header_line()) {
        throw ParseError(src, line.number, "header", "expected catalog header line");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != kFields.size()) {
      throw ParseError(src, line.number, fields.size() < kFields.size() ? std::string(kFields[fields.size()]) : "record",
                       "expected " + std::to_string(kFields.size()) + " tab-separated fields, found " +
                           std::to_string(fields.size()));
    }
    DescriptorEntry e;
    std::size_t level = 0;
    if (!csv::parse_size(fields[0], level) || level > 9) {
      throw ParseError(src, line.number, "level", "level is not a small integer");
    }
    e.level = static_cast<int>(level);
    e.level_name = csv::trim(fields[1]);
    e.skill_id = csv::trim(fields[2]);
    e.skill_name = csv::trim(fields[3]);
    e.request_id = csv::trim(fields[4]);
    e.request_text = csv::trim(fields[5]);
    for (std::size_t f = 1; f < kFields.size(); ++f) {
      if (csv::trim(fields[f]).empty()) {
        throw ParseError(src, line.number, std::string(kFields[f]), "field is empty");
      }
    }
    entries.push_back(std::move(e));
  }
  return DescriptorCatalog::from_entries(std::move(entries));
}

DescriptorCatalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str(), path.string());
}

const DescriptorCatalog& bundled_catalog() {
  static const DescriptorCatalog catalog = load_catalog(bundled::catalog_document(), "<bundled catalog>");
  return catalog;
}

std::string serialize_catalog(const DescriptorCatalog& catalog) {
  std::string out = header_line() + "\n";
  for (const auto& e : catalog.entries()) {
    out += std::to_string(e.level) + '\t' + e.level_name + '\t' + e.skill_id + '\t' + e.skill_name +
           '\t' + e.request_id + '\t' + e.request_text + '\n';
  }
  return out;
}

}  // namespace compind
