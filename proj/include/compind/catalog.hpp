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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compind {

/// One qualification outcome: a skill at a given level and its request text.
struct DescriptorEntry {
  int level = 0;  // 1=Bachelor, 2=Master, 3=PhD
  std::string level_name;
  std::string skill_id;  // "<level>.<skill>"
  std::string skill_name;
  std::string request_id;  // skill_id + ".1"
  std::string request_text;

  /// Skill number within the level (the "s" in "L.s").
  int skill_number() const;

  friend bool operator==(const DescriptorEntry&, const DescriptorEntry&) = default;
};

/// Validated, immutable set of 15 descriptor entries (3 levels x 5 skills),
/// ordered by (skill number, level).
class DescriptorCatalog {
 public:
  static constexpr std::size_t kLevels = 3;
  static constexpr std::size_t kSkillsPerLevel = 5;
  static constexpr std::size_t kEntryCount = kLevels * kSkillsPerLevel;

  /// Validates the entries and sorts them. Throws ValidationError.
  static DescriptorCatalog from_entries(std::vector<DescriptorEntry> entries);

  const std::vector<DescriptorEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<DescriptorEntry> lookup(std::string_view skill_id) const;
  bool contains(std::string_view skill_id) const { return lookup(skill_id).has_value(); }
  std::size_t count_level(int level) const;

  friend bool operator==(const DescriptorCatalog&, const DescriptorCatalog&) = default;

 private:
  explicit DescriptorCatalog(std::vector<DescriptorEntry> entries) : entries_(std::move(entries)) {}

  std::vector<DescriptorEntry> entries_;
};

/// Parses a tab-separated catalog document:
///
///     level<TAB>level_name<TAB>skill_id<TAB>skill_name<TAB>request_id<TAB>request_text
///
/// The header line is required before any record. Blank lines and lines
/// starting with '#' are ignored. Throws ParseError on malformed records and
/// ValidationError when the records break catalog invariants.
DescriptorCatalog load_catalog(std::string_view document, std::string_view source = "<catalog>");
DescriptorCatalog load_catalog_file(const std::filesystem::path& path);

/// The Dublin Descriptor catalog shipped with the library.
const DescriptorCatalog& bundled_catalog();

std::string serialize_catalog(const DescriptorCatalog& catalog);

}  // namespace compind
