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

#include "compind/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace compind::csv {

std::vector<Line> content_lines(std::string_view document) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t end = document.find('\n', pos);
    std::string_view text = document.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (!trim(text).empty() && text.front() != '#') lines.push_back({number, text});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(delimiter, pos);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) return false;
  out = value;
  return true;
}

bool parse_size(std::string_view field, std::size_t& out) {
  field = trim(field);
  if (field.empty()) return false;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return false;
  out = value;
  return true;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace compind::csv
