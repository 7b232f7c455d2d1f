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

// Minimal delimited-text helpers shared by the file readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace compind::csv {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

/// Splits a document into lines, dropping a trailing '\r'. Blank lines and
/// lines starting with '#' are skipped.
std::vector<Line> content_lines(std::string_view document);

std::vector<std::string_view> split(std::string_view line, char delimiter);

std::string_view trim(std::string_view s);

/// Strict parse of a finite double; the whole field must be consumed.
bool parse_double(std::string_view field, double& out);
bool parse_size(std::string_view field, std::size_t& out);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace compind::csv
