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

#include "compind/error.hpp"

#include <sstream>

namespace compind {
namespace {

std::string describe_location(const std::string& source, std::size_t line, const std::string& field,
                              const std::string& message) {
  std::ostringstream out;
  out << source;
  if (line > 0) out << ":" << line;
  if (!field.empty()) out << " [" << field << "]";
  out << ": " << message;
  return out.str();
}

std::string describe_budget(double total_cost, double budget) {
  std::ostringstream out;
  out.precision(17);
  out << "competency cost " << total_cost << " exceeds budget " << budget;
  return out.str();
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::string field, const std::string& message)
    : Error(describe_location(source, line, field, message)),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

BudgetError::BudgetError(double total_cost, double budget)
    : Error(describe_budget(total_cost, budget)), total_cost_(total_cost), budget_(budget) {}

}  // namespace compind
