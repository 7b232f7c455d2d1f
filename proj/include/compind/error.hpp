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
#include <stdexcept>
#include <string>

namespace compind {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line and the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string field, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

/// Well-formed input that breaks a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  BudgetError(double total_cost, double budget);

  double total_cost() const noexcept { return total_cost_; }
  double budget() const noexcept { return budget_; }

 private:
  double total_cost_;
  double budget_;
};

class InvalidWindowError : public Error {
 public:
  using Error::Error;
};

class InsufficientHistoryError : public Error {
 public:
  using Error::Error;
};

class RangeMismatchError : public Error {
 public:
  using Error::Error;
};

/// The bundled reference data failed its structural checks.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace compind
