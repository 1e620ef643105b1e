// Copyright 2026 The Authors.
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

#ifndef MLOGIC_ERRORS_H_
#define MLOGIC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlogic {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element name or subset does not belong to the ground set in question.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structure or construction violates a stated precondition (rank axioms,
// circuit-hyperplane requirement, bad index, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation was refused because it would exceed a configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mlogic

#endif  // MLOGIC_ERRORS_H_
