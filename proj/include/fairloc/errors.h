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

#ifndef FAIRLOC_ERRORS_H_
#define FAIRLOC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairloc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGroupError : public Error {
 public:
  explicit EmptyGroupError(int group)
      : Error("group " + std::to_string(group) + " has no agents"),
        group_(group) {}
  int group() const { return group_; }

 private:
  int group_;
};

class InvalidLocationError : public Error {
 public:
  using Error::Error;
};

class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

class InvalidOutcomeError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Every candidate location of a ratio-form objective has a zero denominator.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

// A lower-bound construction cannot be instantiated for the observed outcome.
class ConstructionInapplicableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An instance parsed correctly but violates a profile invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairloc

#endif  // FAIRLOC_ERRORS_H_
