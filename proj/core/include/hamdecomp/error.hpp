// Copyright 2026 The hamdecomp Authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace hamdecomp {

// Base class for every error raised by the library. User-facing tools catch
// this and report `what()` without a stack trace.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order is not an odd integer >= 3, or is outside a supported range.
class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

// A vertex label outside 1..m.
class VertexRangeError : public Error {
 public:
  using Error::Error;
};

// A directed edge that is absent from the tournament, or a loop, or an edge
// whose cyclic distance does not fit the leading construction.
class EdgeError : public Error {
 public:
  using Error::Error;
};

// Adjacency data that violates the tournament axioms.
class InvalidTournamentError : public Error {
 public:
  using Error::Error;
};

// A step value that is out of range, or shares a factor with the order where
// a Hamilton circuit was requested.
class StepError : public Error {
 public:
  using Error::Error;
};

// Prime-order construction requested for a composite order.
class CompositeOrderError : public Error {
 public:
  using Error::Error;
};

// Malformed adjacency-matrix text. Row and column are 1-based; 0 means the
// problem is not tied to a particular cell.
class MalformedInputError : public Error {
 public:
  MalformedInputError(const std::string& message, int row, int column)
      : Error(message), row_(row), column_(column) {}

  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  int row_;
  int column_;
};

// A JSON document that does not follow the packing schema. `path()` is a
// JSON-pointer style location such as "/circuits/2/0".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, std::string path)
      : Error(message + " at " + (path.empty() ? std::string("/") : path)),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Export style that is inconsistent with the supplied data.
class StyleError : public Error {
 public:
  using Error::Error;
};

// Search requested on an input the oracle refuses (non-diregular, too large
// for an unbudgeted exhaustive run).
class SearchInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hamdecomp
