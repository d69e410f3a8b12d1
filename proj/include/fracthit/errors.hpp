// Copyright 2026 The Fracthit Authors
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

#ifndef FRACTHIT_ERRORS_HPP_
#define FRACTHIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fracthit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user-supplied parameters or malformed data.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// File parse failure; carries a 1-based line number when known.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, int line)
      : ValidationError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Capability not provided by the adapter in use.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace fracthit

#endif  // FRACTHIT_ERRORS_HPP_
