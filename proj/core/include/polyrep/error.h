// Copyright 2026 The Polyrep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYREP_ERROR_H_
#define POLYREP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyrep {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An opinion quadruple violated additivity or the unit-interval bounds.
class InvalidOpinion : public Error {
 public:
  using Error::Error;
};

// Consensus of two opinions that both have zero uncertainty.
class DogmaticConflict : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Inputs that parse individually but cannot be used together, e.g. topic ids
// missing from a metric report.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace polyrep

#endif  // POLYREP_ERROR_H_
