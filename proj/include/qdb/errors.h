// Copyright 2026 The qdb Authors
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

#ifndef QDB_ERRORS_H_
#define QDB_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested size exceeds what the dense simulator supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A gate or classical context failed a structural check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad argument: unknown qubit, wrong register width, malformed input.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Qubit used in the wrong lifecycle state (double allocate, double free).
class LifecycleError : public Error {
 public:
  using Error::Error;
};

// Register read while in the wrong basis.
class BasisError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// gcd(a, N) != 1. The common factor is itself a factor of N.
class NoInverseError : public Error {
 public:
  NoInverseError(std::int64_t a, std::int64_t modulus, std::int64_t gcd);
  std::int64_t gcd() const { return gcd_; }

 private:
  std::int64_t gcd_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qdb

#endif  // QDB_ERRORS_H_
