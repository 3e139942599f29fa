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

#ifndef MPK_ERRORS_HPP_
#define MPK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mpk {

// Base class for all library errors. The CLI maps each subclass to an exit
// code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: schema violations, invalid instances, bad arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An algorithm was asked to solve a variant it does not handle.
class VariantError : public Error {
 public:
  using Error::Error;
};

// Size guards of exhaustive routines, numeric overflow, broken invariants.
class SolverError : public Error {
 public:
  using Error::Error;
};

class GuardError : public SolverError {
 public:
  using SolverError::SolverError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpk

#endif  // MPK_ERRORS_HPP_
