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

#ifndef MPK_INSTANCE_IO_HPP_
#define MPK_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "mpk/model.hpp"
#include "mpk/rational.hpp"

// JSON instance and solution files. Numbers are integers, probabilities and
// objectives are "num/den" strings, and unknown fields are rejected.
namespace mpk::io {

inline constexpr int kFormatVersion = 1;

// Throws ValidationError naming the offending field (or line and column for
// syntax errors). Does not run validate_instance.
Instance parse_instance(std::string_view text);

// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_instance(const Instance& inst);

struct SolutionRecord {
  Selection selected;
  Rational objective;
  std::string algorithm;
  std::optional<Rational> epsilon;
  int iterations = 0;
  double wall_ms = 0;
};

SolutionRecord parse_solution(std::string_view text);
std::string serialize_solution(const SolutionRecord& sol);

// Throw IoError when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace mpk::io

#endif  // MPK_INSTANCE_IO_HPP_
