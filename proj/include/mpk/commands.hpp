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

#ifndef MPK_COMMANDS_HPP_
#define MPK_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mpk/model.hpp"
#include "mpk/rational.hpp"

namespace mpk::cli {

// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kSolver = 2,  // solver failure, variant mismatch or failed verification
  kIo = 3,
};

enum class Algo { kConv, kUniform, kDp, kSimple, kGreedy, kBruteForce, kDpExact };

std::optional<Algo> parse_algo(std::string_view name);
std::string_view algo_name(Algo a);
bool algo_needs_eps(Algo a);

struct Outcome {
  Selection selected;
  Rational objective;  // exact objective of `selected` for the instance variant
  int iterations = 0;
  double wall_ms = 0;
};

// Runs one algorithm. Throws VariantError when it does not apply.
Outcome run_algorithm(const Instance& inst, Algo algo, const Rational& eps);

// Exact objective of a selection: reward (hard, throws SolverError if
// infeasible), profit (soft) or expected profit (stochastic).
Rational objective_of(const Instance& inst, const Selection& sel);

// Entry point of the `mpk` tool. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpk::cli

#endif  // MPK_COMMANDS_HPP_
