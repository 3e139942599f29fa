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

#ifndef MPK_MPBKP_HPP_
#define MPK_MPBKP_HPP_

#include <cstdint>
#include <vector>

#include "mpk/model.hpp"
#include "mpk/rational.hpp"
#include "mpk/stepfn.hpp"

// Approximation schemes for the hard-capacity problem: convolve the
// per-period knapsack functions left to right, truncating at each cumulative
// capacity.
namespace mpk::mpbkp {

struct SolveStats {
  int periods = 0;
  std::size_t max_complexity = 0;  // largest intermediate step function
  std::size_t reward_classes = 0;  // uniform scheme only
  double wall_ms = 0;
};

struct ApproxResult {
  Rational value;  // lower bound on the reward of `selected`
  Selection selected;
  Rational eps;           // requested accuracy
  Rational eps_internal;  // per-period rounding accuracy actually used
  SolveStats stats;
};

// Per-period functions kept for inspection. `kept` lists the items that
// survive preprocessing: items that cannot fit alone are removed, then items
// with reward at most (eps_discard / n) max reward.
struct Trace {
  std::vector<int> kept;
  std::int64_t r0 = 0;  // smallest kept reward, origin of the rounding grid
  Rational eps_discard;
  Rational eps_reward;  // uniform scheme: reward rounding accuracy
  Rational eps_period;  // per-period (or per-convolution) accuracy
  int classes_bound = 0;  // uniform scheme: m + 1
  std::vector<StepFn> per_period;  // f~_1..f~_T
};

Trace conv_trace(const Instance& inst, const Rational& eps);
ApproxResult solve_conv(const Instance& inst, const Rational& eps);

Trace uniform_trace(const Instance& inst, const Rational& eps);
ApproxResult solve_uniform(const Instance& inst, const Rational& eps);

}  // namespace mpk::mpbkp

#endif  // MPK_MPBKP_HPP_
