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

#ifndef MPK_MPBKPSS_HPP_
#define MPK_MPBKPSS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mpk/model.hpp"
#include "mpk/rational.hpp"

// Overflow accounting on a single capacity path and the greedy scheme for
// the stochastic-capacity problem.
namespace mpk::mpbkpss {

struct PathItem {
  std::int64_t size = 0;
  int deadline = 0;
};

std::vector<PathItem> path_items(const Instance& inst, const Selection& sel);

struct PathResidual {
  std::vector<std::int64_t> residual;  // unused capacity increment per period
  std::int64_t overflow = 0;
};

// Assigns each item, in the given order, to the latest capacity increments
// available at or before its deadline. Whatever does not fit overflows.
PathResidual overflow_assignment(std::span<const std::int64_t> increments,
                                 std::span<const PathItem> items);

// Total overflow from the closed form on cumulative capacities.
std::int64_t overflow_formula(std::span<const std::int64_t> cum_capacity,
                              std::span<const PathItem> items);

// Feasible solution of the dual of the overflow LP:
//   max sum_i q_i gamma_i - sum_t c_t lambda_t
//   s.t. gamma_i <= sum_{t >= d_i} lambda_t, gamma_i <= 1, lambda >= 0,
// with tau the first period whose increment is not used up.
struct DualCertificate {
  int tau = 0;                 // T + 1 when every increment is used
  std::vector<int> lambda;     // per period
  std::vector<int> gamma;      // per item
  std::int64_t dual_value = 0;
};

// Builds the certificate and checks it matches the assignment's overflow.
// Throws SolverError on mismatch.
DualCertificate dual_certificate(std::span<const std::int64_t> cum_capacity,
                                 std::span<const PathItem> items, const PathResidual& residual);

// Whether the certificate satisfies every dual constraint.
bool dual_feasible(const DualCertificate& cert, std::span<const PathItem> items);

// Leftover capacity after each period:
//   C(t) = max(0, max_{t' <= t} sum_{tau = t'}^{t} (a_tau - Q_tau)).
std::vector<std::int64_t> capacity_profile(std::span<const std::int64_t> cum_capacity,
                                           std::span<const PathItem> items);

// Expected profit over the scenarios; with `base`, the marginal profit of
// adding `sel` to it.
Rational expected_profit(const Instance& inst, const Selection& sel, const Selection* base = nullptr);

struct GreedyResult {
  Solution solution;
  int rounds = 0;
};

// Repeatedly adds the item with the largest nonnegative marginal expected
// profit, smallest index on ties.
GreedyResult greedy_solve(const Instance& inst);

}  // namespace mpk::mpbkpss

#endif  // MPK_MPBKPSS_HPP_
