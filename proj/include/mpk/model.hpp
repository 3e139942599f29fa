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

#ifndef MPK_MODEL_HPP_
#define MPK_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpk/rational.hpp"

namespace mpk {

// One item: reward r, size q and deadline d in 1..T.
struct Item {
  std::int64_t reward = 0;
  std::int64_t size = 0;
  int deadline = 0;
};

// One capacity path of the stochastic variant.
struct Scenario {
  Rational probability;
  std::vector<std::int64_t> cum_capacity;  // c_1..c_T, c_0 = 0 implied
};

struct ScenarioSet {
  std::vector<Scenario> paths;
};

enum class Variant { kHard, kSoft, kStochastic };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// A problem instance. Capacities are cumulative: c_t is the total capacity
// available up to period t. Penalty rates make the instance soft; scenarios
// (which require penalty rates) make it stochastic.
struct Instance {
  int horizon = 0;
  std::vector<std::int64_t> cum_capacity;
  std::optional<std::vector<std::int64_t>> penalty_rates;
  std::optional<ScenarioSet> scenarios;
  std::vector<Item> items;

  Variant variant() const;
  int num_items() const { return static_cast<int>(items.size()); }
};

// Distinct, ascending, 0-based item indices.
using Selection = std::vector<int>;

struct Solution {
  Selection selected;
  Rational objective;
  // Per path (one path unless stochastic), overflow units per period.
  std::vector<std::vector<std::int64_t>> overflow_per_period;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate_instance(const Instance& inst);

// Throws ValidationError listing every error when the instance is invalid.
void require_valid(const Instance& inst);

// Checks a selection is sorted, distinct and in range. Throws
// ValidationError.
void check_selection(const Instance& inst, const Selection& sel);

// a_t = c_t - c_{t-1} with c_0 = 0.
std::vector<std::int64_t> increments(std::span<const std::int64_t> cum);

// Per-period rate actually charged: b_t = min over tau <= t of B_tau. With
// the freedom to place overflow in any period before its deadline, a unit
// that spills in period t is cheapest to charge at the lowest earlier rate.
std::vector<std::int64_t> effective_penalties(const Instance& inst);

// Q(S(t)) for t = 1..T (index t - 1).
std::vector<std::int64_t> period_loads(const Instance& inst, const Selection& sel);

// Overflow units y_t of each period, from the closed form
//   y_t = [Q_t - max_{0 <= t' < t} (c_t - c_t' - sum_{t' < tau < t} Q_tau)]^+.
std::vector<std::int64_t> period_overflows(std::span<const std::int64_t> cum,
                                           std::span<const std::int64_t> loads);

std::int64_t total_reward(const Instance& inst, const Selection& sel);

// R(S) - sum_t b_t y_t on the given path (default: the instance capacities).
std::int64_t profit(const Instance& inst, const Selection& sel,
                    std::optional<std::span<const std::int64_t>> path = std::nullopt);

struct Feasibility {
  bool feasible = false;
  std::int64_t reward = 0;
};

// Cumulative packing constraints sum_{d_j <= t} q_j <= c_t for all t.
Feasibility mpbkp_feasible(const Instance& inst, const Selection& sel);

// p_i = r_i - b_{d_i} (q_i - c_{d_i})^+, the profit of i packed alone.
std::int64_t item_profit(const Instance& inst, int i);

// max_i p_i and sum_i p_i over items with p_i > 0. The optimum lies in
// [max, total] and total <= n * max.
struct ProfitBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};
ProfitBounds profit_bounds(const Instance& inst);

// Removes items with p_i <= 0. original_index maps new positions back.
struct ReducedInstance {
  Instance instance;
  std::vector<int> original_index;
};
ReducedInstance drop_unprofitable(const Instance& inst);

// Hard instance as soft one with uniform rate sum_i r_i + 1, so that any
// overflow costs more than all rewards together.
Instance to_soft(const Instance& inst);

}  // namespace mpk

#endif  // MPK_MODEL_HPP_
