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

#ifndef MPK_TESTS_FIXTURES_HPP_
#define MPK_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <vector>

#include "mpk/generate.hpp"
#include "mpk/model.hpp"
#include "mpk/mpbkps.hpp"
#include "mpk/stepfn.hpp"

namespace mpk::testing {

// Two periods, hard capacities. OPT = 8 with {1, 2}.
inline Instance ex1() {
  Instance in;
  in.horizon = 2;
  in.cum_capacity = {3, 5};
  in.items = {{4, 2, 1}, {5, 3, 1}, {3, 2, 2}};
  return in;
}

// One period, B = 10. OPT = 6 with {1}.
inline Instance ex2() {
  Instance in;
  in.horizon = 1;
  in.cum_capacity = {2};
  in.penalty_rates = std::vector<std::int64_t>{10};
  in.items = {{5, 1, 1}, {6, 2, 1}};
  return in;
}

// Two equally likely paths, unit sizes, B = 4.
inline Instance ex3() {
  Instance in;
  in.horizon = 2;
  in.cum_capacity = {1, 2};
  in.penalty_rates = std::vector<std::int64_t>{4, 4};
  in.items = {{3, 1, 1}, {2, 1, 2}};
  in.scenarios = ScenarioSet{{{Rational(1, 2), {1, 2}}, {Rational(1, 2), {0, 2}}}};
  return in;
}

// Selection from a bit mask.
inline Selection from_mask(std::uint64_t mask, int n) {
  Selection s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) s.push_back(i);
  }
  return s;
}

// Exact per-period functions f_t = trunc_{c_t}(f_{t-1} + f_{I(t)}) over the
// given items.
inline std::vector<StepFn> exact_chain(const Instance& inst, const std::vector<int>& items) {
  std::vector<StepFn> out;
  StepFn acc;
  for (int t = 1; t <= inst.horizon; ++t) {
    std::vector<KnapsackItem> group;
    for (int i : items) {
      if (inst.items[i].deadline == t) group.push_back({inst.items[i].reward, inst.items[i].size, i});
    }
    acc = truncate(conv_naive(acc, from_items_exact(group)), inst.cum_capacity[t - 1]);
    out.push_back(acc);
  }
  return out;
}

// Leftover table by enumerating every subset of `items` (kept in order) on
// top of every finite source cell: the largest final leftover among paths
// whose final rounded profit is at least p.
inline mpbkps::LeftoverTable dp_large_oracle(const mpbkps::LeftoverTable& table,
                                             const std::vector<mpbkps::GridItem>& items,
                                             std::int64_t delta_c, const mpbkps::ProfitGrid& grid,
                                             std::int64_t B) {
  const std::int64_t K = grid.max_index();
  std::vector<std::int64_t> best_at(K + 1, mpbkps::kNegInf);
  const int n = static_cast<int>(items.size());
  for (std::int64_t pb = 0; pb <= K; ++pb) {
    if (!table[pb].finite()) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::int64_t left = table[pb].leftover + delta_c;
      std::int64_t p = pb;
      for (int k = 0; k < n; ++k) {
        if (!(mask >> k & 1)) continue;
        const std::int64_t shortfall =
            std::max<std::int64_t>(0, items[k].size - std::max<std::int64_t>(0, left));
        p += grid.floor_index(items[k].reward) - grid.ceil_index(static_cast<__int128>(B) * shortfall);
        left -= items[k].size;
      }
      if (p < 0) continue;
      p = std::min(p, K);
      best_at[p] = std::max(best_at[p], left);
    }
  }
  mpbkps::LeftoverTable out(K + 1);
  std::int64_t run = mpbkps::kNegInf;
  for (std::int64_t p = K; p >= 0; --p) {
    run = std::max(run, best_at[p]);
    out[p].leftover = run;
  }
  return out;
}

}  // namespace mpk::testing

#endif  // MPK_TESTS_FIXTURES_HPP_
