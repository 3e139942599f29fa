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

#ifndef MPK_TESTS_LEMMA_CHECKS_HPP_
#define MPK_TESTS_LEMMA_CHECKS_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "mpk/generate.hpp"
#include "mpk/model.hpp"
#include "mpk/mpbkps.hpp"
#include "mpk/mpbkpss.hpp"
#include "mpk/oracles.hpp"

// Randomized checks shared by the unit tests and the acceptance binary. Each
// returns nullopt when the drawn configuration does not meet the check's
// preconditions, otherwise whether the inequality held.
namespace mpk::testing {

inline Instance random_stochastic(std::uint64_t seed, int n_max, bool unit_size) {
  Rng rng(seed * 7919 + 13);
  GenSpec gs;
  gs.variant = Variant::kStochastic;
  gs.seed = seed;
  gs.n = static_cast<int>(rng.uniform(1, n_max));
  gs.T = static_cast<int>(rng.uniform(1, 4));
  gs.unit_size = unit_size;
  gs.increment_max = unit_size ? 3 : 8;
  return generate(gs);
}

// Random split of the items: each lands in one of `parts` buckets or none.
inline std::vector<Selection> random_split(Rng& rng, int n, int parts) {
  std::vector<Selection> out(parts);
  for (int i = 0; i < n; ++i) {
    const auto b = rng.uniform(0, parts);
    if (b < parts) out[b].push_back(i);
  }
  return out;
}

inline Selection unite(Selection a, const Selection& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// S1 subset of S2, S3 disjoint: dP(S1, S3) >= dP(S2, S3).
inline std::optional<bool> check_submodular(const Instance& inst, Rng& rng) {
  const auto parts = random_split(rng, inst.num_items(), 3);
  const Selection s1 = parts[0];
  const Selection s2 = unite(parts[0], parts[1]);
  const Selection& s3 = parts[2];
  return mpbkpss::expected_profit(inst, s3, &s1) >= mpbkpss::expected_profit(inst, s3, &s2);
}

// Leftover profile of S1 dominating that of S2 on every path, S disjoint from
// both: dP(S1, S) >= dP(S2, S).
inline std::optional<bool> check_more_capacity(const Instance& inst, Rng& rng) {
  // Buckets: only S1, only S2, both, S.
  const auto parts = random_split(rng, inst.num_items(), 4);
  const Selection s1 = unite(parts[0], parts[2]);
  const Selection s2 = unite(parts[1], parts[2]);
  const Selection& s = parts[3];
  for (const Scenario& path : inst.scenarios->paths) {
    const auto a = mpbkpss::capacity_profile(path.cum_capacity, mpbkpss::path_items(inst, s1));
    const auto b = mpbkpss::capacity_profile(path.cum_capacity, mpbkpss::path_items(inst, s2));
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] < b[t]) return std::nullopt;
    }
  }
  return mpbkpss::expected_profit(inst, s, &s1) >= mpbkpss::expected_profit(inst, s, &s2);
}

// Unit sizes; items j, i, k with d_j <= d_i <= d_k, S2- due no later than j,
// S2+ due no earlier than k: dP(S1 + {j, k}, S2) <= dP(S1 + {i}, S2).
inline std::optional<bool> check_exchange(const Instance& inst, Rng& rng) {
  const int n = inst.num_items();
  if (n < 3) return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(rng.uniform(0, 1 << 30)));
  int i = perm[0], j = perm[1], k = perm[2];
  std::vector<int> ijk{i, j, k};
  std::sort(ijk.begin(), ijk.end(), [&](int a, int b) {
    return inst.items[a].deadline < inst.items[b].deadline;
  });
  j = ijk[0];
  i = ijk[1];
  k = ijk[2];
  Selection s1, s2;
  for (int p = 3; p < n; ++p) {
    const int m = perm[p];
    const int d = inst.items[m].deadline;
    const auto roll = rng.uniform(0, 2);
    if (roll == 0) {
      s1.push_back(m);
    } else if (roll == 1 && (d <= inst.items[j].deadline || d >= inst.items[k].deadline)) {
      s2.push_back(m);
    }
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  const Selection with_jk = unite(s1, {j, k});
  const Selection with_i = unite(s1, {i});
  return mpbkpss::expected_profit(inst, s2, &with_jk) <= mpbkpss::expected_profit(inst, s2, &with_i);
}

struct OverflowCase {
  std::vector<std::int64_t> cum;
  std::vector<mpbkpss::PathItem> items;
};

inline OverflowCase random_overflow_case(Rng& rng) {
  OverflowCase c;
  const int T = static_cast<int>(rng.uniform(1, 5));
  std::int64_t acc = 0;
  for (int t = 0; t < T; ++t) {
    acc += rng.uniform(0, 4);
    c.cum.push_back(acc);
  }
  std::int64_t budget = rng.uniform(0, 12);
  while (budget > 0) {
    const std::int64_t q = rng.uniform(1, std::min<std::int64_t>(budget, 4));
    c.items.push_back({q, static_cast<int>(rng.uniform(1, T))});
    budget -= q;
  }
  return c;
}

// Assignment, closed form and exhaustive search agree, the assignment is
// order-invariant, and the dual certificate is feasible and tight.
inline bool check_overflow_case(const OverflowCase& c, Rng& rng, int permutations) {
  const auto inc = increments(c.cum);
  const auto res = mpbkpss::overflow_assignment(inc, c.items);
  if (res.overflow != mpbkpss::overflow_formula(c.cum, c.items)) return false;
  if (res.overflow != oracle::min_overflow_exact(c.cum, c.items)) return false;
  auto items = c.items;
  std::mt19937_64 shuffle_rng(rng.uniform(0, 1 << 30));
  for (int p = 0; p < permutations; ++p) {
    std::shuffle(items.begin(), items.end(), shuffle_rng);
    const auto r = mpbkpss::overflow_assignment(inc, items);
    if (r.overflow != res.overflow) return false;
    const auto cert = mpbkpss::dual_certificate(c.cum, items, r);
    if (!mpbkpss::dual_feasible(cert, items) || cert.dual_value != r.overflow) return false;
  }
  const auto cert = mpbkpss::dual_certificate(c.cum, c.items, res);
  return mpbkpss::dual_feasible(cert, c.items) && cert.dual_value == res.overflow;
}

// Single period, capacity c, rate B above every density. The density greedy
// over items that fit alone packs no more than an optimum and loses at most
// the largest single-item profit.
inline bool check_single_period(Rng& rng, int n_max) {
  const int n = static_cast<int>(rng.uniform(1, n_max));
  Instance inst;
  inst.horizon = 1;
  inst.cum_capacity = {rng.uniform(0, 30)};
  std::int64_t max_density_ceil = 1;
  for (int k = 0; k < n; ++k) {
    const std::int64_t q = rng.uniform(1, 10);
    const std::int64_t r = rng.uniform(1, 60);
    inst.items.push_back({r, q, 1});
    max_density_ceil = std::max(max_density_ceil, (r + q - 1) / q);
  }
  inst.penalty_rates = std::vector<std::int64_t>{max_density_ceil + rng.uniform(1, 5)};
  const std::int64_t c = inst.cum_capacity[0];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.items[a].reward * inst.items[b].size > inst.items[b].reward * inst.items[a].size;
  });
  Selection greedy;
  std::int64_t used = 0;
  for (int i : order) {
    const std::int64_t q = inst.items[i].size;
    if (q > c) continue;
    if (used + q > c) break;
    greedy.push_back(i);
    used += q;
  }
  std::sort(greedy.begin(), greedy.end());

  const auto opt = oracle::brute_force(inst, Variant::kSoft);
  std::int64_t max_p = 0;
  for (int i = 0; i < n; ++i) max_p = std::max(max_p, item_profit(inst, i));
  const std::int64_t q_greedy = period_loads(inst, greedy)[0];
  const std::int64_t q_opt = period_loads(inst, opt.selected)[0];
  return q_greedy <= q_opt && Rational(profit(inst, greedy)) >= opt.value - max_p;
}

}  // namespace mpk::testing

#endif  // MPK_TESTS_LEMMA_CHECKS_HPP_
