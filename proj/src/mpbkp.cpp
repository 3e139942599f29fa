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

#include "mpk/mpbkp.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "mpk/errors.hpp"

namespace mpk::mpbkp {
namespace {

void check_input(const Instance& inst, const Rational& eps) {
  require_valid(inst);
  if (inst.variant() != Variant::kHard) {
    throw VariantError("this scheme solves the hard-capacity variant only");
  }
  if (eps <= 0 || eps >= 1) throw ValidationError("epsilon must lie in (0, 1)");
}

// Items that fit alone, minus those too cheap to matter. Since every kept
// item fits alone, max reward <= OPT and the discarded items lose at most
// eps_discard * OPT.
Trace preprocess(const Instance& inst, const Rational& eps_discard) {
  Trace tr;
  tr.eps_discard = eps_discard;
  std::vector<int> fits;
  std::int64_t rmax = 0;
  for (int i = 0; i < inst.num_items(); ++i) {
    const Item& it = inst.items[i];
    if (it.size <= inst.cum_capacity[it.deadline - 1]) {
      fits.push_back(i);
      rmax = std::max(rmax, it.reward);
    }
  }
  const Rational cut = eps_discard * rmax / static_cast<std::int64_t>(std::max<std::size_t>(1, fits.size()));
  for (int i : fits) {
    if (Rational(inst.items[i].reward) > cut) tr.kept.push_back(i);
  }
  tr.r0 = 0;
  for (int i : tr.kept) {
    tr.r0 = tr.r0 == 0 ? inst.items[i].reward : std::min(tr.r0, inst.items[i].reward);
  }
  return tr;
}

std::vector<std::vector<KnapsackItem>> by_period(const Instance& inst, const std::vector<int>& kept) {
  std::vector<std::vector<KnapsackItem>> out(inst.horizon);
  for (int i : kept) {
    const Item& it = inst.items[i];
    out[it.deadline - 1].push_back({it.reward, it.size, i});
  }
  return out;
}

// f (+) 0: lifts the previous truncation so capacity arriving this period is
// usable even when no item is due.
StepFn carry(const StepFn& f) { return conv_naive(f, StepFn()); }

ApproxResult finish(const Instance& inst, const Trace& tr, const Rational& eps,
                    std::chrono::steady_clock::time_point start) {
  ApproxResult res;
  res.eps = eps;
  res.eps_internal = tr.eps_period;
  res.stats.periods = inst.horizon;
  for (const StepFn& f : tr.per_period) {
    res.stats.max_complexity = std::max(res.stats.max_complexity, f.complexity());
  }
  const StepFn& last = tr.per_period.back();
  const Step* s = last.step_at(inst.cum_capacity.back());
  if (!s) throw SolverError("final function undefined at c_T");
  res.value = s->value;
  res.selected = decode(s->witness);
  const Feasibility f = mpbkp_feasible(inst, res.selected);
  if (!f.feasible || Rational(f.reward) < res.value) {
    throw SolverError("reconstructed set violates its certificate");
  }
  res.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

Trace conv_trace(const Instance& inst, const Rational& eps) {
  check_input(inst, eps);
  // Discarding loses a factor (1 - eps/4), the chain at most (1 + eps/2);
  // together they stay within 1 + eps for eps <= 1.
  Trace tr = preprocess(inst, eps / 4);
  tr.eps_period = root_budget(1 + eps / 2, 2 * inst.horizon);
  const auto groups = by_period(inst, tr.kept);
  std::int64_t total = 0;
  for (int i : tr.kept) total += inst.items[i].reward;
  std::optional<GeometricGrid> grid;
  if (tr.r0 > 0) grid.emplace(tr.r0, tr.eps_period, total);

  StepFn acc;
  for (int t = 0; t < inst.horizon; ++t) {
    const std::int64_t cap = inst.cum_capacity[t];
    if (groups[t].empty()) {
      acc = truncate(carry(acc), cap);
    } else {
      const StepFn ft = approx_knapsack_fn(groups[t], tr.eps_period, cap);
      acc = truncate(conv_naive(acc, ft), cap);
      if (t > 0) acc = round_geometric(acc, *grid);
    }
    tr.per_period.push_back(acc);
  }
  return tr;
}

ApproxResult solve_conv(const Instance& inst, const Rational& eps) {
  const auto start = std::chrono::steady_clock::now();
  const Trace tr = conv_trace(inst, eps);
  return finish(inst, tr, eps, start);
}

Trace uniform_trace(const Instance& inst, const Rational& eps) {
  check_input(inst, eps);
  Trace tr = preprocess(inst, eps / 4);
  tr.eps_reward = eps / 8;
  const int n = static_cast<int>(tr.kept.size());

  // m = ceil(log_{1+eps_r}(n^2 / eps_r)) bounds the number of reward classes.
  int m = 0;
  if (n > 0) {
    const Rational target = Rational(static_cast<std::int64_t>(n) * n) / tr.eps_reward;
    Rational pw = 1;
    const Rational base = 1 + tr.eps_reward;
    while (pw < target) {
      pw *= base;
      ++m;
    }
  }
  tr.classes_bound = m + 1;
  // (1 + eps_r)(1 + eps'')^{(m+1)T} <= 1 + eps/2.
  const Rational factor = (1 + eps / 2) / (1 + tr.eps_reward);
  tr.eps_period = root_budget(factor, (m + 1) * inst.horizon);
  if ((1 + tr.eps_reward) * one_plus_pow(tr.eps_period, (m + 1) * inst.horizon) > 1 + eps / 2) {
    throw SolverError("compound rounding factor exceeds its budget");
  }

  if (n == 0) {
    StepFn acc;
    for (int t = 0; t < inst.horizon; ++t) {
      acc = truncate(carry(acc), inst.cum_capacity[t]);
      tr.per_period.push_back(acc);
    }
    return tr;
  }
  std::int64_t rmax = 0, total = 0;
  for (int i : tr.kept) {
    rmax = std::max(rmax, inst.items[i].reward);
    total += inst.items[i].reward;
  }
  const GeometricGrid reward_grid(tr.r0, tr.eps_reward, rmax);
  const GeometricGrid value_grid(tr.r0, tr.eps_period, total);

  StepFn acc;
  for (int t = 0; t < inst.horizon; ++t) {
    const std::int64_t cap = inst.cum_capacity[t];
    std::map<std::int64_t, std::vector<KnapsackItem>> classes;
    for (int i : tr.kept) {
      const Item& it = inst.items[i];
      if (it.deadline != t + 1) continue;
      const std::int64_t rr = reward_grid.round_down(it.reward);
      classes[rr].push_back({rr, it.size, i});
    }
    if (classes.empty()) acc = carry(acc);
    for (const auto& [rr, members] : classes) {
      const StepFn g = uniform_fn_from_equal_rewards(members, rr);
      acc = truncate(conv_uniform_concave(acc, g, &value_grid), cap);
    }
    acc = truncate(acc, cap);
    tr.per_period.push_back(acc);
  }
  return tr;
}

ApproxResult solve_uniform(const Instance& inst, const Rational& eps) {
  const auto start = std::chrono::steady_clock::now();
  const Trace tr = uniform_trace(inst, eps);
  ApproxResult res = finish(inst, tr, eps, start);
  std::size_t classes = 0;
  {
    std::int64_t rmax = 0;
    for (int i : tr.kept) rmax = std::max(rmax, inst.items[i].reward);
    if (!tr.kept.empty()) classes = GeometricGrid(tr.r0, tr.eps_reward, rmax).points().size();
  }
  res.stats.reward_classes = classes;
  return res;
}

}  // namespace mpk::mpbkp
