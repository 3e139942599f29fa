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

#include "mpk/mpbkpss.hpp"

#include <algorithm>
#include <limits>

#include "mpk/errors.hpp"

namespace mpk::mpbkpss {
namespace {

void check_items(std::span<const PathItem> items, int T) {
  for (const PathItem& it : items) {
    if (it.size <= 0 || it.deadline < 1 || it.deadline > T) {
      throw ValidationError("path item needs positive size and deadline in 1..T");
    }
  }
}

std::vector<std::int64_t> loads_of(std::span<const PathItem> items, int T) {
  std::vector<std::int64_t> q(T, 0);
  for (const PathItem& it : items) q[it.deadline - 1] += it.size;
  return q;
}

Selection merged(const Selection& a, const Selection& b) {
  Selection out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Expected penalty paid by a selection, sum over paths of p(w) sum_t b_t y_t.
Rational expected_penalty(const Instance& inst, const Selection& sel,
                          const std::vector<std::int64_t>& b) {
  const auto loads = period_loads(inst, sel);
  Rational pen = 0;
  for (const Scenario& sc : inst.scenarios->paths) {
    const auto y = period_overflows(sc.cum_capacity, loads);
    std::int64_t cost = 0;
    for (int t = 0; t < inst.horizon; ++t) cost += b[t] * y[t];
    if (cost != 0) pen += sc.probability * cost;
  }
  return pen;
}

}  // namespace

std::vector<PathItem> path_items(const Instance& inst, const Selection& sel) {
  check_selection(inst, sel);
  std::vector<PathItem> out;
  for (int i : sel) out.push_back({inst.items[i].size, inst.items[i].deadline});
  return out;
}

PathResidual overflow_assignment(std::span<const std::int64_t> increments,
                                 std::span<const PathItem> items) {
  const int T = static_cast<int>(increments.size());
  check_items(items, T);
  PathResidual res;
  res.residual.assign(increments.begin(), increments.end());
  for (std::int64_t a : res.residual) {
    if (a < 0) throw ValidationError("capacity increments must be nonnegative");
  }
  for (const PathItem& it : items) {
    std::int64_t need = it.size;
    for (int t = it.deadline - 1; t >= 0 && need > 0; --t) {
      const std::int64_t take = std::min(need, res.residual[t]);
      res.residual[t] -= take;
      need -= take;
    }
    res.overflow += need;
  }
  return res;
}

std::int64_t overflow_formula(std::span<const std::int64_t> cum_capacity,
                              std::span<const PathItem> items) {
  const int T = static_cast<int>(cum_capacity.size());
  check_items(items, T);
  const auto y = period_overflows(cum_capacity, loads_of(items, T));
  std::int64_t total = 0;
  for (std::int64_t v : y) total += v;
  return total;
}

DualCertificate dual_certificate(std::span<const std::int64_t> cum_capacity,
                                 std::span<const PathItem> items, const PathResidual& residual) {
  const int T = static_cast<int>(cum_capacity.size());
  check_items(items, T);
  if (static_cast<int>(residual.residual.size()) != T) throw ValidationError("residual length mismatch");
  DualCertificate cert;
  cert.tau = T + 1;
  for (int t = 1; t <= T; ++t) {
    if (residual.residual[t - 1] > 0) {
      cert.tau = t;
      break;
    }
  }
  cert.lambda.assign(T, 0);
  cert.gamma.assign(items.size(), 0);
  const int last = cert.tau - 1;  // periods 1..last are saturated
  if (last >= 1) cert.lambda[last - 1] = 1;
  std::int64_t value = last >= 1 ? -cum_capacity[last - 1] : 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].deadline <= last) {
      cert.gamma[i] = 1;
      value += items[i].size;
    }
  }
  cert.dual_value = value;
  if (cert.dual_value != residual.overflow) {
    throw SolverError("dual certificate value " + std::to_string(cert.dual_value) +
                      " differs from overflow " + std::to_string(residual.overflow));
  }
  return cert;
}

bool dual_feasible(const DualCertificate& cert, std::span<const PathItem> items) {
  const int T = static_cast<int>(cert.lambda.size());
  std::vector<int> suffix(T + 2, 0);
  for (int t = T; t >= 1; --t) {
    if (cert.lambda[t - 1] < 0) return false;
    suffix[t] = suffix[t + 1] + cert.lambda[t - 1];
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (cert.gamma[i] > 1 || cert.gamma[i] > suffix[items[i].deadline]) return false;
  }
  return true;
}

std::vector<std::int64_t> capacity_profile(std::span<const std::int64_t> cum_capacity,
                                           std::span<const PathItem> items) {
  const int T = static_cast<int>(cum_capacity.size());
  check_items(items, T);
  const auto a = increments(cum_capacity);
  const auto q = loads_of(items, T);
  std::vector<std::int64_t> out(T, 0);
  for (int t = 0; t < T; ++t) {
    std::int64_t best = 0;
    std::int64_t run = 0;
    for (int s = t; s >= 0; --s) {
      run += a[s] - q[s];
      best = std::max(best, run);
    }
    out[t] = best;
  }
  return out;
}

Rational expected_profit(const Instance& inst, const Selection& sel, const Selection* base) {
  if (inst.variant() != Variant::kStochastic) throw VariantError("instance has no scenarios");
  const auto b = effective_penalties(inst);
  if (!base) return Rational(total_reward(inst, sel)) - expected_penalty(inst, sel, b);
  const Selection both = merged(*base, sel);
  const Rational with = Rational(total_reward(inst, both)) - expected_penalty(inst, both, b);
  const Rational without = Rational(total_reward(inst, *base)) - expected_penalty(inst, *base, b);
  return with - without;
}

GreedyResult greedy_solve(const Instance& inst) {
  require_valid(inst);
  if (inst.variant() != Variant::kStochastic) throw VariantError("greedy expects scenarios");
  const auto b = effective_penalties(inst);
  GreedyResult res;
  Selection chosen;
  std::vector<bool> in(inst.num_items(), false);
  Rational current = 0;
  while (true) {
    int best = -1;
    Rational best_gain;
    for (int i = 0; i < inst.num_items(); ++i) {
      if (in[i]) continue;
      Selection trial = chosen;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), i), i);
      const Rational gain =
          Rational(total_reward(inst, trial)) - expected_penalty(inst, trial, b) - current;
      if (best < 0 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best < 0 || best_gain < 0) break;
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best), best);
    in[best] = true;
    current += best_gain;
    ++res.rounds;
  }
  res.solution.selected = chosen;
  res.solution.objective = current;
  const auto loads = period_loads(inst, chosen);
  for (const Scenario& sc : inst.scenarios->paths) {
    res.solution.overflow_per_period.push_back(period_overflows(sc.cum_capacity, loads));
  }
  return res;
}

}  // namespace mpk::mpbkpss
