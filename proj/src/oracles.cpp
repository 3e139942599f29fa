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

#include "mpk/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mpk/errors.hpp"

namespace mpk::oracle {
namespace {

constexpr std::int64_t kMaxDpCells = 50'000'000;

}  // namespace

OracleResult brute_force(const Instance& inst, Variant variant) {
  require_valid(inst);
  if (inst.variant() != variant) {
    throw VariantError("instance is " + std::string(variant_name(inst.variant())) + ", asked for " +
                       std::string(variant_name(variant)));
  }
  const int n = inst.num_items();
  if (n > kBruteForceMaxItems) {
    throw GuardError("brute_force: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(kBruteForceMaxItems));
  }
  OracleResult best;
  bool have = false;
  Selection sel;
  sel.reserve(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    sel.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sel.push_back(i);
    }
    Rational v;
    if (variant == Variant::kHard) {
      const Feasibility f = mpbkp_feasible(inst, sel);
      if (!f.feasible) continue;
      v = f.reward;
    } else if (variant == Variant::kSoft) {
      v = profit(inst, sel);
    } else {
      v = mpbkpss::expected_profit(inst, sel);
    }
    ++best.nodes_explored;
    if (!have || v > best.value ||
        (v == best.value && std::lexicographical_compare(sel.begin(), sel.end(),
                                                         best.selected.begin(), best.selected.end()))) {
      have = true;
      best.value = v;
      best.selected = sel;
    }
  }
  return best;
}

OracleResult dp_exact_mpbkp(const Instance& inst) {
  require_valid(inst);
  if (inst.variant() != Variant::kHard) throw VariantError("dp_exact_mpbkp expects a hard instance");
  const int n = inst.num_items();
  const std::int64_t cap = inst.cum_capacity.back();
  if ((cap + 1) * std::max(1, n) > kMaxDpCells) throw GuardError("dp_exact_mpbkp: table too large");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.items[a].deadline < inst.items[b].deadline; });
  constexpr std::int64_t kNone = -1;
  // best[u]: max reward using exactly u units.
  std::vector<std::int64_t> best(cap + 1, kNone);
  best[0] = 0;
  std::vector<std::vector<bool>> took(n, std::vector<bool>(cap + 1, false));
  OracleResult res;
  std::size_t k = 0;
  for (int t = 1; t <= inst.horizon; ++t) {
    for (; k < order.size() && inst.items[order[k]].deadline == t; ++k) {
      const Item& it = inst.items[order[k]];
      for (std::int64_t u = cap; u >= it.size; --u) {
        const std::int64_t src = best[u - it.size];
        ++res.nodes_explored;
        if (src != kNone && src + it.reward > best[u]) {
          best[u] = src + it.reward;
          took[k][u] = true;
        }
      }
    }
    for (std::int64_t u = inst.cum_capacity[t - 1] + 1; u <= cap; ++u) best[u] = kNone;
  }
  std::int64_t u = 0;
  for (std::int64_t v = 0; v <= cap; ++v) {
    if (best[v] > best[u]) u = v;
  }
  res.value = best[u];
  for (std::size_t j = order.size(); j-- > 0;) {
    if (took[j][u]) {
      res.selected.push_back(order[j]);
      u -= inst.items[order[j]].size;
    }
  }
  std::sort(res.selected.begin(), res.selected.end());
  return res;
}

std::int64_t min_overflow_exact(std::span<const std::int64_t> cum_capacity,
                                std::span<const mpbkpss::PathItem> items) {
  const int T = static_cast<int>(cum_capacity.size());
  std::int64_t total = 0;
  for (const auto& it : items) {
    if (it.size <= 0 || it.deadline < 1 || it.deadline > T) throw ValidationError("bad path item");
    total += it.size;
  }
  if (total > kMinOverflowMaxSize) throw GuardError("min_overflow_exact: total size too large");
  const auto a = increments(cum_capacity);
  // Each unit of demand picks one increment at or before its deadline, or
  // overflows. Search unit by unit with memo on the remaining increments.
  std::vector<int> unit_deadline;
  for (const auto& it : items) {
    for (std::int64_t u = 0; u < it.size; ++u) unit_deadline.push_back(it.deadline);
  }
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, std::vector<std::int64_t>&)> go =
      [&](std::size_t k, std::vector<std::int64_t>& rest) -> std::int64_t {
    if (k == unit_deadline.size()) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t best = 1 + go(k + 1, rest);
    for (int t = 0; t < unit_deadline[k]; ++t) {
      if (rest[t] == 0) continue;
      --rest[t];
      best = std::min(best, go(k + 1, rest));
      ++rest[t];
    }
    memo.emplace(std::move(key), best);
    return best;
  };
  std::vector<std::int64_t> rest(a.begin(), a.end());
  for (auto& r : rest) r = std::min<std::int64_t>(r, total);
  return go(0, rest);
}

}  // namespace mpk::oracle
