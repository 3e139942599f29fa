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

#include "mpk/mpbkps.hpp"

#include <algorithm>
#include <chrono>

#include "mpk/errors.hpp"

namespace mpk::mpbkps {
namespace {

__int128 floor_div128(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw SolverError("profit index overflow");
  }
  return static_cast<std::int64_t>(x);
}

void monotonize(LeftoverTable& t) {
  for (std::size_t p = t.size() - 1; p > 0; --p) {
    if (t[p].leftover > t[p - 1].leftover) t[p - 1] = t[p];
  }
}

// Leftover never carries a deficit into the next period: overflow in one
// period does not consume capacity that arrives later.
LeftoverTable clamp_deficit(const LeftoverTable& t) {
  LeftoverTable out = t;
  for (Cell& c : out) {
    if (c.finite() && c.leftover < 0) c.leftover = 0;
  }
  return out;
}

void check_soft(const Instance& inst, const Rational& eps) {
  require_valid(inst);
  if (inst.variant() != Variant::kSoft) {
    throw VariantError("this scheme solves the soft-capacity variant only");
  }
  if (eps <= 0 || eps >= 1) throw ValidationError("epsilon must lie in (0, 1)");
}

std::vector<GridItem> grid_items(const Instance& inst, const std::vector<int>& ids) {
  std::vector<GridItem> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back({i, inst.items[i].reward, inst.items[i].size});
  return out;
}

FixedResult finish_fixed(FixedResult fr) {
  fr.p_star_index = best_index(fr.table);
  if (fr.p_star_index < 0) throw SolverError("no finite cell in final table");
  fr.p_star = fr.grid.value(fr.p_star_index);
  fr.selected = decode(fr.table[fr.p_star_index].witness);
  return fr;
}

using FixedFn = FixedResult (*)(const Instance&, const Rational&, const Rational&);

ApproxResult doubling(const Instance& inst, const Rational& eps, FixedFn fixed) {
  const auto start = std::chrono::steady_clock::now();
  check_soft(inst, eps);
  ApproxResult res;
  res.eps = eps;
  const ReducedInstance red = drop_unprofitable(inst);
  const ProfitBounds pb = profit_bounds(red.instance);
  if (pb.upper > 0) {
    Rational P0 = pb.upper;
    FixedResult fr = fixed(red.instance, eps, P0);
    res.iterations = 1;
    while (fr.p_star < (1 - eps) * P0) {
      if (res.iterations >= 128) throw SolverError("doubling search did not settle");
      P0 /= 2;
      fr = fixed(red.instance, eps, P0);
      ++res.iterations;
    }
    res.value = fr.p_star;
    res.final_P0 = P0;
    res.grid_cells = fr.grid.cells();
    for (int i : fr.selected) res.selected.push_back(red.original_index[i]);
    std::sort(res.selected.begin(), res.selected.end());
  }
  res.objective = profit(inst, res.selected);
  if (res.objective < res.value) throw SolverError("selected set earns less than its rounded profit");
  res.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

ProfitGrid::ProfitGrid(const Rational& kappa, std::int64_t max_index)
    : kappa_(kappa), max_index_(max_index) {
  if (kappa <= 0) throw ValidationError("kappa must be positive");
  if (max_index < 0) throw ValidationError("grid size must be nonnegative");
  num_ = to_int64(boost::multiprecision::numerator(kappa));
  den_ = to_int64(boost::multiprecision::denominator(kappa));
}

ProfitGrid ProfitGrid::main_scheme(const Rational& eps, const Rational& P0, int T) {
  return ProfitGrid(eps * eps * P0 / (8 * T), to_int64(ceil_div(Rational(16 * T) / (eps * eps))));
}

ProfitGrid ProfitGrid::simple_scheme(const Rational& eps, const Rational& P0, int n) {
  const int nn = std::max(n, 1);
  return ProfitGrid(eps * P0 / (2 * nn), to_int64(ceil_div(Rational(4 * nn) / eps)));
}

std::int64_t ProfitGrid::floor_index(__int128 x) const {
  return narrow(floor_div128(x * den_, num_));
}

std::int64_t ProfitGrid::ceil_index(__int128 x) const {
  return narrow(-floor_div128(-x * den_, num_));
}

LeftoverTable initial_table(const ProfitGrid& grid) {
  LeftoverTable t(grid.cells());
  t[0].leftover = 0;
  return t;
}

std::int64_t best_index(const LeftoverTable& table) {
  for (std::int64_t p = static_cast<std::int64_t>(table.size()) - 1; p >= 0; --p) {
    if (table[p].finite()) return p;
  }
  return -1;
}

bool Partition::is_large(const Instance& inst, int i) const {
  const auto& v = large[inst.items[i].deadline - 1];
  return std::find(v.begin(), v.end(), i) != v.end();
}

Partition partition_items(const Instance& inst, const Rational& P0, const Rational& eps) {
  if (P0 < 0) throw ValidationError("P0 must be nonnegative");
  Partition part;
  part.large.resize(inst.horizon);
  part.small.resize(inst.horizon);
  const Rational threshold = eps * P0 / (2 * inst.horizon);
  for (int i = 0; i < inst.num_items(); ++i) {
    const std::int64_t p = item_profit(inst, i);
    if (p < 0) throw ValidationError("item " + std::to_string(i) + " has negative profit");
    const int t = inst.items[i].deadline - 1;
    (Rational(p) >= threshold ? part.large : part.small)[t].push_back(i);
  }
  for (auto& s : part.small) {
    std::stable_sort(s.begin(), s.end(), [&](int a, int b) {
      const Item& x = inst.items[a];
      const Item& y = inst.items[b];
      return static_cast<__int128>(x.reward) * y.size > static_cast<__int128>(y.reward) * x.size;
    });
  }
  return part;
}

LeftoverTable dp_large(const LeftoverTable& table, std::span<const GridItem> items,
                       std::int64_t delta_c, const ProfitGrid& grid, std::int64_t B) {
  if (table.size() != grid.cells()) throw ValidationError("table size does not match grid");
  const std::int64_t K = grid.max_index();
  LeftoverTable cur(table.size());
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (table[p].finite()) cur[p] = {table[p].leftover + delta_c, table[p].witness};
  }
  for (const GridItem& it : items) {
    LeftoverTable next = cur;
    const std::int64_t gain = grid.floor_index(it.reward);
    for (std::int64_t pb = 0; pb <= K; ++pb) {
      const Cell& src = cur[pb];
      if (!src.finite()) continue;
      const std::int64_t shortfall = std::max<std::int64_t>(0, it.size - std::max<std::int64_t>(0, src.leftover));
      const std::int64_t loss = grid.ceil_index(static_cast<__int128>(B) * shortfall);
      std::int64_t p = pb + gain - loss;
      if (p < 0) continue;
      p = std::min(p, K);
      const std::int64_t cand = src.leftover - it.size;
      if (cand > next[p].leftover) next[p] = {cand, extend(src.witness, it.id)};
    }
    monotonize(next);
    cur = std::move(next);
  }
  return cur;
}

LeftoverTable greedy_small(const LeftoverTable& table, std::span<const GridItem> small_sorted,
                           const ProfitGrid& grid) {
  if (table.size() != grid.cells()) throw ValidationError("table size does not match grid");
  for (std::size_t k = 1; k < small_sorted.size(); ++k) {
    const GridItem& a = small_sorted[k - 1];
    const GridItem& b = small_sorted[k];
    if (static_cast<__int128>(a.reward) * b.size < static_cast<__int128>(b.reward) * a.size) {
      throw ValidationError("small items must be sorted by nonincreasing density");
    }
  }
  const std::int64_t K = grid.max_index();
  LeftoverTable out = table;
  for (std::int64_t pb = 0; pb <= K; ++pb) {
    const Cell& src = table[pb];
    if (!src.finite() || src.leftover <= 0) continue;
    const std::int64_t room = src.leftover;
    std::int64_t used = 0;
    std::int64_t reward = 0;
    Witness w = src.witness;
    for (const GridItem& it : small_sorted) {
      if (it.size > room) continue;
      if (used + it.size > room) break;
      used += it.size;
      reward += it.reward;
      w = extend(w, it.id);
      const std::int64_t p = std::min(K, pb + grid.floor_index(reward));
      if (room - used > out[p].leftover) out[p] = {room - used, w};
    }
  }
  return out;
}

FixedResult solve_fixed_P0(const Instance& inst, const Rational& eps, const Rational& P0) {
  if (!inst.penalty_rates) throw VariantError("instance has no penalty rates");
  FixedResult fr{ProfitGrid::main_scheme(eps, P0, inst.horizon), partition_items(inst, P0, eps), {}, -1, 0, {}};
  const auto b = effective_penalties(inst);
  const auto a = increments(inst.cum_capacity);
  fr.table = initial_table(fr.grid);
  for (int t = 0; t < inst.horizon; ++t) {
    const auto large = grid_items(inst, fr.partition.large[t]);
    const auto small = grid_items(inst, fr.partition.small[t]);
    LeftoverTable hat = dp_large(clamp_deficit(fr.table), large, a[t], fr.grid, b[t]);
    fr.table = greedy_small(hat, small, fr.grid);
  }
  return finish_fixed(std::move(fr));
}

FixedResult simple_fixed_P0(const Instance& inst, const Rational& eps, const Rational& P0) {
  if (!inst.penalty_rates) throw VariantError("instance has no penalty rates");
  if (P0 <= 0) throw ValidationError("P0 must be positive");
  FixedResult fr{ProfitGrid::simple_scheme(eps, P0, inst.num_items()), {}, {}, -1, 0, {}};
  const auto b = effective_penalties(inst);
  const auto a = increments(inst.cum_capacity);
  std::vector<std::vector<int>> per(inst.horizon);
  for (int i = 0; i < inst.num_items(); ++i) per[inst.items[i].deadline - 1].push_back(i);
  fr.table = initial_table(fr.grid);
  // Capacity of periods without items is added at the next item.
  std::int64_t pending = 0;
  for (int t = 0; t < inst.horizon; ++t) {
    pending += a[t];
    if (per[t].empty()) continue;
    fr.table = dp_large(clamp_deficit(fr.table), grid_items(inst, per[t]), pending, fr.grid, b[t]);
    pending = 0;
  }
  return finish_fixed(std::move(fr));
}

ApproxResult solve(const Instance& inst, const Rational& eps) {
  return doubling(inst, eps, &solve_fixed_P0);
}

ApproxResult solve_simple(const Instance& inst, const Rational& eps) {
  return doubling(inst, eps, &simple_fixed_P0);
}

Rational rounded_profit(const Instance& inst, const Selection& sel, RoundingMode mode,
                        const ProfitGrid& grid, const Partition* partition) {
  check_selection(inst, sel);
  if (mode == RoundingMode::kTilde && !partition) {
    throw ValidationError("tilde rounding needs the item partition");
  }
  const auto b = effective_penalties(inst);
  const auto a = increments(inst.cum_capacity);
  std::vector<std::vector<int>> per(inst.horizon);
  for (int i : sel) per[inst.items[i].deadline - 1].push_back(i);
  std::int64_t total = 0;
  std::int64_t left = 0;
  for (int t = 0; t < inst.horizon; ++t) {
    left = std::max<std::int64_t>(0, left) + a[t];
    std::int64_t small_r = 0, small_q = 0;
    for (int i : per[t]) {
      const Item& it = inst.items[i];
      if (mode == RoundingMode::kTilde && !partition->is_large(inst, i)) {
        small_r += it.reward;
        small_q += it.size;
        continue;
      }
      const std::int64_t shortfall = std::max<std::int64_t>(0, it.size - std::max<std::int64_t>(0, left));
      total += grid.floor_index(it.reward) - grid.ceil_index(static_cast<__int128>(b[t]) * shortfall);
      left -= it.size;
    }
    if (small_q > 0) {
      const std::int64_t over = std::max<std::int64_t>(0, small_q - std::max<std::int64_t>(0, left));
      total += grid.floor_index(static_cast<__int128>(small_r) - static_cast<__int128>(b[t]) * over);
      left -= small_q;
    }
  }
  return grid.value(total);
}

}  // namespace mpk::mpbkps
