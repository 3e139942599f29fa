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

#ifndef MPK_MPBKPS_HPP_
#define MPK_MPBKPS_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mpk/model.hpp"
#include "mpk/rational.hpp"
#include "mpk/witness.hpp"

// Profit-indexed dynamic programs for the soft-capacity problem. A table maps
// each rounded profit level p * kappa to the largest leftover capacity that
// some partial solution reaches with rounded profit at least that level.
namespace mpk::mpbkps {

// Uniform profit grid {0, kappa, ..., K kappa}.
class ProfitGrid {
 public:
  ProfitGrid(const Rational& kappa, std::int64_t max_index);

  // kappa = eps^2 P0 / (8T), K = ceil(16T / eps^2).
  static ProfitGrid main_scheme(const Rational& eps, const Rational& P0, int T);
  // kappa = eps P0 / (2n), K = ceil(4n / eps).
  static ProfitGrid simple_scheme(const Rational& eps, const Rational& P0, int n);

  const Rational& kappa() const { return kappa_; }
  std::int64_t max_index() const { return max_index_; }
  std::size_t cells() const { return static_cast<std::size_t>(max_index_) + 1; }

  // floor(x / kappa) and ceil(x / kappa).
  std::int64_t floor_index(__int128 x) const;
  std::int64_t ceil_index(__int128 x) const;
  Rational value(std::int64_t index) const { return kappa_ * index; }

 private:
  Rational kappa_;
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
  std::int64_t max_index_ = 0;
};

inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

struct Cell {
  std::int64_t leftover = kNegInf;  // may be negative inside a period
  Witness witness;
  bool finite() const { return leftover != kNegInf; }
};

using LeftoverTable = std::vector<Cell>;

// Table with only cell 0 finite, holding leftover 0.
LeftoverTable initial_table(const ProfitGrid& grid);

// Index of the largest finite cell, or -1.
std::int64_t best_index(const LeftoverTable& table);

struct GridItem {
  int id = 0;
  std::int64_t reward = 0;
  std::int64_t size = 0;
};

// Items with p_i >= eps P0 / (2T) are large. Lists are per period (index
// t - 1): large ones in input order, small ones by nonincreasing density.
struct Partition {
  std::vector<std::vector<int>> large;
  std::vector<std::vector<int>> small;
  bool is_large(const Instance& inst, int i) const;
};

Partition partition_items(const Instance& inst, const Rational& P0, const Rational& eps);

// One period over large items: start from table + delta_c, then each item is
// rejected or accepted at rounded reward floor(r) minus rounded penalty
// ceil(B (q - max(0, leftover))^+). Levels above K are clamped to K, levels
// below 0 dropped; the table is made monotone after each item.
LeftoverTable dp_large(const LeftoverTable& table, std::span<const GridItem> items,
                       std::int64_t delta_c, const ProfitGrid& grid, std::int64_t B);

// One period over small items sorted by nonincreasing density: from each
// source cell, add the fitting items greedily and record every prefix.
LeftoverTable greedy_small(const LeftoverTable& table, std::span<const GridItem> small_sorted,
                           const ProfitGrid& grid);

struct FixedResult {
  ProfitGrid grid;
  Partition partition;
  LeftoverTable table;
  std::int64_t p_star_index = -1;
  Rational p_star;
  Selection selected;  // indices into the instance passed in
};

// Guess-P0 stage of the main scheme. All items need p_i >= 0.
FixedResult solve_fixed_P0(const Instance& inst, const Rational& eps, const Rational& P0);
// Guess-P0 stage of the simpler per-item scheme.
FixedResult simple_fixed_P0(const Instance& inst, const Rational& eps, const Rational& P0);

struct ApproxResult {
  Rational value;      // p*, a lower bound on the profit of `selected`
  Rational objective;  // exact profit of `selected`
  Selection selected;
  Rational eps;
  Rational final_P0;
  int iterations = 0;
  std::size_t grid_cells = 0;
  double wall_ms = 0;
};

// Doubling search over P0 from the upper bound sum_i p_i downward.
ApproxResult solve(const Instance& inst, const Rational& eps);
ApproxResult solve_simple(const Instance& inst, const Rational& eps);

enum class RoundingMode {
  kTilde,  // main scheme: large items one by one, small items per period
  kHat,    // simple scheme: every item one by one
};

// Rounded profit of a selection as the DPs account it. Items are taken in
// index order within a period. kTilde needs the partition.
Rational rounded_profit(const Instance& inst, const Selection& sel, RoundingMode mode,
                        const ProfitGrid& grid, const Partition* partition = nullptr);

}  // namespace mpk::mpbkps

#endif  // MPK_MPBKPS_HPP_
