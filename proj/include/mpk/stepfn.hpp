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

#ifndef MPK_STEPFN_HPP_
#define MPK_STEPFN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpk/rational.hpp"
#include "mpk/witness.hpp"

namespace mpk {

// Breakpoint of a nondecreasing step function: value holds on
// [capacity, next capacity).
struct Step {
  std::int64_t capacity = 0;
  std::int64_t value = 0;
  Witness witness;
};

// Structural facts used by the uniform-reward convolution.
struct StructureTag {
  std::optional<std::int64_t> uniform_r;  // every value is k * r, k = 0, 1, ...
  bool pseudo_concave = false;            // breakpoint gaps nondecreasing
};

// Nondecreasing step function on the nonnegative integers with values in
// Z u {-inf}. It is -inf below the first breakpoint and, when truncated at c,
// above c. Breakpoints have strictly increasing capacity and value.
class StepFn {
 public:
  // The zero function {(0, 0)}.
  StepFn();

  static StepFn negative_infinity();

  // Builds from breakpoints that already form a strict staircase. Throws
  // ValidationError otherwise.
  static StepFn from_steps(std::vector<Step> steps,
                           std::optional<std::int64_t> trunc = std::nullopt);

  // Upper staircase of arbitrary candidate points. For equal (capacity,
  // value) the earliest candidate wins.
  static StepFn from_candidates(std::vector<Step> points,
                                std::optional<std::int64_t> trunc = std::nullopt);

  // Convenience for tests and fixtures: points without witnesses.
  static StepFn from_points(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pts);

  std::optional<std::int64_t> operator()(std::int64_t c) const;
  const Step* step_at(std::int64_t c) const;

  const std::vector<Step>& steps() const { return steps_; }
  std::optional<std::int64_t> trunc() const { return trunc_; }
  std::size_t complexity() const { return steps_.size(); }
  bool is_negative_infinity() const { return steps_.empty(); }

  const std::optional<StructureTag>& tag() const { return tag_; }
  // Attaches a tag after checking it against the breakpoints.
  StepFn& set_tag(const StructureTag& tag);

 private:
  std::vector<Step> steps_;
  std::optional<std::int64_t> trunc_;
  std::optional<StructureTag> tag_;
};

std::optional<std::int64_t> eval(const StepFn& f, std::int64_t c);

struct KnapsackItem {
  std::int64_t reward = 0;
  std::int64_t size = 0;
  int id = 0;  // reported by witnesses
};

// Exact knapsack function of a small item set, by a min-size-per-reward DP.
StepFn from_items_exact(std::span<const KnapsackItem> items);

// (f + g)(c) = max over c' of f(c') + g(c - c'), by all breakpoint pairs.
StepFn conv_naive(const StepFn& f, const StepFn& g);

StepFn truncate(const StepFn& f, std::int64_t cap);

// Integer rounding grid G_0 = ceil(r0), G_{k+1} = ceil((1 + eps) G_k).
// Rounding v >= G_0 down to the grid gives G_k <= v < (1 + eps) G_k.
class GeometricGrid {
 public:
  GeometricGrid(const Rational& r0, const Rational& eps, std::int64_t max_value);
  // Largest grid point <= v. Zero maps to zero; 0 < v < G_0 throws.
  std::int64_t round_down(std::int64_t v) const;
  const std::vector<std::int64_t>& points() const { return points_; }
  const Rational& eps() const { return eps_; }

 private:
  Rational eps_;
  std::vector<std::int64_t> points_;
};

StepFn round_geometric(const StepFn& f, const GeometricGrid& grid);
StepFn round_geometric(const StepFn& f, const Rational& r0, const Rational& eps);

// f~ with f~(c) <= f_I(c) <= (1 + eps) f~(c) at every capacity. Items are
// merged along a balanced tree and each merge is rounded. An optional cap
// drops breakpoints above it.
StepFn approx_knapsack_fn(std::span<const KnapsackItem> items, const Rational& eps,
                          std::optional<std::int64_t> cap = std::nullopt);

// Knapsack function of items sharing reward r: the k smallest sizes. Result
// is tagged uniform and pseudo-concave. Item rewards are ignored.
StepFn uniform_fn_from_equal_rewards(std::span<const KnapsackItem> items, std::int64_t r);

StructureTag classify(const StepFn& f, std::optional<std::int64_t> r = std::nullopt);

// f + g for g tagged uniform and pseudo-concave, rounded to the grid.
// eps = 0 (or no grid) returns the exact convolution.
StepFn conv_uniform_concave(const StepFn& f, const StepFn& g, const Rational& r0,
                            const Rational& eps);
StepFn conv_uniform_concave(const StepFn& f, const StepFn& g, const GeometricGrid* grid);

}  // namespace mpk

#endif  // MPK_STEPFN_HPP_
