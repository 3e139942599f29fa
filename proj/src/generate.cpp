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

#include "mpk/generate.hpp"

#include <algorithm>

#include "mpk/errors.hpp"

namespace mpk {
namespace {

std::vector<std::int64_t> random_path(Rng& rng, const GenSpec& s) {
  std::vector<std::int64_t> cum;
  std::int64_t c = 0;
  for (int t = 0; t < s.T; ++t) {
    c += rng.uniform(s.increment_min, s.increment_max);
    cum.push_back(c);
  }
  return cum;
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ValidationError("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Instance generate(const GenSpec& s) {
  if (s.n < 0 || s.T < 1) throw ValidationError("generator needs n >= 0 and T >= 1");
  if (s.reward_min < 1 || s.size_min < 1 || s.increment_min < 0) {
    throw ValidationError("generator ranges must be positive");
  }
  Rng rng(s.seed);
  Instance inst;
  inst.horizon = s.T;
  inst.cum_capacity = random_path(rng, s);
  std::int64_t top_density = 0;  // ceil(max r/q)
  for (int i = 0; i < s.n; ++i) {
    Item it;
    it.reward = rng.uniform(s.reward_min, s.reward_max);
    it.size = s.unit_size ? 1 : rng.uniform(s.size_min, s.size_max);
    it.deadline = static_cast<int>(rng.uniform(1, s.T));
    top_density = std::max(top_density, (it.reward + it.size - 1) / it.size);
    inst.items.push_back(it);
  }
  if (s.variant != Variant::kHard) {
    const std::int64_t b = top_density + rng.uniform(1, 10);
    inst.penalty_rates = std::vector<std::int64_t>(s.T, b);
  }
  if (s.variant == Variant::kStochastic) {
    const int k = static_cast<int>(rng.uniform(s.scenarios_min, s.scenarios_max));
    const int den = std::max(s.probability_denominator, k);
    // Split den into k positive parts.
    std::vector<std::int64_t> cuts;
    while (static_cast<int>(cuts.size()) < k - 1) {
      const std::int64_t c = rng.uniform(1, den - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(den);
    ScenarioSet set;
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
      set.paths.push_back({Rational(c - prev, den), random_path(rng, s)});
      prev = c;
    }
    inst.cum_capacity = set.paths.front().cum_capacity;
    inst.scenarios = std::move(set);
  }
  return inst;
}

}  // namespace mpk
