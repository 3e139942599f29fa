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

#ifndef MPK_GENERATE_HPP_
#define MPK_GENERATE_HPP_

#include <cstdint>
#include <random>

#include "mpk/model.hpp"

namespace mpk {

struct GenSpec {
  Variant variant = Variant::kHard;
  int n = 8;
  int T = 2;
  std::uint64_t seed = 1;
  std::int64_t reward_min = 1, reward_max = 100;
  std::int64_t size_min = 1, size_max = 10;
  std::int64_t increment_min = 0, increment_max = 20;
  bool unit_size = false;
  int scenarios_min = 2, scenarios_max = 5;
  int probability_denominator = 12;
};

// Deterministic for a given spec on every platform. Soft and stochastic
// instances get a uniform penalty rate above every reward density.
Instance generate(const GenSpec& spec);

// std::mt19937_64 with an explicit range mapping. The distribution classes of
// the standard library are implementation-defined, this mapping is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpk

#endif  // MPK_GENERATE_HPP_
