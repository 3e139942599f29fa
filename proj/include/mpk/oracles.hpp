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

#ifndef MPK_ORACLES_HPP_
#define MPK_ORACLES_HPP_

#include <cstdint>
#include <span>

#include "mpk/model.hpp"
#include "mpk/mpbkpss.hpp"
#include "mpk/rational.hpp"

// Exact reference solvers for small instances.
namespace mpk::oracle {

struct OracleResult {
  Rational value;
  Selection selected;
  std::uint64_t nodes_explored = 0;
};

inline constexpr int kBruteForceMaxItems = 22;
inline constexpr std::int64_t kMinOverflowMaxSize = 16;

// Enumerates every subset. Among optimal sets returns the lexicographically
// smallest index list.
OracleResult brute_force(const Instance& inst, Variant variant);

// Pseudo-polynomial DP over used capacity; items in deadline order with the
// used amount capped at c_t after period t. Returns an optimal set.
OracleResult dp_exact_mpbkp(const Instance& inst);

// Least possible overflow on one path by searching all ways to split each
// item over the increments at or before its deadline.
std::int64_t min_overflow_exact(std::span<const std::int64_t> cum_capacity,
                                std::span<const mpbkpss::PathItem> items);

}  // namespace mpk::oracle

#endif  // MPK_ORACLES_HPP_
