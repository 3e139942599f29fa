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

#ifndef MPK_BENCH_HPP_
#define MPK_BENCH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mpk/commands.hpp"
#include "mpk/generate.hpp"

namespace mpk::bench {

// One sweep: every combination of n, T, eps, seed and algorithm on
// generated instances of one variant.
struct Sweep {
  Variant variant = Variant::kHard;
  std::vector<cli::Algo> algos;
  std::vector<int> n;
  std::vector<int> T;
  std::vector<Rational> eps;
  std::vector<std::uint64_t> seeds;
  bool unit_size = false;
};

struct Config {
  std::vector<Sweep> sweeps;
};

// {"sweeps": [{"variant": "mpbkp", "algos": ["conv"], "n": [6], "T": [2],
//   "eps": ["1/4"], "seeds": [1, 2], "unit_size": false}]}
Config parse_config(std::string_view text);

struct BenchRow {
  std::string instance_id;
  int n = 0;
  int T = 0;
  Variant variant = Variant::kHard;
  cli::Algo algo = cli::Algo::kConv;
  Rational eps;
  Rational value;
  std::optional<Rational> opt;  // absent when the instance is too large
  int iters = 0;
  double wall_ms = 0;
  bool violates = false;  // below the guarantee of the algorithm
};

// Runs every cell. Parallelism is capped by the MPK_THREADS environment
// variable (default: hardware concurrency). Rows come back in config order.
std::vector<BenchRow> run(const Config& cfg);

// CSV with header instance_id,n,T,variant,algo,eps,value,opt,ratio,iters,
// wall_ms and, when there are rows, a final summary row whose value column
// counts guarantee violations.
std::string to_csv(const std::vector<BenchRow>& rows);

// Mean wall time per (variant, algo, n) as a small text chart.
std::string growth_plot(const std::vector<BenchRow>& rows);

std::size_t violations(const std::vector<BenchRow>& rows);

}  // namespace mpk::bench

#endif  // MPK_BENCH_HPP_
