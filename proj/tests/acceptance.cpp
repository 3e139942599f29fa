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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lemma_checks.hpp"
#include "mpk/generate.hpp"
#include "mpk/mpbkp.hpp"
#include "mpk/mpbkps.hpp"
#include "mpk/mpbkpss.hpp"
#include "mpk/oracles.hpp"

using namespace mpk;
using namespace mpk::testing;

namespace {

struct Outcome {
  int cases = 0;
  int violations = 0;
  std::string note;
};

using Clock = std::chrono::steady_clock;

int ceil_log2(int n) {
  int d = 0;
  while ((1 << d) < n) ++d;
  return d;
}

Instance hard_instance(std::uint64_t seed, int n_max, int T_max, std::int64_t cap_max) {
  Rng rng(seed * 104729 + 1);
  GenSpec gs;
  gs.variant = Variant::kHard;
  gs.seed = seed;
  gs.n = static_cast<int>(rng.uniform(1, n_max));
  gs.T = static_cast<int>(rng.uniform(1, T_max));
  gs.increment_max = cap_max / gs.T;
  return generate(gs);
}

Instance soft_instance(std::uint64_t seed, int n_max, int T_max) {
  Rng rng(seed * 65537 + 3);
  GenSpec gs;
  gs.variant = Variant::kSoft;
  gs.seed = seed;
  gs.n = static_cast<int>(rng.uniform(1, n_max));
  gs.T = static_cast<int>(rng.uniform(1, T_max));
  gs.increment_max = 15;
  return generate(gs);
}

// Criteria 1 and 2: feasibility, reward >= OPT / (1 + eps), value <= OPT <= (1 + eps) value.
Outcome hard_suite(mpbkp::ApproxResult (*solver)(const Instance&, const Rational&)) {
  Outcome o;
  const Rational eps(1, 4);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance in = hard_instance(seed, 14, 4, 40);
    const Rational opt = oracle::brute_force(in, Variant::kHard).value;
    const auto r = solver(in, eps);
    const auto feas = mpbkp_feasible(in, r.selected);
    const bool ok = feas.feasible && (1 + eps) * feas.reward >= opt && r.value <= opt &&
                    opt <= (1 + eps) * r.value;
    ++o.cases;
    if (!ok) ++o.violations;
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  const Rational eps(1, 4);
  long long points = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance in = hard_instance(seed + 5000, 10, 4, 40);
    const auto conv = mpbkp::conv_trace(in, eps);
    const auto uni = mpbkp::uniform_trace(in, eps);
    const auto exact_c = exact_chain(in, conv.kept);
    const auto exact_u = exact_chain(in, uni.kept);
    bool ok = true;
    for (int t = 1; t <= in.horizon; ++t) {
      const Rational fc = one_plus_pow(conv.eps_period, t);
      const Rational fu = (1 + uni.eps_reward) * one_plus_pow(uni.eps_period, uni.classes_bound * t);
      for (std::int64_t c = 0; c <= in.cum_capacity[t - 1]; ++c) {
        const auto a = conv.per_period[t - 1](c), f = exact_c[t - 1](c);
        const auto b = uni.per_period[t - 1](c), g = exact_u[t - 1](c);
        ++points;
        if (!a || !f || !b || !g || *a > *f || Rational(*f) > fc * *a || *b > *g || Rational(*g) > fu * *b) {
          ok = false;
        }
      }
    }
    ++o.cases;
    if (!ok) ++o.violations;
  }
  o.note = std::to_string(points) + " capacity points, both schemes";
  return o;
}

Outcome soft_suite(mpbkps::ApproxResult (*solver)(const Instance&, const Rational&)) {
  Outcome o;
  const Rational eps(1, 5);
  int worst_iters = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance in = soft_instance(seed, 12, 3);
    const Rational opt = oracle::brute_force(in, Variant::kSoft).value;
    const auto r = solver(in, eps);
    const int n = std::max(drop_unprofitable(in).instance.num_items(), 1);
    const bool ok = r.objective == profit(in, r.selected) && r.objective >= (1 - eps) * opt &&
                    r.iterations <= ceil_log2(n) + 1;
    worst_iters = std::max(worst_iters, r.iterations);
    ++o.cases;
    if (!ok) ++o.violations;
  }
  o.note = "max iterations " + std::to_string(worst_iters);
  return o;
}

Outcome ac6() {
  Outcome o;
  Rng rng(6006);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = static_cast<int>(rng.uniform(0, 8));
    std::vector<mpbkps::GridItem> items;
    std::int64_t rsum = 0;
    for (int k = 0; k < n; ++k) {
      items.push_back({k, rng.uniform(1, 40), rng.uniform(1, 10)});
      rsum += items.back().reward;
    }
    const Rational kappa(rng.uniform(1, 4), rng.uniform(1, 4));
    const std::int64_t span = 20;
    // K exceeds every reachable level, so the clamp never binds.
    const mpbkps::ProfitGrid g(kappa, span + 4 * rsum);
    mpbkps::LeftoverTable t(g.cells());
    for (std::int64_t p = 0; p <= span; ++p) {
      if (rng.uniform(0, 2) > 0) t[p].leftover = rng.uniform(-5, 20);
    }
    // Tables handed to dp_large are nonincreasing in the profit index.
    for (std::int64_t p = span; p > 0; --p) {
      if (t[p].leftover > t[p - 1].leftover) t[p - 1] = t[p];
    }
    const std::int64_t dc = rng.uniform(0, 10), B = rng.uniform(1, 12);
    const auto got = mpbkps::dp_large(t, items, dc, g, B);
    const auto want = dp_large_oracle(t, items, dc, g, B);
    bool ok = got.size() == want.size();
    for (std::size_t p = 0; ok && p < got.size(); ++p) ok = got[p].leftover == want[p].leftover;
    ++o.cases;
    if (!ok) ++o.violations;
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  Rng rng(7007);
  for (int rep = 0; rep < 200; ++rep) {
    ++o.cases;
    if (!check_single_period(rng, 12)) ++o.violations;
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  Rational worst(1);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance in = random_stochastic(seed + 8000, 10, true);
    const auto g = mpbkpss::greedy_solve(in);
    const Rational opt = oracle::brute_force(in, Variant::kStochastic).value;
    const Rational got = mpbkpss::expected_profit(in, g.solution.selected);
    if (opt > 0) worst = std::min(worst, Rational(got / opt));
    ++o.cases;
    if (got != g.solution.objective || 2 * got < opt) ++o.violations;
  }
  o.note = "worst ratio " + to_decimal(worst, 4);
  return o;
}

Outcome ac9() {
  Outcome o;
  Rng rng(9009);
  for (int rep = 0; rep < 200; ++rep) {
    const auto c = random_overflow_case(rng);
    ++o.cases;
    if (!check_overflow_case(c, rng, 10)) ++o.violations;
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  Rng rng(10010);
  int sub = 0, more = 0, exch = 0, draws = 0;
  for (std::uint64_t seed = 1; (sub < 1000 || more < 1000 || exch < 1000) && draws < 200000; ++seed) {
    const Instance general = random_stochastic(seed + 10000, 8, false);
    const Instance unit = random_stochastic(seed + 20000, 8, true);
    for (int k = 0; k < 4; ++k) {
      ++draws;
      if (sub < 1000) {
        if (auto r = check_submodular(seed % 2 ? general : unit, rng)) {
          ++sub;
          if (!*r) ++o.violations;
        }
      }
      if (more < 1000) {
        if (auto r = check_more_capacity(seed % 2 ? general : unit, rng)) {
          ++more;
          if (!*r) ++o.violations;
        }
      }
      if (exch < 1000) {
        if (auto r = check_exchange(unit, rng)) {
          ++exch;
          if (!*r) ++o.violations;
        }
      }
    }
  }
  o.cases = sub + more + exch;
  o.note = std::to_string(sub) + " submodularity, " + std::to_string(more) + " dominance, " +
           std::to_string(exch) + " exchange";
  if (sub < 1000 || more < 1000 || exch < 1000) ++o.violations;
  return o;
}

std::int64_t ceil_rational(const Rational& x) { return to_int64(ceil_div(x)); }

Outcome ac11() {
  Outcome o;
  const Rational eps_list[] = {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2, 7)};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance in = soft_instance(seed + 11000, 12, 3);
    const ReducedInstance red = drop_unprofitable(in);
    if (red.instance.num_items() == 0) continue;
    const Rational P0 = profit_bounds(red.instance).upper;
    for (const Rational& eps : eps_list) {
      const auto fm = mpbkps::solve_fixed_P0(red.instance, eps, P0);
      const auto fs = mpbkps::simple_fixed_P0(red.instance, eps, P0);
      const auto want_main = ceil_rational(16 * in.horizon / (eps * eps)) + 1;
      const auto want_simple = ceil_rational(4 * red.instance.num_items() / eps) + 1;
      ++o.cases;
      if (static_cast<std::int64_t>(fm.table.size()) != want_main ||
          static_cast<std::int64_t>(fs.table.size()) != want_simple) {
        ++o.violations;
      }
    }
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
  double limit_s;  // 0 for no time limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "hard capacities, convolution scheme within 1+eps of brute force",
       [] { return hard_suite(&mpbkp::solve_conv); }, 120},
      {"AC2", "hard capacities, uniform-reward scheme within 1+eps of brute force",
       [] { return hard_suite(&mpbkp::solve_uniform); }, 120},
      {"AC3", "per-period sandwich against the exact step functions", ac3, 0},
      {"AC4", "soft capacities, main scheme within 1-eps and doubling bound",
       [] { return soft_suite(&mpbkps::solve); }, 0},
      {"AC5", "soft capacities, per-item scheme within 1-eps and doubling bound",
       [] { return soft_suite(&mpbkps::solve_simple); }, 0},
      {"AC6", "large-item table equals subset enumeration", ac6, 0},
      {"AC7", "single-period density greedy bounds", ac7, 0},
      {"AC8", "stochastic greedy at least half of brute force on unit sizes", ac8, 120},
      {"AC9", "overflow assignment, closed form and exhaustive search agree", ac9, 0},
      {"AC10", "submodularity, dominance and exchange inequalities", ac10, 0},
      {"AC11", "profit-grid table sizes", ac11, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool slow = c.limit_s > 0 && secs > c.limit_s;
    const bool pass = error.empty() && o.violations == 0 && o.cases > 0 && !slow;
    if (!pass) ++failed;
    std::printf("[%s] %s %s: %d cases, %d violations, %.1f s%s%s%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title, o.cases, o.violations, secs, o.note.empty() ? "" : ", ", o.note.c_str(),
                error.empty() ? "" : ", error: ", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
