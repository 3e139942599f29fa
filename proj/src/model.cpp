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

#include "mpk/model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mpk/errors.hpp"

namespace mpk {
namespace {

void check_path(const std::vector<std::int64_t>& cum, int horizon, const std::string& what,
                std::vector<std::string>& errors) {
  if (static_cast<int>(cum.size()) != horizon) {
    errors.push_back(what + ": expected " + std::to_string(horizon) + " entries, got " +
                     std::to_string(cum.size()));
    return;
  }
  std::int64_t prev = 0;
  for (int t = 0; t < horizon; ++t) {
    if (cum[t] < prev) {
      errors.push_back(what + ": capacity not nondecreasing at t = " + std::to_string(t + 1) +
                       " (" + std::to_string(cum[t]) + " after " + std::to_string(prev) + ")");
    }
    prev = std::max(prev, cum[t]);
  }
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kHard:
      return "mpbkp";
    case Variant::kSoft:
      return "mpbkps";
    case Variant::kStochastic:
      return "mpbkpss";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "mpbkp") return Variant::kHard;
  if (name == "mpbkps") return Variant::kSoft;
  if (name == "mpbkpss") return Variant::kStochastic;
  return std::nullopt;
}

Variant Instance::variant() const {
  if (scenarios.has_value()) return Variant::kStochastic;
  if (penalty_rates.has_value()) return Variant::kSoft;
  return Variant::kHard;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto& err = rep.errors;
  if (inst.horizon < 1) {
    err.push_back("T must be at least 1");
    return rep;
  }
  check_path(inst.cum_capacity, inst.horizon, "cumulative_capacity", err);
  for (int i = 0; i < inst.num_items(); ++i) {
    const Item& it = inst.items[i];
    const std::string tag = "items[" + std::to_string(i) + "]";
    if (it.reward <= 0) err.push_back(tag + ": reward must be positive");
    if (it.size <= 0) err.push_back(tag + ": size must be positive");
    if (it.deadline < 1 || it.deadline > inst.horizon) {
      err.push_back(tag + ": deadline " + std::to_string(it.deadline) + " outside 1.." +
                    std::to_string(inst.horizon));
    }
  }
  if (inst.penalty_rates) {
    const auto& b = *inst.penalty_rates;
    if (static_cast<int>(b.size()) != inst.horizon) {
      err.push_back("penalty_rates: expected " + std::to_string(inst.horizon) + " entries");
    } else {
      for (int t = 0; t < inst.horizon; ++t) {
        if (b[t] <= 0) err.push_back("penalty_rates[" + std::to_string(t + 1) + "] must be positive");
      }
    }
  }
  if (inst.scenarios) {
    if (!inst.penalty_rates) err.push_back("scenarios require penalty_rates");
    const auto& paths = inst.scenarios->paths;
    if (paths.empty()) err.push_back("scenarios: at least one path required");
    Rational total = 0;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const std::string tag = "scenarios[" + std::to_string(k) + "]";
      if (paths[k].probability <= 0) err.push_back(tag + ": probability must be positive");
      total += paths[k].probability;
      check_path(paths[k].cum_capacity, inst.horizon, tag + ".cumulative_capacity", err);
    }
    if (!paths.empty() && total != 1) {
      err.push_back("probabilities must sum to 1 (got " + to_string(total) + ")");
    }
  }
  if (!rep.ok()) return rep;

  // Soft assumptions: they do not break the algorithms but are worth noting.
  std::vector<int> per_period(inst.horizon, 0);
  for (const Item& it : inst.items) ++per_period[it.deadline - 1];
  for (int t = 0; t < inst.horizon; ++t) {
    if (per_period[t] == 0) {
      rep.warnings.push_back("period " + std::to_string(t + 1) + " has no items");
    }
    if (inst.variant() != Variant::kStochastic && inst.cum_capacity[t] == 0) {
      rep.warnings.push_back("c_" + std::to_string(t + 1) + " is zero");
    }
  }
  if (inst.penalty_rates) {
    // Rate at or below some reward density: overflowing may pay off.
    const auto& b = *inst.penalty_rates;
    for (int t = 0; t < inst.horizon; ++t) {
      for (int i = 0; i < inst.num_items(); ++i) {
        const Item& it = inst.items[i];
        if (it.deadline <= t + 1 &&
            static_cast<__int128>(b[t]) * it.size <= static_cast<__int128>(it.reward)) {
          rep.warnings.push_back("penalty rate below max reward density: B_" +
                                 std::to_string(t + 1) + " <= r/q of item " + std::to_string(i));
          break;
        }
      }
    }
  }
  return rep;
}

void require_valid(const Instance& inst) {
  const ValidationReport rep = validate_instance(inst);
  if (rep.ok()) return;
  std::ostringstream os;
  os << "invalid instance:";
  for (const auto& e : rep.errors) os << "\n  " << e;
  throw ValidationError(os.str());
}

void check_selection(const Instance& inst, const Selection& sel) {
  for (std::size_t k = 0; k < sel.size(); ++k) {
    if (sel[k] < 0 || sel[k] >= inst.num_items()) {
      throw ValidationError("selected index " + std::to_string(sel[k]) + " out of range");
    }
    if (k > 0 && sel[k] <= sel[k - 1]) {
      throw ValidationError("selection must be strictly ascending");
    }
  }
}

std::vector<std::int64_t> increments(std::span<const std::int64_t> cum) {
  std::vector<std::int64_t> a(cum.size());
  std::int64_t prev = 0;
  for (std::size_t t = 0; t < cum.size(); ++t) {
    a[t] = cum[t] - prev;
    prev = cum[t];
  }
  return a;
}

std::vector<std::int64_t> effective_penalties(const Instance& inst) {
  if (!inst.penalty_rates) throw VariantError("instance has no penalty rates");
  std::vector<std::int64_t> b = *inst.penalty_rates;
  for (std::size_t t = 1; t < b.size(); ++t) b[t] = std::min(b[t], b[t - 1]);
  return b;
}

std::vector<std::int64_t> period_loads(const Instance& inst, const Selection& sel) {
  check_selection(inst, sel);
  std::vector<std::int64_t> q(inst.horizon, 0);
  for (int i : sel) q[inst.items[i].deadline - 1] += inst.items[i].size;
  return q;
}

std::vector<std::int64_t> period_overflows(std::span<const std::int64_t> cum,
                                           std::span<const std::int64_t> loads) {
  const int T = static_cast<int>(cum.size());
  std::vector<std::int64_t> y(T, 0);
  auto c = [&](int t) -> std::int64_t { return t == 0 ? 0 : cum[t - 1]; };
  for (int t = 1; t <= T; ++t) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::int64_t between = 0;  // sum of Q_tau for t' < tau < t
    for (int tp = t - 1; tp >= 0; --tp) {
      best = std::max(best, c(t) - c(tp) - between);
      if (tp >= 1) between += loads[tp - 1];
    }
    y[t - 1] = std::max<std::int64_t>(0, loads[t - 1] - best);
  }
  return y;
}

std::int64_t total_reward(const Instance& inst, const Selection& sel) {
  check_selection(inst, sel);
  std::int64_t r = 0;
  for (int i : sel) r += inst.items[i].reward;
  return r;
}

std::int64_t profit(const Instance& inst, const Selection& sel,
                    std::optional<std::span<const std::int64_t>> path) {
  const std::vector<std::int64_t> b = effective_penalties(inst);
  std::span<const std::int64_t> cum = path ? *path : std::span<const std::int64_t>(inst.cum_capacity);
  if (static_cast<int>(cum.size()) != inst.horizon) throw ValidationError("path length mismatch");
  const auto y = period_overflows(cum, period_loads(inst, sel));
  std::int64_t p = total_reward(inst, sel);
  for (int t = 0; t < inst.horizon; ++t) p -= b[t] * y[t];
  return p;
}

Feasibility mpbkp_feasible(const Instance& inst, const Selection& sel) {
  const auto q = period_loads(inst, sel);
  Feasibility f{true, total_reward(inst, sel)};
  std::int64_t load = 0;
  for (int t = 0; t < inst.horizon; ++t) {
    load += q[t];
    if (load > inst.cum_capacity[t]) f.feasible = false;
  }
  return f;
}

std::int64_t item_profit(const Instance& inst, int i) {
  if (i < 0 || i >= inst.num_items()) throw ValidationError("item index out of range");
  const Item& it = inst.items[i];
  const std::int64_t over = std::max<std::int64_t>(0, it.size - inst.cum_capacity[it.deadline - 1]);
  return it.reward - effective_penalties(inst)[it.deadline - 1] * over;
}

ProfitBounds profit_bounds(const Instance& inst) {
  ProfitBounds pb;
  for (int i = 0; i < inst.num_items(); ++i) {
    const std::int64_t p = item_profit(inst, i);
    if (p > 0) {
      pb.lower = std::max(pb.lower, p);
      pb.upper += p;
    }
  }
  return pb;
}

ReducedInstance drop_unprofitable(const Instance& inst) {
  ReducedInstance out;
  out.instance = inst;
  out.instance.items.clear();
  for (int i = 0; i < inst.num_items(); ++i) {
    if (item_profit(inst, i) > 0) {
      out.instance.items.push_back(inst.items[i]);
      out.original_index.push_back(i);
    }
  }
  return out;
}

Instance to_soft(const Instance& inst) {
  if (inst.variant() != Variant::kHard) throw VariantError("to_soft expects a hard instance");
  Instance out = inst;
  std::int64_t b = 1;
  for (const Item& it : inst.items) b += it.reward;
  out.penalty_rates = std::vector<std::int64_t>(inst.horizon, b);
  return out;
}

}  // namespace mpk
