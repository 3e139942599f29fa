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

#include "mpk/stepfn.hpp"

#include <algorithm>
#include <limits>

#include "mpk/errors.hpp"

namespace mpk {
namespace {

constexpr std::int64_t kMaxExactReward = 20'000'000;

StepFn exact_single(const KnapsackItem& it) {
  std::vector<Step> pts;
  pts.push_back({0, 0, nullptr});
  pts.push_back({it.size, it.reward, make_leaf({it.id})});
  return StepFn::from_candidates(std::move(pts));
}

StepFn merge_range(std::span<const KnapsackItem> items, const GeometricGrid& grid,
                   std::optional<std::int64_t> cap) {
  if (items.size() == 1) {
    StepFn f = exact_single(items[0]);
    return cap ? truncate(f, *cap) : f;
  }
  const std::size_t mid = items.size() / 2;
  StepFn left = merge_range(items.first(mid), grid, cap);
  StepFn right = merge_range(items.subspan(mid), grid, cap);
  StepFn h = conv_naive(left, right);
  if (cap) h = truncate(h, *cap);
  return round_geometric(h, grid);
}

int ceil_log2(std::size_t n) {
  int d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  return d;
}

}  // namespace

StepFn::StepFn() { steps_.push_back({0, 0, nullptr}); }

StepFn StepFn::negative_infinity() {
  StepFn f;
  f.steps_.clear();
  return f;
}

StepFn StepFn::from_steps(std::vector<Step> steps, std::optional<std::int64_t> trunc) {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k].capacity < 0) throw ValidationError("step capacity must be nonnegative");
    if (k > 0 && (steps[k].capacity <= steps[k - 1].capacity ||
                  steps[k].value <= steps[k - 1].value)) {
      throw ValidationError("steps must strictly increase in capacity and value");
    }
    if (trunc && steps[k].capacity > *trunc) {
      throw ValidationError("step beyond truncation point");
    }
  }
  StepFn f;
  f.steps_ = std::move(steps);
  f.trunc_ = trunc;
  return f;
}

StepFn StepFn::from_candidates(std::vector<Step> points, std::optional<std::int64_t> trunc) {
  std::stable_sort(points.begin(), points.end(), [](const Step& a, const Step& b) {
    if (a.capacity != b.capacity) return a.capacity < b.capacity;
    return a.value > b.value;
  });
  StepFn f;
  f.steps_.clear();
  f.trunc_ = trunc;
  for (Step& p : points) {
    if (p.capacity < 0) throw ValidationError("step capacity must be nonnegative");
    if (trunc && p.capacity > *trunc) break;
    if (!f.steps_.empty() && p.value <= f.steps_.back().value) continue;
    if (!f.steps_.empty() && p.capacity == f.steps_.back().capacity) continue;
    f.steps_.push_back(std::move(p));
  }
  return f;
}

StepFn StepFn::from_points(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pts) {
  std::vector<Step> steps;
  for (const auto& [c, v] : pts) steps.push_back({c, v, nullptr});
  return from_steps(std::move(steps));
}

const Step* StepFn::step_at(std::int64_t c) const {
  if (steps_.empty() || c < steps_.front().capacity) return nullptr;
  if (trunc_ && c > *trunc_) return nullptr;
  auto it = std::upper_bound(steps_.begin(), steps_.end(), c,
                             [](std::int64_t x, const Step& s) { return x < s.capacity; });
  return &*(it - 1);
}

std::optional<std::int64_t> StepFn::operator()(std::int64_t c) const {
  const Step* s = step_at(c);
  if (!s) return std::nullopt;
  return s->value;
}

StepFn& StepFn::set_tag(const StructureTag& tag) {
  const StructureTag actual = classify(*this, tag.uniform_r);
  if ((tag.uniform_r && actual.uniform_r != tag.uniform_r) ||
      (tag.pseudo_concave && !actual.pseudo_concave)) {
    throw ValidationError("structure tag does not hold for this function");
  }
  tag_ = tag;
  return *this;
}

std::optional<std::int64_t> eval(const StepFn& f, std::int64_t c) { return f(c); }

StepFn from_items_exact(std::span<const KnapsackItem> items) {
  std::int64_t total = 0;
  for (const auto& it : items) {
    if (it.reward <= 0 || it.size <= 0) throw ValidationError("items need positive reward and size");
    total += it.reward;
    if (total > kMaxExactReward) throw GuardError("from_items_exact: total reward too large");
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(total + 1, kInf);
  std::vector<Witness> wit(total + 1);
  best[0] = 0;
  std::int64_t reach = 0;
  for (const auto& it : items) {
    for (std::int64_t v = reach; v >= 0; --v) {
      if (best[v] == kInf) continue;
      const std::int64_t nv = v + it.reward;
      const std::int64_t ns = best[v] + it.size;
      if (ns < best[nv]) {
        best[nv] = ns;
        wit[nv] = extend(wit[v], it.id);
      }
    }
    reach += it.reward;
  }
  std::vector<Step> pts;
  for (std::int64_t v = 0; v <= total; ++v) {
    if (best[v] != kInf) pts.push_back({best[v], v, wit[v]});
  }
  return StepFn::from_candidates(std::move(pts));
}

StepFn conv_naive(const StepFn& f, const StepFn& g) {
  if (f.is_negative_infinity() || g.is_negative_infinity()) return StepFn::negative_infinity();
  std::optional<std::int64_t> trunc;
  if (f.trunc() && g.trunc()) trunc = *f.trunc() + *g.trunc();
  struct Cand {
    std::int64_t capacity;
    std::int64_t value;
    std::uint32_t i, j;
  };
  std::vector<Cand> pts;
  pts.reserve(f.complexity() * g.complexity());
  // Generated with the left index outermost, so the stable sort below keeps
  // the split with the smallest left capacity among ties.
  for (std::size_t i = 0; i < f.complexity(); ++i) {
    const Step& a = f.steps()[i];
    for (std::size_t j = 0; j < g.complexity(); ++j) {
      const Step& b = g.steps()[j];
      const std::int64_t c = a.capacity + b.capacity;
      if (trunc && c > *trunc) break;
      pts.push_back({c, a.value + b.value, static_cast<std::uint32_t>(i),
                     static_cast<std::uint32_t>(j)});
    }
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Cand& x, const Cand& y) {
    if (x.capacity != y.capacity) return x.capacity < y.capacity;
    return x.value > y.value;
  });
  std::vector<Step> out;
  for (const Cand& p : pts) {
    if (!out.empty() && (p.value <= out.back().value || p.capacity == out.back().capacity)) continue;
    out.push_back({p.capacity, p.value, join(f.steps()[p.i].witness, g.steps()[p.j].witness)});
  }
  return StepFn::from_steps(std::move(out), trunc);
}

StepFn truncate(const StepFn& f, std::int64_t cap) {
  std::vector<Step> steps;
  for (const Step& s : f.steps()) {
    if (s.capacity > cap) break;
    steps.push_back(s);
  }
  std::optional<std::int64_t> t = cap;
  if (f.trunc()) t = std::min(*f.trunc(), cap);
  if (*t < 0) {
    steps.clear();
    t = -1;
  }
  return StepFn::from_steps(std::move(steps), t);
}

GeometricGrid::GeometricGrid(const Rational& r0, const Rational& eps, std::int64_t max_value)
    : eps_(eps) {
  if (r0 <= 0) throw ValidationError("grid origin r0 must be positive");
  if (eps <= 0) throw ValidationError("grid epsilon must be positive");
  const BigInt num = boost::multiprecision::numerator(eps);
  const BigInt den = boost::multiprecision::denominator(eps);
  BigInt g = ceil_div(r0);
  points_.push_back(to_int64(g));
  while (g <= max_value) {
    // ceil((1 + eps) g) = ceil(g (num + den) / den)
    BigInt prod = g * (num + den);
    BigInt next = prod / den;
    if (prod % den != 0) next += 1;
    g = next;
    if (g > max_value) break;
    points_.push_back(to_int64(g));
  }
}

std::int64_t GeometricGrid::round_down(std::int64_t v) const {
  if (v == 0) return 0;
  if (v < points_.front()) throw ValidationError("value below the grid origin r0");
  auto it = std::upper_bound(points_.begin(), points_.end(), v);
  if (it == points_.end() && v > points_.back()) {
    // v exceeds the precomputed range: extend on the fly.
    BigInt g = points_.back();
    const BigInt num = boost::multiprecision::numerator(eps_);
    const BigInt den = boost::multiprecision::denominator(eps_);
    BigInt last = g;
    while (g <= v) {
      last = g;
      BigInt prod = g * (num + den);
      BigInt next = prod / den;
      if (prod % den != 0) next += 1;
      g = next;
    }
    return to_int64(last);
  }
  return *(it - 1);
}

StepFn round_geometric(const StepFn& f, const GeometricGrid& grid) {
  std::vector<Step> pts;
  pts.reserve(f.complexity());
  for (const Step& s : f.steps()) {
    if (s.value < 0) throw ValidationError("round_geometric needs nonnegative values");
    pts.push_back({s.capacity, grid.round_down(s.value), s.witness});
  }
  return StepFn::from_candidates(std::move(pts), f.trunc());
}

StepFn round_geometric(const StepFn& f, const Rational& r0, const Rational& eps) {
  std::int64_t vmax = 0;
  for (const Step& s : f.steps()) vmax = std::max(vmax, s.value);
  return round_geometric(f, GeometricGrid(r0, eps, vmax));
}

StepFn approx_knapsack_fn(std::span<const KnapsackItem> items, const Rational& eps,
                          std::optional<std::int64_t> cap) {
  if (eps <= 0) throw ValidationError("eps must be positive");
  StepFn zero;
  if (items.empty()) return cap ? truncate(zero, *cap) : zero;
  std::int64_t r0 = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  for (const auto& it : items) {
    if (it.reward <= 0 || it.size <= 0) throw ValidationError("items need positive reward and size");
    r0 = std::min(r0, it.reward);
    total += it.reward;
  }
  // A leaf passes through at most ceil(log2 n) rounded merges.
  const int depth = ceil_log2(items.size());
  const Rational delta = depth == 0 ? eps : root_budget(1 + eps, depth);
  const GeometricGrid grid(r0, delta, total);
  return merge_range(items, grid, cap);
}

StepFn uniform_fn_from_equal_rewards(std::span<const KnapsackItem> items, std::int64_t r) {
  if (r <= 0) throw ValidationError("uniform reward must be positive");
  std::vector<KnapsackItem> sorted(items.begin(), items.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const KnapsackItem& a, const KnapsackItem& b) { return a.size < b.size; });
  std::vector<Step> steps;
  steps.push_back({0, 0, nullptr});
  std::int64_t cap = 0;
  Witness w;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].size <= 0) throw ValidationError("sizes must be positive");
    cap += sorted[k].size;
    w = extend(w, sorted[k].id);
    steps.push_back({cap, static_cast<std::int64_t>(k + 1) * r, w});
  }
  StepFn f = StepFn::from_steps(std::move(steps));
  f.set_tag(StructureTag{r, true});
  return f;
}

StructureTag classify(const StepFn& f, std::optional<std::int64_t> r) {
  StructureTag tag;
  const auto& s = f.steps();
  if (s.empty()) return tag;
  std::optional<std::int64_t> unit = r;
  if (!unit && s.size() >= 2) unit = s[1].value;
  bool uniform = unit.has_value() && *unit > 0;
  for (std::size_t k = 0; uniform && k < s.size(); ++k) {
    if (s[k].value != static_cast<std::int64_t>(k) * *unit) uniform = false;
  }
  if (uniform) tag.uniform_r = unit;
  tag.pseudo_concave = true;
  for (std::size_t k = 2; k < s.size(); ++k) {
    if (s[k].capacity - s[k - 1].capacity < s[k - 1].capacity - s[k - 2].capacity) {
      tag.pseudo_concave = false;
    }
  }
  return tag;
}

StepFn conv_uniform_concave(const StepFn& f, const StepFn& g, const GeometricGrid* grid) {
  if (!g.tag() || !g.tag()->uniform_r || !g.tag()->pseudo_concave) {
    throw ValidationError("conv_uniform_concave: g must be tagged uniform and pseudo-concave");
  }
  StepFn h = conv_naive(f, g);
  return grid ? round_geometric(h, *grid) : h;
}

StepFn conv_uniform_concave(const StepFn& f, const StepFn& g, const Rational& r0,
                            const Rational& eps) {
  if (eps < 0) throw ValidationError("eps must be nonnegative");
  if (eps == 0) return conv_uniform_concave(f, g, nullptr);
  std::int64_t vmax = 0;
  for (const Step& s : f.steps()) vmax = std::max(vmax, s.value);
  std::int64_t gmax = g.steps().empty() ? 0 : g.steps().back().value;
  const GeometricGrid grid(r0, eps, vmax + gmax);
  return conv_uniform_concave(f, g, &grid);
}

}  // namespace mpk
