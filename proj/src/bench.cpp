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

#include "mpk/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mpk/errors.hpp"
#include "mpk/oracles.hpp"

namespace mpk::bench {
namespace {

using nlohmann::json;

constexpr int kBruteForceLimit = 16;
constexpr std::int64_t kDpExactCells = 20'000'000;

template <typename T, typename F>
std::vector<T> list_of(const json& s, const char* key, F conv) {
  std::vector<T> out;
  if (!s.contains(key)) throw ValidationError(std::string("sweep.") + key + ": missing field");
  const json& v = s[key];
  if (!v.is_array()) throw ValidationError(std::string("sweep.") + key + ": expected an array");
  for (const json& x : v) out.push_back(conv(x));
  return out;
}

std::optional<Rational> exact_optimum(const Instance& inst) {
  if (inst.num_items() <= kBruteForceLimit) return oracle::brute_force(inst, inst.variant()).value;
  if (inst.variant() == Variant::kHard &&
      (inst.cum_capacity.back() + 1) * inst.num_items() <= kDpExactCells) {
    return oracle::dp_exact_mpbkp(inst).value;
  }
  return std::nullopt;
}

bool below_guarantee(const BenchRow& row, bool unit_size) {
  if (!row.opt) return false;
  const Rational& opt = *row.opt;
  switch (row.algo) {
    case cli::Algo::kConv:
    case cli::Algo::kUniform:
      return row.value * (1 + row.eps) < opt;
    case cli::Algo::kDp:
    case cli::Algo::kSimple:
      return row.value < (1 - row.eps) * opt;
    case cli::Algo::kGreedy:
      return unit_size && 2 * row.value < opt;
    case cli::Algo::kBruteForce:
    case cli::Algo::kDpExact:
      return row.value != opt;
  }
  return false;
}

struct Job {
  const Sweep* sweep;
  int n, T;
  std::uint64_t seed;
};

std::vector<BenchRow> run_job(const Job& job) {
  GenSpec gs;
  gs.variant = job.sweep->variant;
  gs.n = job.n;
  gs.T = job.T;
  gs.seed = job.seed;
  gs.unit_size = job.sweep->unit_size;
  const Instance inst = generate(gs);
  const std::optional<Rational> opt = exact_optimum(inst);
  const std::string id = std::string(variant_name(gs.variant)) + "-n" + std::to_string(job.n) + "-T" +
                         std::to_string(job.T) + "-s" + std::to_string(job.seed);
  std::vector<BenchRow> rows;
  for (cli::Algo algo : job.sweep->algos) {
    const std::vector<Rational> once{Rational(0)};
    const auto& eps_list = cli::algo_needs_eps(algo) ? job.sweep->eps : once;
    for (const Rational& eps : eps_list) {
      const cli::Outcome out = cli::run_algorithm(inst, algo, eps);
      BenchRow row;
      row.instance_id = id;
      row.n = job.n;
      row.T = job.T;
      row.variant = gs.variant;
      row.algo = algo;
      row.eps = eps;
      row.value = out.objective;
      row.opt = opt;
      row.iters = out.iterations;
      row.wall_ms = out.wall_ms;
      row.violates = below_guarantee(row, job.sweep->unit_size);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string fixed3(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

Config parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error&) {
    throw ValidationError("bench config: malformed JSON");
  }
  Config cfg;
  if (!doc.is_object()) throw ValidationError("bench config: expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "sweeps") throw ValidationError("bench config: unknown field " + it.key());
  }
  if (!doc.contains("sweeps")) return cfg;
  if (!doc["sweeps"].is_array()) throw ValidationError("bench config: sweeps must be an array");
  for (const json& s : doc["sweeps"]) {
    if (!s.is_object()) throw ValidationError("bench config: sweep must be an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
      static const char* kKeys[] = {"variant", "algos", "n", "T", "eps", "seeds", "unit_size"};
      if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return it.key() == k; }) ==
          std::end(kKeys)) {
        throw ValidationError("sweep: unknown field " + it.key());
      }
    }
    Sweep sw;
    if (!s.contains("variant") || !s["variant"].is_string()) throw ValidationError("sweep.variant: missing");
    const auto v = parse_variant(s["variant"].get<std::string>());
    if (!v) throw ValidationError("sweep.variant: unknown variant");
    sw.variant = *v;
    auto as_int = [](const json& x) -> std::int64_t {
      if (!x.is_number_integer()) throw ValidationError("sweep: expected integers");
      return x.get<std::int64_t>();
    };
    sw.algos = list_of<cli::Algo>(s, "algos", [](const json& x) {
      if (!x.is_string()) throw ValidationError("sweep.algos: expected strings");
      const auto a = cli::parse_algo(x.get<std::string>());
      if (!a) throw ValidationError("sweep.algos: unknown algorithm " + x.get<std::string>());
      return *a;
    });
    sw.n = list_of<int>(s, "n", [&](const json& x) { return static_cast<int>(as_int(x)); });
    sw.T = list_of<int>(s, "T", [&](const json& x) { return static_cast<int>(as_int(x)); });
    sw.seeds = list_of<std::uint64_t>(s, "seeds", [&](const json& x) { return static_cast<std::uint64_t>(as_int(x)); });
    if (s.contains("eps")) {
      sw.eps = list_of<Rational>(s, "eps", [](const json& x) {
        if (!x.is_string()) throw ValidationError("sweep.eps: expected \"num/den\" strings");
        return parse_rational(x.get<std::string>());
      });
    }
    if (s.contains("unit_size")) {
      if (!s["unit_size"].is_boolean()) throw ValidationError("sweep.unit_size: expected a boolean");
      sw.unit_size = s["unit_size"].get<bool>();
    }
    for (cli::Algo a : sw.algos) {
      if (cli::algo_needs_eps(a) && sw.eps.empty()) {
        throw ValidationError("sweep: algorithm " + std::string(cli::algo_name(a)) + " needs eps values");
      }
    }
    cfg.sweeps.push_back(std::move(sw));
  }
  return cfg;
}

std::vector<BenchRow> run(const Config& cfg) {
  std::vector<Job> jobs;
  for (const Sweep& sw : cfg.sweeps) {
    for (int n : sw.n) {
      for (int T : sw.T) {
        for (std::uint64_t seed : sw.seeds) jobs.push_back({&sw, n, T, seed});
      }
    }
  }
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MPK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, jobs.size()));
  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        results[k] = run_job(jobs[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<BenchRow> rows;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    for (auto& r : results[k]) rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t violations(const std::vector<BenchRow>& rows) {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return r.violates; }));
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "instance_id,n,T,variant,algo,eps,value,opt,ratio,iters,wall_ms\n";
  if (rows.empty()) return os.str();
  double total_ms = 0;
  std::optional<Rational> worst;
  for (const BenchRow& r : rows) {
    std::string ratio;
    if (r.opt && *r.opt > 0) {
      const Rational q = r.value / *r.opt;
      ratio = to_decimal(q, 6);
      if (!worst || q < *worst) worst = q;
    }
    os << r.instance_id << ',' << r.n << ',' << r.T << ',' << variant_name(r.variant) << ','
       << cli::algo_name(r.algo) << ',' << (cli::algo_needs_eps(r.algo) ? to_string(r.eps) : "") << ','
       << to_string(r.value) << ',' << (r.opt ? to_string(*r.opt) : "") << ',' << ratio << ','
       << r.iters << ',' << fixed3(r.wall_ms) << '\n';
    total_ms += r.wall_ms;
  }
  os << "summary," << rows.size() << ",,all,all,," << violations(rows) << ",,"
     << (worst ? to_decimal(*worst, 6) : "") << ",," << fixed3(total_ms) << '\n';
  return os.str();
}

std::string growth_plot(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::map<int, std::pair<double, int>>> acc;
  for (const BenchRow& r : rows) {
    auto& cell = acc[std::string(variant_name(r.variant)) + "/" + std::string(cli::algo_name(r.algo))][r.n];
    cell.first += r.wall_ms;
    ++cell.second;
  }
  std::ostringstream os;
  for (const auto& [key, by_n] : acc) {
    os << key << "\n";
    double top = 0;
    for (const auto& [n, c] : by_n) top = std::max(top, c.first / c.second);
    for (const auto& [n, c] : by_n) {
      const double mean = c.first / c.second;
      const int bar = top > 0 ? static_cast<int>(40.0 * mean / top + 0.5) : 0;
      os << "  n=" << n << "\t" << fixed3(mean) << " ms\t" << std::string(bar, '#') << "\n";
    }
  }
  return os.str();
}

}  // namespace mpk::bench
