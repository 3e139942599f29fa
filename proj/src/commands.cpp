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

#include "mpk/commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mpk/bench.hpp"
#include "mpk/errors.hpp"
#include "mpk/generate.hpp"
#include "mpk/instance_io.hpp"
#include "mpk/mpbkp.hpp"
#include "mpk/mpbkps.hpp"
#include "mpk/mpbkpss.hpp"
#include "mpk/oracles.hpp"

namespace mpk::cli {
namespace {

struct AlgoInfo {
  Algo algo;
  const char* name;
  bool needs_eps;
};

constexpr AlgoInfo kAlgos[] = {
    {Algo::kConv, "conv", true},         {Algo::kUniform, "uniform", true},
    {Algo::kDp, "dp", true},             {Algo::kSimple, "simple", true},
    {Algo::kGreedy, "greedy", false},    {Algo::kBruteForce, "bf", false},
    {Algo::kDpExact, "dpexact", false},
};

Instance load_instance(const std::string& path, std::ostream& err) {
  const Instance inst = io::parse_instance(io::read_file(path));
  const ValidationReport rep = validate_instance(inst);
  for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
  require_valid(inst);
  return inst;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

}  // namespace

std::optional<Algo> parse_algo(std::string_view name) {
  for (const auto& a : kAlgos) {
    if (name == a.name) return a.algo;
  }
  return std::nullopt;
}

std::string_view algo_name(Algo algo) {
  for (const auto& a : kAlgos) {
    if (a.algo == algo) return a.name;
  }
  return "unknown";
}

bool algo_needs_eps(Algo algo) {
  for (const auto& a : kAlgos) {
    if (a.algo == algo) return a.needs_eps;
  }
  return false;
}

Rational objective_of(const Instance& inst, const Selection& sel) {
  switch (inst.variant()) {
    case Variant::kHard: {
      const Feasibility f = mpbkp_feasible(inst, sel);
      if (!f.feasible) throw SolverError("selection violates a capacity constraint");
      return f.reward;
    }
    case Variant::kSoft:
      return profit(inst, sel);
    case Variant::kStochastic:
      return mpbkpss::expected_profit(inst, sel);
  }
  return 0;
}

Outcome run_algorithm(const Instance& inst, Algo algo, const Rational& eps) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  switch (algo) {
    case Algo::kConv: {
      const auto r = mpbkp::solve_conv(inst, eps);
      out.selected = r.selected;
      out.iterations = inst.horizon;
      break;
    }
    case Algo::kUniform: {
      const auto r = mpbkp::solve_uniform(inst, eps);
      out.selected = r.selected;
      out.iterations = inst.horizon;
      break;
    }
    case Algo::kDp: {
      const auto r = mpbkps::solve(inst, eps);
      out.selected = r.selected;
      out.iterations = r.iterations;
      break;
    }
    case Algo::kSimple: {
      const auto r = mpbkps::solve_simple(inst, eps);
      out.selected = r.selected;
      out.iterations = r.iterations;
      break;
    }
    case Algo::kGreedy: {
      const auto r = mpbkpss::greedy_solve(inst);
      out.selected = r.solution.selected;
      out.iterations = r.rounds;
      break;
    }
    case Algo::kBruteForce: {
      const auto r = oracle::brute_force(inst, inst.variant());
      out.selected = r.selected;
      break;
    }
    case Algo::kDpExact: {
      const auto r = oracle::dp_exact_mpbkp(inst);
      out.selected = r.selected;
      break;
    }
  }
  out.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.objective = objective_of(inst, out.selected);
  return out;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-period budgeted knapsack solvers", "mpk"};
  app.require_subcommand(1);

  std::string algo_arg, eps_arg = "1/4", in_path, out_path;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--algo", algo_arg, "conv|uniform|dp|simple|greedy|bf|dpexact")->required();
  solve->add_option("--eps", eps_arg, "Accuracy as NUM/DEN (default 1/4)");
  solve->add_option("--in", in_path, "Instance JSON")->required();
  solve->add_option("--out", out_path, "Solution JSON (default stdout)");

  std::string inst_path, sol_path;
  CLI::App* verify = app.add_subcommand("verify", "Check a solution file against an instance");
  verify->add_option("--instance", inst_path, "Instance JSON")->required();
  verify->add_option("--solution", sol_path, "Solution JSON")->required();

  std::string cfg_path, csv_path, plot_path;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  bench->add_option("--config", cfg_path, "Sweep config JSON")->required();
  bench->add_option("--out", csv_path, "CSV output (default stdout)");
  bench->add_option("--plot", plot_path, "Write mean wall time per n as a text chart");

  std::string variant_arg = "mpbkp", gen_out;
  GenSpec gs;
  CLI::App* gen = app.add_subcommand("generate", "Write a random instance");
  gen->add_option("--variant", variant_arg, "mpbkp|mpbkps|mpbkpss");
  gen->add_option("--n", gs.n, "Number of items");
  gen->add_option("--T", gs.T, "Number of periods");
  gen->add_option("--seed", gs.seed, "Random seed");
  gen->add_flag("--unit-size", gs.unit_size, "All sizes equal one");
  gen->add_option("--out", gen_out, "Instance JSON (default stdout)");

  CLI::App* check = app.add_subcommand("validate", "Report instance errors and warnings");
  check->add_option("--in", in_path, "Instance JSON")->required();

  try {
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (*solve) {
      const auto algo = parse_algo(algo_arg);
      if (!algo) throw ValidationError("unknown algorithm '" + algo_arg + "'");
      const Rational eps = parse_rational(eps_arg);
      if (algo_needs_eps(*algo) && (eps <= 0 || eps >= 1)) {
        throw ValidationError("--eps must lie in (0, 1)");
      }
      const Instance inst = load_instance(in_path, err);
      const Outcome res = run_algorithm(inst, *algo, eps);
      io::SolutionRecord rec;
      rec.selected = res.selected;
      rec.objective = res.objective;
      rec.algorithm = std::string(algo_name(*algo));
      if (algo_needs_eps(*algo)) rec.epsilon = eps;
      rec.iterations = res.iterations;
      rec.wall_ms = res.wall_ms;
      emit(out_path, io::serialize_solution(rec), out);
      return kOk;
    }
    if (*verify) {
      const Instance inst = load_instance(inst_path, err);
      const io::SolutionRecord rec = io::parse_solution(io::read_file(sol_path));
      check_selection(inst, rec.selected);
      Rational actual;
      try {
        actual = objective_of(inst, rec.selected);
      } catch (const SolverError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kSolver;
      }
      if (actual != rec.objective) {
        err << "objective mismatch: claimed " << to_string(rec.objective) << ", actual "
            << to_string(actual) << "\n";
        return kSolver;
      }
      out << "ok " << to_string(actual) << "\n";
      return kOk;
    }
    if (*bench) {
      const bench::Config cfg = bench::parse_config(io::read_file(cfg_path));
      const auto rows = bench::run(cfg);
      emit(csv_path, bench::to_csv(rows), out);
      if (!plot_path.empty()) io::write_file(plot_path, bench::growth_plot(rows));
      const std::size_t bad = bench::violations(rows);
      if (bad > 0) {
        err << bad << " run(s) below their guarantee\n";
        return kSolver;
      }
      return kOk;
    }
    if (*gen) {
      const auto v = parse_variant(variant_arg);
      if (!v) throw ValidationError("unknown variant '" + variant_arg + "'");
      gs.variant = *v;
      emit(gen_out, io::serialize_instance(generate(gs)), out);
      return kOk;
    }
    if (*check) {
      const Instance inst = io::parse_instance(io::read_file(in_path));
      const ValidationReport rep = validate_instance(inst);
      for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
      for (const auto& e : rep.errors) out << "error: " << e << "\n";
      return rep.ok() ? kOk : kValidation;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSolver;
  }
  return kValidation;
}

}  // namespace mpk::cli
