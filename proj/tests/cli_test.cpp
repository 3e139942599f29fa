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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "mpk/commands.hpp"
#include "mpk/instance_io.hpp"

using namespace mpk;
using namespace mpk::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mpk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(MPK_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(const char* name) { return std::string(MPK_TEST_DATA) + "/" + name; }

std::string write_solution(const TempDir& dir, const char* name, Selection sel, Rational obj) {
  io::SolutionRecord s;
  s.selected = std::move(sel);
  s.objective = std::move(obj);
  s.algorithm = "manual";
  const std::string path = dir.file(name);
  io::write_file(path, io::serialize_solution(s));
  return path;
}

}  // namespace

TEST_CASE("verify exit codes") {
  TempDir dir;
  CHECK(run("verify --instance " + data("ex1.json") + " --solution " +
            write_solution(dir, "a.json", {1, 2}, 8)) == 0);
  CHECK(run("verify --instance " + data("ex1.json") + " --solution " +
            write_solution(dir, "b.json", {0, 1}, 9)) == 2);
  CHECK(run("verify --instance " + data("ex2.json") + " --solution " +
            write_solution(dir, "c.json", {1}, 7)) == 2);
  CHECK(run("verify --instance " + dir.file("missing.json") + " --solution " + dir.file("a.json")) == 3);
}

TEST_CASE("solve exit codes and outputs") {
  TempDir dir;
  const std::string out = dir.file("s.json");
  CHECK(run("solve --algo conv --eps 1/4 --in " + data("ex1.json") + " --out " + out) == 0);
  CHECK(io::parse_solution(io::read_file(out)).objective >= 7);
  CHECK(run("solve --algo dp --in " + data("ex3.json") + " --out " + out) == 2);
  CHECK(run("solve --algo conv --in " + dir.file("missing.json") + " --out " + out) == 3);
  CHECK(run("solve --algo conv --eps 3/2 --in " + data("ex1.json") + " --out " + out) == 1);
  CHECK(run("solve --algo nope --in " + data("ex1.json") + " --out " + out) != 0);
  const std::string bad = dir.file("bad.json");
  io::write_file(bad, R"({"version":1,"T":2,"cumulative_capacity":[3,1],"items":[]})");
  CHECK(run("solve --algo bf --in " + bad + " --out " + out) == 1);
  CHECK(run("validate --in " + bad) == 1);
  CHECK(run("validate --in " + data("ex3.json")) == 0);
}

TEST_CASE("bench with an empty config prints only the header") {
  TempDir dir;
  const std::string cfg = dir.file("cfg.json");
  const std::string csv = dir.file("out.csv");
  io::write_file(cfg, R"({"sweeps":[]})");
  REQUIRE(run("bench --config " + cfg + " --out " + csv) == 0);
  CHECK(io::read_file(csv) == "instance_id,n,T,variant,algo,eps,value,opt,ratio,iters,wall_ms\n");
}

TEST_CASE("generate is deterministic") {
  TempDir dir;
  REQUIRE(run("generate --variant mpbkpss --n 6 --T 3 --seed 9 --unit-size --out " + dir.file("a.json")) == 0);
  REQUIRE(run("generate --variant mpbkpss --n 6 --T 3 --seed 9 --unit-size --out " + dir.file("b.json")) == 0);
  const std::string a = io::read_file(dir.file("a.json"));
  CHECK(a == io::read_file(dir.file("b.json")));
  for (const Item& it : io::parse_instance(a).items) CHECK(it.size == 1);
}

TEST_CASE("every solver's output verifies") {
  TempDir dir;
  const char* algos[][2] = {{"mpbkp", "conv"},   {"mpbkp", "uniform"}, {"mpbkp", "bf"},
                            {"mpbkp", "dpexact"}, {"mpbkps", "dp"},     {"mpbkps", "simple"},
                            {"mpbkps", "bf"},     {"mpbkpss", "greedy"}, {"mpbkpss", "bf"}};
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (const auto& [variant, algo] : algos) {
      const std::string in = dir.file("in.json");
      const std::string out = dir.file("out.json");
      REQUIRE(run(std::string("generate --variant ") + variant + " --n 7 --T 3 --seed " + std::to_string(seed) +
                  " --out " + in) == 0);
      CHECK(run(std::string("solve --algo ") + algo + " --eps 1/5 --in " + in + " --out " + out) == 0);
      CHECK(run("verify --instance " + in + " --solution " + out) == 0);
    }
  }
}

TEST_CASE("in-process entry point") {
  std::ostringstream out, err;
  const char* argv[] = {"mpk", "verify", "--instance", MPK_TEST_DATA "/ex1.json", "--solution",
                        "/nonexistent.json"};
  CHECK(cli::main_entry(6, argv, out, err) == 3);
  CHECK(cli::objective_of(ex2(), {1}) == 6);
  CHECK_THROWS(cli::objective_of(ex1(), {0, 1}));
}
