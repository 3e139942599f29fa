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

#include "mpk/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mpk/errors.hpp"

namespace mpk::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!ok.count(it.key())) fail(where + "." + it.key(), "unknown field");
  }
}

const json& need(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(where, "integer out of range");
  }
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(as_int(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(as_int(v, where));
  if (!v.is_string()) fail(where, "expected a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": malformed JSON");
  }
}

json int_array(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (std::int64_t x : v) a.push_back(x);
  return a;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  only_keys(doc, "$", {"version", "T", "cumulative_capacity", "penalty_rates", "items", "scenarios"});
  if (as_int(need(doc, "$", "version"), "$.version") != kFormatVersion) {
    fail("$.version", "unsupported version");
  }
  Instance inst;
  const std::int64_t T = as_int(need(doc, "$", "T"), "$.T");
  if (T < 1 || T > 1'000'000) fail("$.T", "must be between 1 and 1000000");
  inst.horizon = static_cast<int>(T);
  inst.cum_capacity = as_int_array(need(doc, "$", "cumulative_capacity"), "$.cumulative_capacity");
  if (doc.contains("penalty_rates")) {
    inst.penalty_rates = as_int_array(doc["penalty_rates"], "$.penalty_rates");
  }
  const json& items = need(doc, "$", "items");
  if (!items.is_array()) fail("$.items", "expected an array");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string where = "$.items[" + std::to_string(k) + "]";
    only_keys(items[k], where, {"r", "q", "d"});
    Item it;
    it.reward = as_int(need(items[k], where, "r"), where + ".r");
    it.size = as_int(need(items[k], where, "q"), where + ".q");
    const std::int64_t d = as_int(need(items[k], where, "d"), where + ".d");
    if (d < INT32_MIN || d > INT32_MAX) fail(where + ".d", "out of range");
    it.deadline = static_cast<int>(d);
    inst.items.push_back(it);
  }
  if (doc.contains("scenarios")) {
    const json& sc = doc["scenarios"];
    if (!sc.is_array()) fail("$.scenarios", "expected an array");
    ScenarioSet set;
    for (std::size_t k = 0; k < sc.size(); ++k) {
      const std::string where = "$.scenarios[" + std::to_string(k) + "]";
      only_keys(sc[k], where, {"prob", "cumulative_capacity"});
      Scenario s;
      s.probability = as_rational(need(sc[k], where, "prob"), where + ".prob");
      s.cum_capacity = as_int_array(need(sc[k], where, "cumulative_capacity"), where + ".cumulative_capacity");
      set.paths.push_back(std::move(s));
    }
    inst.scenarios = std::move(set);
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["T"] = inst.horizon;
  doc["cumulative_capacity"] = int_array(inst.cum_capacity);
  if (inst.penalty_rates) doc["penalty_rates"] = int_array(*inst.penalty_rates);
  json items = json::array();
  for (const Item& it : inst.items) items.push_back({{"r", it.reward}, {"q", it.size}, {"d", it.deadline}});
  doc["items"] = std::move(items);
  if (inst.scenarios) {
    json sc = json::array();
    for (const Scenario& s : inst.scenarios->paths) {
      sc.push_back({{"prob", to_string(s.probability)}, {"cumulative_capacity", int_array(s.cum_capacity)}});
    }
    doc["scenarios"] = std::move(sc);
  }
  return doc.dump(2) + "\n";
}

SolutionRecord parse_solution(std::string_view text) {
  const json doc = parse_json(text);
  only_keys(doc, "$", {"selected", "objective", "algorithm", "epsilon", "iterations", "wall_ms"});
  SolutionRecord sol;
  const json& sel = need(doc, "$", "selected");
  if (!sel.is_array()) fail("$.selected", "expected an array");
  for (std::size_t k = 0; k < sel.size(); ++k) {
    const std::int64_t i = as_int(sel[k], "$.selected[" + std::to_string(k) + "]");
    if (i < 0 || i > INT32_MAX) fail("$.selected[" + std::to_string(k) + "]", "index out of range");
    sol.selected.push_back(static_cast<int>(i));
  }
  sol.objective = as_rational(need(doc, "$", "objective"), "$.objective");
  if (doc.contains("algorithm")) {
    if (!doc["algorithm"].is_string()) fail("$.algorithm", "expected a string");
    sol.algorithm = doc["algorithm"].get<std::string>();
  }
  if (doc.contains("epsilon") && !doc["epsilon"].is_null()) sol.epsilon = as_rational(doc["epsilon"], "$.epsilon");
  if (doc.contains("iterations")) sol.iterations = static_cast<int>(as_int(doc["iterations"], "$.iterations"));
  if (doc.contains("wall_ms")) {
    if (!doc["wall_ms"].is_number()) fail("$.wall_ms", "expected a number");
    sol.wall_ms = doc["wall_ms"].get<double>();
  }
  return sol;
}

std::string serialize_solution(const SolutionRecord& sol) {
  json doc;
  doc["selected"] = sol.selected;
  doc["objective"] = to_string(sol.objective);
  doc["algorithm"] = sol.algorithm;
  doc["epsilon"] = sol.epsilon ? json(to_string(*sol.epsilon)) : json(nullptr);
  doc["iterations"] = sol.iterations;
  doc["wall_ms"] = sol.wall_ms;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("error writing " + path);
}

}  // namespace mpk::io
