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

#include "mpk/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "mpk/errors.hpp"

namespace mpk {
namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ValidationError("bad rational '" + std::string(whole) + "'");
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.size() > 4000) {
    throw ValidationError("bad rational '" + std::string(whole) + "'");
  }
  BigInt v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ValidationError("bad rational '" + std::string(whole) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& x, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool neg = x < 0;
  const Rational ax = neg ? Rational(-x) : x;
  const BigInt scaled = floor_div(ax * scale + Rational(1, 2));
  const BigInt ip = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  while (static_cast<int>(frac.size()) < places) frac.insert(frac.begin(), '0');
  std::string out = (neg && scaled != 0 ? "-" : "") + ip.str();
  if (places > 0) out += "." + frac;
  return out;
}

BigInt floor_div(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_div(const Rational& x) { return -floor_div(-x); }

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw SolverError("integer overflow: " + x.str());
  }
  return x.convert_to<std::int64_t>();
}

Rational one_plus_pow(const Rational& x, int k) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return Rational(boost::multiprecision::pow(BigInt(num + den), k),
                  boost::multiprecision::pow(den, k));
}

Rational root_budget(const Rational& factor, int k) {
  if (factor <= 1 || k < 1) throw SolverError("root_budget: need factor > 1, k >= 1");
  // Float estimate first, then correct exactly.
  const double f = factor.convert_to<double>();
  double guess = std::ceil(k / std::log1p(std::max(f - 1.0, 1e-300)));
  if (!(guess >= 1.0) || guess > 1e15) guess = 1.0;
  BigInt n = static_cast<std::int64_t>(guess);
  while (one_plus_pow(Rational(BigInt(1), n), k) > factor) n += n / 64 + 1;
  return Rational(BigInt(1), n);
}

}  // namespace mpk
