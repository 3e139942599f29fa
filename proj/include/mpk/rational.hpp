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

#ifndef MPK_RATIONAL_HPP_
#define MPK_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or "a" with optional leading minus. Throws ValidationError.
Rational parse_rational(std::string_view text);

// "a/b" in lowest terms, or "a" when the denominator is one.
std::string to_string(const Rational& x);

// Decimal rendering rounded half away from zero.
std::string to_decimal(const Rational& x, int places);

BigInt floor_div(const Rational& x);
BigInt ceil_div(const Rational& x);

// Narrowing with a range check; throws SolverError on overflow.
std::int64_t to_int64(const BigInt& x);

// (1 + x)^k computed exactly.
Rational one_plus_pow(const Rational& x, int k);

// Largest delta of the form 1/N with (1 + delta)^k <= factor. Requires
// factor > 1 and k >= 1.
Rational root_budget(const Rational& factor, int k);

}  // namespace mpk

#endif  // MPK_RATIONAL_HPP_
