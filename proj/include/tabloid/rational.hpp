// Copyright 2026 The Tabloid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TABLOID_RATIONAL_HPP
#define TABLOID_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tabloid {

// Every scalar in the library is an arbitrary-precision rational.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q != 0) and returns the canonical value.
// Throws ParseError on anything else, including decimal points.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" in lowest terms with q > 0 otherwise.
std::string to_string(const Rational& value);

// Decimal rendering with the given number of significant digits; only used
// for optional approximate output.
std::string to_approx_string(const Rational& value, int significant_digits = 12);

bool is_integer(const Rational& value);

Rational from_int(std::int64_t value);

// Least common multiple of the denominators (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace tabloid

#endif  // TABLOID_RATIONAL_HPP
