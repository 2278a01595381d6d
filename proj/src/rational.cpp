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

#include "tabloid/rational.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      (!den.empty() && (den.front() == '-' || den.front() == '+'))) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
  Integer p(num.front() == '+' ? num.substr(1) : num, 10);
  Integer q(den, 10);
  if (q == 0) throw ParseError("zero denominator in \"" + s + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_approx_string(const Rational& value, int significant_digits) {
  // mpf keeps the rounding exact up to the requested precision.
  mpf_class f(value, 256);
  mp_exp_t exponent = 0;
  std::string digits = f.get_str(exponent, 10, static_cast<std::size_t>(significant_digits));
  if (digits.empty() || digits == "0") return "0";
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + digits;
  } else if (static_cast<std::size_t>(exponent) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exponent) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exponent)) + "." +
          digits.substr(static_cast<std::size_t>(exponent));
  }
  return sign + out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational from_int(std::int64_t value) {
  return Rational(Integer(std::to_string(value), 10));
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace tabloid
