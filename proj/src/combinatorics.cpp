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

#include "tabloid/combinatorics.hpp"

#include <string>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

std::uint64_t to_u64(const Integer& value, const char* what) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  if (!value.fits_ulong_p()) {
    throw CapacityError(std::string(what) + " exceeds 64-bit range");
  }
  return value.get_ui();
}

}  // namespace

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer big_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

std::uint64_t binomial(int n, int k) { return to_u64(big_binomial(n, k), "binomial coefficient"); }

std::uint64_t multinomial(std::span<const int> parts) {
  int n = 0;
  Integer result = 1;
  for (int p : parts) {
    n += p;
    result *= big_binomial(n, p);
  }
  return to_u64(result, "multinomial coefficient");
}

}  // namespace tabloid
