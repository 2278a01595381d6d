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

#ifndef TABLOID_COMBINATORICS_HPP
#define TABLOID_COMBINATORICS_HPP

#include <cstdint>
#include <span>

#include "tabloid/rational.hpp"

namespace tabloid {

// C(n, k) as a machine integer; 0 when k < 0 or k > n. Throws
// CapacityError if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// n! / (parts[0]! * parts[1]! * ...), n = sum of parts. Throws
// CapacityError on 64-bit overflow.
std::uint64_t multinomial(std::span<const int> parts);

Integer factorial(int n);
Integer big_binomial(int n, int k);

}  // namespace tabloid

#endif  // TABLOID_COMBINATORICS_HPP
