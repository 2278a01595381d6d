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

#ifndef TABLOID_ERRORS_HPP
#define TABLOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tabloid {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: rationals, JSON documents, ballot lines.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operands live on incompatible shapes or on different numbers of symbols.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A well-formed request that violates a mathematical precondition
// (index out of range, dependent weighting vectors, targets outside U1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An index set or matrix would exceed the configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tabloid

#endif  // TABLOID_ERRORS_HPP
