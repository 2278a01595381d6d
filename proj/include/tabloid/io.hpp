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


// File formats. Rationals are written as "p/q" strings (or "p" when
// integral); integers may also be read from bare JSON numbers.

#ifndef TABLOID_IO_HPP
#define TABLOID_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tabloid/coopgame.hpp"
#include "tabloid/module_vector.hpp"

namespace tabloid {

using Json = nlohmann::ordered_json;

// All parsers throw ParseError naming the offending field.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

Rational rational_from_json(const Json& j, std::string_view field);
Json rational_to_json(const Rational& value);
std::vector<Rational> rationals_from_json(const Json& j, std::string_view field);
Json rationals_to_json(const std::vector<Rational>& values);

// {"shape":[...], "values":{"<rank>":"p/q", ...}}
ModuleVector module_vector_from_json(const Json& j);
Json module_vector_to_json(const ModuleVector& f);

// {"n":3, "shape":[1,1,1], "ballots":[{"ranking":[[1],[2],[3]], "count":2}]}
ModuleVector ballots_from_json(const Json& j);
// One ballot per line, "1>2>3,count"; "=" joins labels sharing a row.
// Blank lines and lines starting with '#' are skipped.
ModuleVector ballots_from_csv(std::string_view text);
// Ranking as rows joined by '>' and labels within a row by '='.
std::string ranking_label(const Tabloid& x);

// {"weights":["1","1/2","0"]}
std::vector<Rational> weights_from_json(const Json& j);

// {"n":3, "v":{"<mask>":"p/q", ...}}; missing coalitions are 0.
Game game_from_json(const Json& j);
Json game_to_json(const Game& v);

// {"c0":[...], "c1":[...]}
SolutionCoefficients coefficients_from_json(const Json& j);
Json coefficients_to_json(const SolutionCoefficients& c);
// {"m":[...]}
MarginalWeights marginal_from_json(const Json& j);
Json marginal_to_json(const MarginalWeights& m);

}  // namespace tabloid

#endif  // TABLOID_IO_HPP
