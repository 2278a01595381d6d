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


#include "tabloid/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

[[noreturn]] void fail(std::string_view field, const std::string& message) {
  throw ParseError(std::string(field) + ": " + message);
}

const Json& member(const Json& j, const char* key, std::string_view context) {
  if (!j.is_object()) fail(context, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(context) + "." + key, "missing field");
  return *it;
}

int int_from_json(const Json& j, std::string_view field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

std::uint64_t parse_index(std::string_view text, std::string_view field) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    fail(field, "key \"" + std::string(text) + "\" is not a decimal index");
  }
  return value;
}

Composition shape_from_json(const Json& j, std::string_view field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of row sizes");
  std::vector<int> parts;
  for (const auto& p : j) {
    const int v = int_from_json(p, field);
    if (v < 1) fail(field, "row sizes must be positive");
    parts.push_back(v);
  }
  return Composition(std::move(parts));
}

Json shape_to_json(const Composition& shape) {
  Json out = Json::array();
  for (int p : shape.parts()) out.push_back(p);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Rational rational_from_json(const Json& j, std::string_view field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : from_int(j.get<std::int64_t>());
  }
  if (!j.is_string()) fail(field, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

Json rational_to_json(const Rational& value) { return to_string(value); }

std::vector<Rational> rationals_from_json(const Json& j, std::string_view field) {
  if (!j.is_array()) fail(field, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], std::string(field) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

ModuleVector module_vector_from_json(const Json& j) {
  const auto shape = shape_from_json(member(j, "shape", "vector"), "vector.shape");
  const auto& values = member(j, "values", "vector");
  if (!values.is_object()) fail("vector.values", "expected an object keyed by rank");
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  for (const auto& [key, value] : values.items()) {
    const std::string field = "vector.values." + key;
    const auto rank = parse_index(key, field);
    if (rank >= shape.tabloid_count()) fail(field, "rank out of range for shape " + shape.to_string());
    entries.emplace_back(rank, rational_from_json(value, field));
  }
  return ModuleVector(shape, std::move(entries));
}

Json module_vector_to_json(const ModuleVector& f) {
  Json values = Json::object();
  f.for_each_nonzero([&](std::uint64_t r, const Rational& v) { values[std::to_string(r)] = rational_to_json(v); });
  Json out;
  out["shape"] = shape_to_json(f.shape());
  out["values"] = std::move(values);
  return out;
}

namespace {

Tabloid ranking_from_rows(const std::vector<std::vector<int>>& rows, const std::string& field) {
  try {
    return Tabloid::from_rows(rows);
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

}  // namespace

ModuleVector ballots_from_json(const Json& j) {
  const int n = int_from_json(member(j, "n", "ballots file"), "n");
  if (n < 1) fail("n", "must be positive");
  const auto shape = j.contains("shape") ? shape_from_json(j["shape"], "shape") : Composition::full_ranking(n);
  if (shape.n() != n) {
    throw ShapeError("shape " + shape.to_string() + " does not partition n = " + std::to_string(n));
  }
  const auto& ballots = member(j, "ballots", "ballots file");
  if (!ballots.is_array()) fail("ballots", "expected an array");
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    const std::string field = "ballots[" + std::to_string(b) + "]";
    const auto& ranking = member(ballots[b], "ranking", field);
    if (!ranking.is_array()) fail(field + ".ranking", "expected an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : ranking) {
      if (!row.is_array()) fail(field + ".ranking", "each row must be an array of labels");
      auto& out = rows.emplace_back();
      for (const auto& label : row) out.push_back(int_from_json(label, field + ".ranking"));
    }
    const auto x = ranking_from_rows(rows, field + ".ranking");
    if (x.shape() != shape) {
      throw ShapeError(field + ".ranking has shape " + x.shape().to_string() + ", expected " + shape.to_string());
    }
    entries.emplace_back(lex_rank(x), rational_from_json(member(ballots[b], "count", field), field + ".count"));
  }
  return ModuleVector(shape, std::move(entries));
}

ModuleVector ballots_from_csv(std::string_view text) {
  std::vector<std::pair<Tabloid, Rational>> ballots;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const std::string field = "line " + std::to_string(line_number);
    const auto comma = content.rfind(',');
    if (comma == std::string::npos) fail(field, "expected \"ranking,count\"");
    std::vector<std::vector<int>> rows;
    std::istringstream ranking(content.substr(0, comma));
    std::string row_text;
    while (std::getline(ranking, row_text, '>')) {
      auto& row = rows.emplace_back();
      std::istringstream labels(row_text);
      std::string label;
      while (std::getline(labels, label, '=')) {
        const auto t = trim(label);
        row.push_back(static_cast<int>(parse_index(t, field)));
      }
    }
    Rational count;
    try {
      count = parse_rational(trim(content.substr(comma + 1)));
    } catch (const ParseError& e) {
      fail(field, e.what());
    }
    ballots.emplace_back(ranking_from_rows(rows, field), std::move(count));
  }
  if (ballots.empty()) fail("csv", "no ballots; use the JSON format for an empty profile");
  const auto shape = ballots.front().first.shape();
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  for (const auto& [x, count] : ballots) {
    if (x.shape() != shape) {
      throw ShapeError("ballot " + ranking_label(x) + " has shape " + x.shape().to_string() + ", expected " +
                       shape.to_string());
    }
    entries.emplace_back(lex_rank(x), count);
  }
  return ModuleVector(shape, std::move(entries));
}

std::string ranking_label(const Tabloid& x) {
  std::string out;
  const auto rows = x.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '>';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += '=';
      out += std::to_string(rows[r][i]);
    }
  }
  return out;
}

std::vector<Rational> weights_from_json(const Json& j) {
  auto w = rationals_from_json(member(j, "weights", "weights file"), "weights");
  if (w.empty()) fail("weights", "expected at least one weight");
  return w;
}

Game game_from_json(const Json& j) {
  const int n = int_from_json(member(j, "n", "game file"), "n");
  if (n < 1) fail("n", "must be positive");
  Game v(n);
  const auto& values = member(j, "v", "game file");
  if (!values.is_object()) fail("v", "expected an object keyed by coalition bitmask");
  for (const auto& [key, value] : values.items()) {
    const std::string field = "v." + key;
    const auto mask = parse_index(key, field);
    if (mask == 0 || mask > v.grand_coalition()) {
      fail(field, "bitmask out of range 1.." + std::to_string(v.grand_coalition()));
    }
    v.set(static_cast<Coalition>(mask), rational_from_json(value, field));
  }
  return v;
}

Json game_to_json(const Game& v) {
  Json values = Json::object();
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    const auto value = v.value(s);
    if (sgn(value) != 0) values[std::to_string(s)] = rational_to_json(value);
  }
  Json out;
  out["n"] = v.n();
  out["v"] = std::move(values);
  return out;
}

SolutionCoefficients coefficients_from_json(const Json& j) {
  auto c0 = rationals_from_json(member(j, "c0", "coefficients file"), "c0");
  auto c1 = rationals_from_json(member(j, "c1", "coefficients file"), "c1");
  if (c0.empty()) fail("c0", "expected at least one value");
  const int n = static_cast<int>(c0.size());
  return SolutionCoefficients::make(n, std::move(c0), std::move(c1));
}

Json coefficients_to_json(const SolutionCoefficients& c) {
  Json out;
  out["c0"] = rationals_to_json(c.c0);
  out["c1"] = rationals_to_json(c.c1);
  return out;
}

MarginalWeights marginal_from_json(const Json& j) {
  auto m = rationals_from_json(member(j, "m", "marginal file"), "m");
  if (m.empty()) fail("m", "expected at least one weight");
  return MarginalWeights{std::move(m)};
}

Json marginal_to_json(const MarginalWeights& m) {
  Json out;
  out["m"] = rationals_to_json(m.m);
  return out;
}

}  // namespace tabloid
