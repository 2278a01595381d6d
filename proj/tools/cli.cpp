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


#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tabloid/coopgame.hpp"
#include "tabloid/errors.hpp"
#include "tabloid/io.hpp"
#include "tabloid/specht.hpp"
#include "tabloid/voting.hpp"

namespace tabloid {

namespace {

constexpr int kApproxDigits = 12;

struct Options {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  bool approx = false;

  std::string ballots;
  std::string weights;
  std::string weights_preset;
  bool allow_unsorted = false;
  std::string gamma[3];
  std::string input;
  bool as_integer_profile = false;
  std::string shift_bound = "1000000";
  std::string game;
  std::string concept_name;
  std::string coeffs;
  std::string marginal;
  int n = 0;
};

// A command's output: the JSON document and a flat table for csv/pretty.
struct Report {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Json load_json_file(const std::string& path) { return parse_json(read_file(path)); }

ModuleVector load_ballots(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return ballots_from_csv(read_file(path));
  return ballots_from_json(load_json_file(path));
}

Json input_echo(const ModuleVector& f) {
  Json j;
  j["n"] = f.n();
  j["shape"] = module_vector_to_json(ModuleVector(f.shape()))["shape"];
  j["voter_total"] = rational_to_json(f.sum());
  return j;
}

Json input_echo(const Game& v) {
  Json j;
  j["n"] = v.n();
  j["grand_value"] = rational_to_json(v.grand_value());
  return j;
}

std::string approx(const Rational& v) { return to_approx_string(v, kApproxDigits); }

void require_full(const ModuleVector& f, const char* command) {
  if (!f.shape().is_full_ranking()) {
    throw ShapeError(std::string(command) + " needs full rankings, the ballots have shape " + f.shape().to_string());
  }
}

std::string candidate_label(std::uint64_t rank) { return std::to_string(rank + 1); }

std::string ranking_label_of(const Composition& shape, std::uint64_t rank) {
  return ranking_label(unrank(shape, rank));
}

// scores / winners / tiers, keyed by `label`.
template <typename Label>
void add_scores(Report& report, Json& result, const RankingScores& scores, const Options& options, Label label) {
  Json values = Json::object();
  Json approx_values = Json::object();
  const auto dense = scores.scores.to_dense();
  report.header = {"item", "score"};
  if (options.approx) report.header.push_back("approx");
  for (std::uint64_t r = 0; r < dense.size(); ++r) {
    const auto name = label(r);
    values[name] = rational_to_json(dense[r]);
    std::vector<std::string> row{name, to_string(dense[r])};
    if (options.approx) {
      approx_values[name] = approx(dense[r]);
      row.push_back(approx(dense[r]));
    }
    report.rows.push_back(std::move(row));
  }
  result["scores"] = std::move(values);
  if (options.approx) {
    result["scores_approx"] = std::move(approx_values);
    result["approx_significant_digits"] = kApproxDigits;
  }
  Json winners = Json::array();
  for (auto r : scores.winners) winners.push_back(label(r));
  result["winners"] = std::move(winners);
  Json tiers = Json::array();
  for (const auto& tier : scores.tiers) {
    Json t = Json::array();
    for (auto r : tier) t.push_back(label(r));
    tiers.push_back(std::move(t));
  }
  result["tiers"] = std::move(tiers);
}

void add_vector_rows(Report& report, const std::string& name, const ModuleVector& f, const Options& options) {
  if (report.header.empty()) {
    report.header = {"component", "index", "label", "value"};
    if (options.approx) report.header.push_back("approx");
  }
  f.for_each_nonzero([&](std::uint64_t r, const Rational& v) {
    std::vector<std::string> row{name, std::to_string(r), ranking_label_of(f.shape(), r), to_string(v)};
    if (options.approx) row.push_back(approx(v));
    report.rows.push_back(std::move(row));
  });
}

Json vector_with_norm(const ModuleVector& f, const Options& options) {
  Json j = module_vector_to_json(f);
  const auto norm = inner_product(f, f);
  j["squared_norm"] = rational_to_json(norm);
  if (options.approx) j["squared_norm_approx"] = approx(norm);
  return j;
}

Json payoff_json(const Payoff& p) {
  Json j = Json::object();
  const auto dense = p.to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i) j[std::to_string(i + 1)] = rational_to_json(dense[i]);
  return j;
}

void add_payoff_rows(Report& report, const Payoff& p, const Options& options) {
  report.header = {"player", "payoff"};
  if (options.approx) report.header.push_back("approx");
  const auto dense = p.to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1), to_string(dense[i])};
    if (options.approx) row.push_back(approx(dense[i]));
    report.rows.push_back(std::move(row));
  }
}

Report make_report(const char* command, Json input) {
  Report report;
  report.doc["command"] = command;
  report.doc["input"] = std::move(input);
  return report;
}

// --- voting commands ---------------------------------------------------------

Report cmd_tally(const Options& o) {
  const auto f = load_ballots(o.ballots);
  const int n = f.n();
  const auto rows = static_cast<int>(f.shape().rows());
  std::vector<Rational> weights;
  if (!o.weights_preset.empty()) {
    weights = WeightingVector::preset(o.weights_preset, rows).weights();
  } else {
    weights = weights_from_json(load_json_file(o.weights));
  }
  if (weights.size() != static_cast<std::size_t>(rows)) {
    throw ShapeError("weights has " + std::to_string(weights.size()) + " entries, the ballots rank " +
                     std::to_string(rows) + " positions");
  }
  const auto w = WeightingVector::from_weights(weights, o.allow_unsorted);
  const auto scores = RankingScores::from_scores(f.shape().is_full_ranking() ? positional_map(w.as_vector(), f)
                                                                              : positional_map_rows(weights, f));
  auto report = make_report("tally", input_echo(f));
  report.doc["parameters"]["weights"] = rationals_to_json(weights);
  Json result;
  add_scores(report, result, scores, o, candidate_label);
  report.doc["result"] = std::move(result);
  (void)n;
  return report;
}

Report spectral_report(const char* command, const ModuleVector& f, const RankingScores& scores, Json parameters,
                       const Options& o) {
  auto report = make_report(command, input_echo(f));
  if (!parameters.is_null()) report.doc["parameters"] = std::move(parameters);
  Json result;
  const auto shape = f.shape();
  add_scores(report, result, scores, o, [&](std::uint64_t r) { return ranking_label_of(shape, r); });
  report.doc["result"] = std::move(result);
  return report;
}

Report cmd_kemeny(const Options& o) {
  const auto f = load_ballots(o.ballots);
  require_full(f, "kemeny");
  return spectral_report("kemeny", f, kemeny_apply(f), Json(), o);
}

Report cmd_family(const Options& o) {
  const auto f = load_ballots(o.ballots);
  require_full(f, "family");
  std::array<Rational, 3> gamma;
  Json parameters;
  for (int i = 0; i < 3; ++i) {
    const std::string field = "--gamma" + std::to_string(i);
    if (o.gamma[i].empty()) throw ParseError(field + ": required");
    try {
      gamma[static_cast<std::size_t>(i)] = parse_rational(o.gamma[i]);
    } catch (const ParseError& e) {
      throw ParseError(field + ": " + e.what());
    }
    parameters["gamma"].push_back(rational_to_json(gamma[static_cast<std::size_t>(i)]));
  }
  return spectral_report("family", f, family_apply(gamma, f), std::move(parameters), o);
}

Report cmd_decompose(const Options& o) {
  const auto f = load_ballots(o.ballots);
  require_full(f, "decompose");
  if (f.n() < 2) throw DomainError("decompose needs n >= 2");
  const auto projections = kemeny_eigenprojections(f.n());
  auto report = make_report("decompose", input_echo(f));
  Json result;
  auto residual = f;
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const auto part = projections[i].apply(f);
    const std::string name = "W" + std::to_string(i);
    result[name] = vector_with_norm(part, o);
    add_vector_rows(report, name, part, o);
    residual = residual - part;
  }
  result["residual"] = vector_with_norm(residual, o);
  add_vector_rows(report, "residual", residual, o);
  report.doc["result"] = std::move(result);
  return report;
}

Report cmd_construct_profile(const Options& o) {
  const auto j = load_json_file(o.input);
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array() || j["weights"].empty()) {
    throw ParseError("weights: expected a nonempty array of weighting vectors");
  }
  std::vector<ModuleVector> weights;
  int n = 0;
  for (std::size_t i = 0; i < j["weights"].size(); ++i) {
    auto w = rationals_from_json(j["weights"][i], "weights[" + std::to_string(i) + "]");
    if (i == 0) n = static_cast<int>(w.size());
    if (w.size() != static_cast<std::size_t>(n) || n < 2) {
      throw ShapeError("weights[" + std::to_string(i) + "] has " + std::to_string(w.size()) +
                       " entries, expected n = " + std::to_string(n) + " >= 2");
    }
    weights.push_back(hat(ModuleVector(Composition::candidates(n), std::move(w))));
  }
  std::vector<ModuleVector> targets;
  if (j.contains("targets")) {
    if (!j["targets"].is_array()) throw ParseError("targets: expected an array of vectors");
    for (std::size_t i = 0; i < j["targets"].size(); ++i) {
      auto t = rationals_from_json(j["targets"][i], "targets[" + std::to_string(i) + "]");
      if (t.size() != static_cast<std::size_t>(n)) {
        throw ShapeError("targets[" + std::to_string(i) + "] has " + std::to_string(t.size()) + " entries, expected " +
                         std::to_string(n));
      }
      targets.emplace_back(Composition::candidates(n), std::move(t));
    }
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      std::vector<Rational> t;
      for (int c = 0; c < n; ++c) {
        const int p = num(rng);
        const int q = den(rng);
        t.emplace_back(p, q);
        t.back().canonicalize();
      }
      targets.push_back(hat(ModuleVector(Composition::candidates(n), std::move(t))));
    }
  }
  const auto built = construct_profile(weights, targets);

  Json input;
  input["n"] = n;
  input["weighting_vectors"] = static_cast<int>(weights.size());
  auto report = make_report("construct-profile", std::move(input));
  Json parameters;
  for (const auto& w : weights) parameters["weights_hat"].push_back(rationals_to_json(w.to_dense()));
  for (const auto& t : targets) parameters["targets"].push_back(rationals_to_json(t.to_dense()));
  if (!j.contains("targets")) parameters["seed"] = o.seed;
  report.doc["parameters"] = std::move(parameters);

  Json result;
  result["solution_space_dimension"] = built.solution_space_dimension;
  result["profile"] = module_vector_to_json(built.solution);
  add_vector_rows(report, "profile", built.solution, o);
  if (o.as_integer_profile) {
    Integer bound;
    if (bound.set_str(o.shift_bound, 10) != 0 || bound < 0) {
      throw ParseError("--shift-bound: expected a nonnegative integer");
    }
    const auto integral = to_integer_profile(built.solution, bound);
    if (!integral) {
      throw DomainError("no nonnegative integer profile within shift bound " + o.shift_bound);
    }
    Json ip;
    ip["scale"] = integral->scale.get_str();
    ip["shift"] = integral->shift.get_str();
    ip["profile"] = module_vector_to_json(integral->profile);
    ip["voter_total"] = rational_to_json(integral->profile.sum());
    result["integer_profile"] = std::move(ip);
    add_vector_rows(report, "integer_profile", integral->profile, o);
  }
  Json tallies = Json::array();
  for (const auto& w : weights) tallies.push_back(rationals_to_json(positional_map(w, built.solution).to_dense()));
  result["tallies"] = std::move(tallies);
  report.doc["result"] = std::move(result);
  return report;
}

// --- game commands -----------------------------------------------------------

Report cmd_game_decompose(const Options& o) {
  const auto v = game_from_json(load_json_file(o.game));
  auto report = make_report("game-decompose", input_echo(v));
  Json levels = Json::array();
  for (const auto& level : decompose_game(v)) {
    Json l;
    l["k"] = level.k;
    l["u0"] = vector_with_norm(level.u0, o);
    l["u1"] = vector_with_norm(level.u1, o);
    l["kernel"] = vector_with_norm(level.kernel, o);
    levels.push_back(std::move(l));
    const auto k = std::to_string(level.k);
    add_vector_rows(report, "u0@k=" + k, level.u0, o);
    add_vector_rows(report, "u1@k=" + k, level.u1, o);
    add_vector_rows(report, "kernel@k=" + k, level.kernel, o);
  }
  report.doc["result"]["levels"] = std::move(levels);
  return report;
}

int concept_sources(const Options& o) {
  return !o.concept_name.empty() + !o.coeffs.empty() + !o.marginal.empty();
}

Report cmd_game_solve(const Options& o) {
  const auto v = game_from_json(load_json_file(o.game));
  if (concept_sources(o) != 1) throw ParseError("game-solve: give exactly one of --concept, --coeffs, --marginal");
  auto report = make_report("game-solve", input_echo(v));
  Payoff payoff(Composition::candidates(v.n()));
  if (!o.concept_name.empty()) {
    if (o.concept_name != "shapley") throw ParseError("--concept: unknown solution concept \"" + o.concept_name + "\"");
    report.doc["parameters"]["concept"] = o.concept_name;
    payoff = solution_apply(shapley_coefficients(v.n()), v);
  } else if (!o.coeffs.empty()) {
    const auto c = coefficients_from_json(load_json_file(o.coeffs));
    report.doc["parameters"]["coefficients"] = coefficients_to_json(c);
    payoff = solution_apply(c, v);
  } else {
    const auto m = marginal_from_json(load_json_file(o.marginal));
    report.doc["parameters"]["marginal"] = marginal_to_json(m);
    payoff = marginal_apply(m, v);
  }
  report.doc["result"]["payoffs"] = payoff_json(payoff);
  report.doc["result"]["payoff_total"] = rational_to_json(payoff.sum());
  add_payoff_rows(report, payoff, o);
  return report;
}

Report cmd_game_analyze(const Options& o) {
  if (concept_sources(o) != 1) throw ParseError("game-analyze: give exactly one of --concept, --coeffs, --marginal");
  SolutionCoefficients c;
  if (!o.concept_name.empty()) {
    if (o.concept_name != "shapley") throw ParseError("--concept: unknown solution concept \"" + o.concept_name + "\"");
    if (o.n < 2) throw ParseError("--n: required (n >= 2) with --concept");
    c = shapley_coefficients(o.n);
  } else if (!o.coeffs.empty()) {
    c = coefficients_from_json(load_json_file(o.coeffs));
  } else {
    c = marginal_to_coefficients(marginal_from_json(load_json_file(o.marginal)));
  }
  if (o.n != 0 && o.n != c.n()) {
    throw ShapeError("--n " + std::to_string(o.n) + " does not match coefficients for n = " + std::to_string(c.n()));
  }
  Json input;
  input["n"] = c.n();
  auto report = make_report("game-analyze", std::move(input));
  const bool efficient = efficiency_check(c);
  const auto fit = fit_marginal(c);
  const bool self_dual = self_dual_check(c);
  Json result;
  result["coefficients"] = coefficients_to_json(c);
  result["efficient"]["value"] = efficient;
  result["efficient"]["criterion"] = "c0^1 = ... = c0^(n-1) = 0 and c0^n = 1";
  result["marginal"]["value"] = fit.exact;
  result["marginal"]["m"] = rationals_to_json(fit.weights.m);
  result["marginal"]["fit"] = fit.exact ? "exact" : "least-squares";
  result["self_dual"]["value"] = self_dual;
  result["self_dual"]["criterion"] = "phi(*u_T) = phi(u_T) for every unanimity game u_T";
  report.doc["result"] = std::move(result);
  report.header = {"property", "value"};
  report.rows = {{"efficient", efficient ? "true" : "false"},
                 {"marginal", fit.exact ? "true" : "false"},
                 {"self_dual", self_dual ? "true" : "false"}};
  for (std::size_t k = 0; k < c.c0.size(); ++k) report.rows.push_back({"c0^" + std::to_string(k + 1), to_string(c.c0[k])});
  for (std::size_t k = 0; k < c.c1.size(); ++k) report.rows.push_back({"c1^" + std::to_string(k + 1), to_string(c.c1[k])});
  for (std::size_t k = 0; k < fit.weights.m.size(); ++k) {
    report.rows.push_back({"m_" + std::to_string(k + 1), to_string(fit.weights.m[k])});
  }
  return report;
}

// --- rendering ---------------------------------------------------------------

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
      out << "\n";
    };
    line(report.header);
    for (const auto& row : report.rows) line(row);
    return;
  }
  out << report.doc["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : report.doc["input"].items()) out << "  " << key << ": " << value.dump() << "\n";
  std::vector<std::size_t> widths(report.header.size(), 0);
  for (std::size_t i = 0; i < report.header.size(); ++i) widths[i] = report.header[i].size();
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(widths[i])) << cells[i];
    }
    out << "\n";
  };
  line(report.header);
  for (const auto& row : report.rows) line(row);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tallies, spectral decompositions and cooperative game analysis over tabloid modules",
               "tabloid"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output", o.output, "Write the report to this file instead of stdout");
  app.add_option("--seed", o.seed, "Seed for randomized inputs");
  app.add_flag("--approx", o.approx, "Add 12-significant-digit decimal approximations");

  auto* tally = app.add_subcommand("tally", "Positional tally of a ballot profile");
  tally->add_option("--ballots", o.ballots, "Ballot file (.json or .csv)")->required();
  auto* preset = tally->add_option("--weights-preset", o.weights_preset, "borda | plurality | antiplurality")
                     ->check(CLI::IsMember({"borda", "plurality", "antiplurality"}));
  auto* wfile = tally->add_option("--weights", o.weights, "Weighting vector file");
  preset->excludes(wfile);
  tally->add_flag("--allow-unsorted", o.allow_unsorted, "Accept weights that increase somewhere");

  auto* kemeny = app.add_subcommand("kemeny", "Kemeny scores of every ranking");
  kemeny->add_option("--ballots", o.ballots, "Ballot file (.json or .csv)")->required();

  auto* family = app.add_subcommand("family", "gamma0 T0 + gamma1 T1 + gamma2 T2 scores");
  family->add_option("--ballots", o.ballots, "Ballot file (.json or .csv)")->required();
  for (int i = 0; i < 3; ++i) {
    family->add_option("--gamma" + std::to_string(i), o.gamma[i], "Rational coefficient")->required();
  }

  auto* decompose = app.add_subcommand("decompose", "Split a profile into W0, W1, W2 and the rest");
  decompose->add_option("--ballots", o.ballots, "Ballot file (.json or .csv)")->required();

  auto* construct = app.add_subcommand("construct-profile", "Profile with prescribed positional tallies");
  construct->add_option("--input", o.input, "{\"weights\":[[...],...], \"targets\":[[...],...]}")->required();
  construct->add_flag("--as-integer-profile", o.as_integer_profile, "Also emit a nonnegative integer profile");
  construct->add_option("--shift-bound", o.shift_bound, "Largest allowed shift by the all-ones profile");

  auto* gdecompose = app.add_subcommand("game-decompose", "Per-level U0 / U1 / kernel split of a game");
  gdecompose->add_option("--game", o.game, "Game file")->required();

  auto* gsolve = app.add_subcommand("game-solve", "Payoffs of a linear symmetric solution concept");
  gsolve->add_option("--game", o.game, "Game file")->required();

  auto* ganalyze = app.add_subcommand("game-analyze", "Efficiency, marginality and self-duality verdicts");
  ganalyze->add_option("--n", o.n, "Player count (required with --concept)");

  for (auto* sub : {gsolve, ganalyze}) {
    sub->add_option("--concept", o.concept_name, "Named concept: shapley");
    sub->add_option("--coeffs", o.coeffs, "Coefficient file");
    sub->add_option("--marginal", o.marginal, "Marginal weight file");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (tally->parsed() && o.weights.empty() && o.weights_preset.empty()) {
      throw ParseError("tally: give --weights or --weights-preset");
    }
    Report report;
    if (tally->parsed()) report = cmd_tally(o);
    else if (kemeny->parsed()) report = cmd_kemeny(o);
    else if (family->parsed()) report = cmd_family(o);
    else if (decompose->parsed()) report = cmd_decompose(o);
    else if (construct->parsed()) report = cmd_construct_profile(o);
    else if (gdecompose->parsed()) report = cmd_game_decompose(o);
    else if (gsolve->parsed()) report = cmd_game_solve(o);
    else report = cmd_game_analyze(o);

    if (o.output.empty()) {
      render(report, o.format, out);
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw Error("cannot write " + o.output);
      render(report, o.format, file);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kExitShape;
  } catch (const DomainError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

}  // namespace tabloid
