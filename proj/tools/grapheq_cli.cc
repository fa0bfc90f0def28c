// Copyright 2026 The grapheq Authors
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

// grapheq command-line front end.
//
// Exit status: 0 success, 1 a check failed, 2 usage error, 3 invalid input.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "grapheq/acceptance.h"
#include "grapheq/amplification.h"
#include "grapheq/classical.h"
#include "grapheq/error.h"
#include "grapheq/quantum.h"
#include "grapheq/report.h"

namespace {

using namespace grapheq;

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string game = "NC00_C5";
  std::optional<std::string> v0;
  std::optional<std::string> v1;
  std::optional<std::string> ng;
  std::string format = "table";
  int k = 2;
  std::string eps = "1/100";
  int threads = 0;
  bool bruteforce = false;
  bool joint = false;
  bool strict = false;
};

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    const Rational value = parse_rational(text);
    if (value < 0) throw UsageError("--" + flag + " must be non-negative, got " + text);
    return value;
  } catch (const Error&) {
    throw UsageError("--" + flag + " is not a rational: " + text);
  }
}

PayoffParams resolve_params(const Options& o, const GameSpec& game) {
  PayoffParams p = game.payoffs;
  if (o.v0) p.v0 = flag_rational("v0", *o.v0);
  if (o.v1) p.v1 = flag_rational("v1", *o.v1);
  if (o.ng) p.ng = flag_rational("ng", *o.ng);
  if (p.v1 <= 0) throw UsageError("--v1 must be positive");
  p.validate();
  return p;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_equilibria(const Options& o, Criterion criterion) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  const CompiledGame game = compile(spec);
  EnumerationOptions options;
  options.criterion = criterion;
  options.strict = o.strict;
  options.threads = o.threads;
  const EquilibriumReport report = criterion == Criterion::kNash
                                       ? enumerate_nash(game, params, options)
                                       : enumerate_pareto(game, params, options);
  if (o.format == "json") {
    print_json(report_json(report, game));
  } else if (o.format == "csv") {
    std::cout << report_csv(report, game);
  } else {
    std::cout << report_table(report, game);
  }
  return 0;
}

int run_csw(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  const CompiledGame game = compile(spec);
  const CswResult csw = best_csw(game, params, Criterion::kNash, o.threads);
  nlohmann::json argmax = nlohmann::json::array();
  for (ProfileCode code : csw.argmax) argmax.push_back(profile_string(decode(code, game.players())));
  nlohmann::json j{{"game", spec.name},
                   {"params", params_json(params)},
                   {"csw", to_string(csw.social_welfare)},
                   {"cswDecimal", to_fixed(csw.social_welfare, 4)},
                   {"argmax", argmax}};
  if (spec.stabilizer_backed() && params.ng == 0) j["qsw"] = to_string(qsw(params));
  if (o.format == "json") {
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "game,csw,argmax\n";
    for (const auto& p : argmax) std::cout << spec.name << "," << to_string(csw.social_welfare) << "," << p.get<std::string>() << "\n";
  } else {
    std::cout << spec.name << " best pure Nash SW = " << to_string(csw.social_welfare) << " ("
              << to_fixed(csw.social_welfare, 4) << ") at " << argmax.size() << " profile(s)\n";
    for (const auto& p : argmax) std::cout << "  " << p.get<std::string>() << "\n";
    if (j.contains("qsw")) std::cout << "QSW = " << j["qsw"].get<std::string>() << "\n";
  }
  return 0;
}

int run_regimes(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const Rational ng = o.ng ? flag_rational("ng", *o.ng) : spec.payoffs.ng;
  const CompiledGame game = compile(spec);
  const RegimeAnalysis regimes = ratio_regimes(game, ng, o.threads);
  if (o.format == "table") {
    std::cout << regimes_table(regimes, game);
  } else {
    print_json(regimes_json(regimes, game));
  }
  return 0;
}

int run_quantum(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  const CompiledGame game = compile(spec);
  const QuantumSummary summary = quantum_summary(game, params);
  if (o.format == "table") {
    std::cout << quantum_table(summary, game);
  } else {
    print_json(quantum_json(summary, game));
  }
  return 0;
}

int run_corr_lp(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  const CompiledGame game = compile(spec);
  const Rational value = best_correlated_sw(game, params);
  const CswResult pure = best_csw(game, params, Criterion::kNash, o.threads);
  if (o.format == "table") {
    std::cout << spec.name << " best correlated SW = " << to_string(value) << " (" << to_fixed(value, 4)
              << "), best pure Nash SW = " << to_string(pure.social_welfare) << "\n";
  } else {
    print_json({{"game", spec.name},
                {"params", params_json(params)},
                {"correlatedSw", to_string(value)},
                {"pureNashSw", to_string(pure.social_welfare)}});
  }
  return 0;
}

int run_penalty(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  Options with_penalty = o;
  if (!with_penalty.ng) with_penalty.ng = "4";
  const PayoffParams params = resolve_params(with_penalty, spec);
  const CompiledGame game = compile(spec);
  const PenaltyReport rep = penalty_report(spec, params, o.threads);
  if (o.format == "json") {
    nlohmann::json j = report_json(rep.equilibria, game);
    j["qsw"] = to_string(rep.qsw);
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << report_csv(rep.equilibria, game);
  } else {
    std::cout << report_table(rep.equilibria, game) << "QSW = " << to_string(rep.qsw) << "\n";
  }
  return 0;
}

int run_kfold(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  if (o.k < 1) throw UsageError("--k must be at least 1");
  const KfoldSummary summary = kfold_summary(spec, o.k, params, o.bruteforce, o.threads);
  if (o.format == "table") {
    std::cout << kfold_table(summary);
  } else {
    print_json(kfold_json(summary));
  }
  return 0;
}

int run_players_needed(const Options& o) {
  const GameSpec spec = resolve_game(o.game);
  const PayoffParams params = resolve_params(o, spec);
  const Rational eps = flag_rational("eps", o.eps);
  const PlayersNeeded pn = players_needed(spec, params, eps);
  const nlohmann::json j = players_needed_json(pn, eps);
  if (o.format == "table") {
    std::cout << "eps = " << to_string(eps) << ": k = " << pn.k << " groups, " << pn.player_count
              << " players, CSW/QSW = " << std::scientific << std::setprecision(4)
              << to_double(pn.achieved_ratio) << std::defaultfloat << std::setprecision(6) << ", decay " << to_string(pn.decay_factor) << (pn.decay_verified ? " verified" : " NOT verified")
              << ", bound k <= 2 + " << pn.log_constant << "*ln(1/eps) " << (pn.within_bound ? "holds" : "fails")
              << "\n";
  } else {
    print_json(j);
  }
  return pn.decay_verified && pn.within_bound ? 0 : kExitCheck;
}

int run_verify(const Options& o, bool game_given) {
  if (!game_given) {
    bool all = true;
    run_acceptance(o.threads, [&](const CriterionResult& r) {
      std::cout << format_result(r) << std::flush;
      all = all && r.pass;
    });
    return all ? 0 : kExitCheck;
  }
  GameSpec spec;
  if (std::filesystem::exists(o.game)) {
    spec = load_game_file(o.game, false);
  } else {
    spec = resolve_game(o.game);
  }
  for (const GameCheck& c : verify_game(spec)) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    if (!c.pass) {
      std::cout << "first failing check: " << c.name << "\n";
      return kExitCheck;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-state conflict-of-interest games: exact classical and quantum analysis"};
  app.require_subcommand(1, 1);
  Options o;
  bool game_given = false;

  auto common = [&](CLI::App* sub, bool payoffs) {
    sub->add_option("--game", o.game, "builtin name or game JSON file")
        ->each([&](const std::string&) { game_given = true; });
    if (payoffs) {
      sub->add_option("--v0", o.v0, "payoff for a winning 0 answer (p/q)");
      sub->add_option("--v1", o.v1, "payoff for a winning 1 answer (p/q)");
      sub->add_option("--ng", o.ng, "penalty factor for wrong answers (p/q)");
    }
    sub->add_option("--format", o.format)->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--threads", o.threads, "worker cap (default GRAPHEQ_THREADS or all cores)");
  };
  auto* nash = app.add_subcommand("nash", "pure Nash equilibria");
  common(nash, true);
  nash->add_flag("--strict", o.strict, "equal-utility deviations break equilibrium");
  auto* pareto = app.add_subcommand("pareto", "Pareto equilibria");
  common(pareto, true);
  pareto->add_flag("--joint", o.joint, "use joint Pareto dominance instead of unilateral deviations");
  auto* csw = app.add_subcommand("csw", "best classical social welfare");
  common(csw, true);
  auto* regimes = app.add_subcommand("regimes", "Nash sets as v0/v1 ranges over [0, 1]");
  common(regimes, false);
  regimes->add_option("--ng", o.ng, "penalty factor (p/q)");
  auto* quantum = app.add_subcommand("quantum", "graph-state strategy and its equilibrium threshold");
  common(quantum, true);
  auto* corr = app.add_subcommand("corr-lp", "best correlated-equilibrium social welfare");
  common(corr, true);
  auto* penalty = app.add_subcommand("penalty", "Nash equilibria with a penalty (default ng 4)");
  common(penalty, true);
  auto* kf = app.add_subcommand("kfold", "k-fold parallel repetition");
  common(kf, true);
  kf->add_option("--k", o.k, "number of groups");
  kf->add_flag("--bruteforce", o.bruteforce, "enumerate the expanded product game directly");
  auto* pn = app.add_subcommand("players-needed", "groups needed for CSW/QSW <= eps");
  common(pn, true);
  pn->add_option("--eps", o.eps, "target ratio in (0, 1]");
  auto* verify = app.add_subcommand("verify", "acceptance suite, or checks on one game with --game");
  common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (nash->parsed()) return run_equilibria(o, Criterion::kNash);
    if (pareto->parsed()) return run_equilibria(o, o.joint ? Criterion::kParetoJoint : Criterion::kPareto);
    if (csw->parsed()) return run_csw(o);
    if (regimes->parsed()) return run_regimes(o);
    if (quantum->parsed()) return run_quantum(o);
    if (corr->parsed()) return run_corr_lp(o);
    if (penalty->parsed()) return run_penalty(o);
    if (kf->parsed()) return run_kfold(o);
    if (pn->parsed()) return run_players_needed(o);
    if (verify->parsed()) return run_verify(o, game_given);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::kEmptyEquilibriumSet ? kExitCheck : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
