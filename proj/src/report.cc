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

#include "grapheq/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "grapheq/error.h"

namespace grapheq {
namespace {

using nlohmann::json;

const Rational kUtilityScale(6);

Rational welfare_scale(int players) { return Rational(6 * players); }

std::string term(const Rational& coefficient, const char* symbol) {
  if (coefficient == 1) return symbol;
  return to_string(coefficient) + symbol;
}

std::string linear_form(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) return "0";
  std::string out;
  if (a != 0) out = term(a, "v0");
  if (b != 0) {
    if (!out.empty()) out += b < 0 ? "-" : "+";
    else if (b < 0) out += "-";
    out += term(abs(b), "v1");
  }
  return out;
}

json linear_json(const LinearPayoff& p) {
  return {{"win", {{"v0", to_string(p.win_v0)}, {"v1", to_string(p.win_v1)}}},
          {"lose", {{"v0", to_string(p.lose_v0)}, {"v1", to_string(p.lose_v1)}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Left-aligned columns separated by two spaces.
std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], width[c]) + "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string fixed(const Rational& value) { return to_fixed(value, 4); }

}  // namespace

json params_json(const PayoffParams& params) {
  return {{"v0", to_string(params.v0)}, {"v1", to_string(params.v1)}, {"ng", to_string(params.ng)}};
}

std::string compact_expression(const LinearPayoff& payoff, const Rational& scale) {
  std::string out = linear_form(payoff.win_v0 * scale, payoff.win_v1 * scale);
  if (payoff.lose_v0 != 0 || payoff.lose_v1 != 0) {
    out += "-ng(" + linear_form(payoff.lose_v0 * scale, payoff.lose_v1 * scale) + ")";
  }
  return out;
}

json report_json(const EquilibriumReport& report, const CompiledGame& game) {
  const int n = game.players();
  json profiles = json::array();
  for (const EquilibriumEntry& e : report.profiles) {
    json utilities = json::array();
    json linear = json::array();
    for (const LinearPayoff& p : e.payoffs) {
      utilities.push_back(to_string(p.at(report.params)));
      linear.push_back(linear_json(p));
    }
    profiles.push_back({{"profile", profile_string(e.profile)},
                        {"utilities", utilities},
                        {"utilitiesLinear", linear},
                        {"sw", to_string(e.social_welfare)},
                        {"pWin", to_string(e.p_win)},
                        {"orbitId", e.orbit}});
  }
  json orbits = json::array();
  for (std::size_t o = 0; o < report.orbits.size(); ++o) {
    orbits.push_back({{"id", o},
                      {"representative", profile_string(decode(report.orbits[o].representative, n))},
                      {"size", report.orbits[o].members.size()}});
  }
  return {{"game", game.name},
          {"players", n},
          {"criterion", std::string(criterion_name(report.criterion))},
          {"params", params_json(report.params)},
          {"count", report.profiles.size()},
          {"orbitCount", report.orbits.size()},
          {"groupOrder", report.group_order},
          {"graphClasses", report.graph_classes},
          {"profiles", profiles},
          {"orbits", orbits}};
}

std::string report_csv(const EquilibriumReport& report, const CompiledGame& game) {
  const int n = game.players();
  const Rational sw_scale = welfare_scale(n);
  std::ostringstream out;
  for (int j = 0; j < n; ++j) out << "f" << j << ",";
  for (int j = 0; j < n; ++j) out << "u" << j << ",";
  out << "sw,pWin,";
  for (int j = 0; j < n; ++j) out << "u" << j << "_x6,";
  out << "SW_x" << to_string(sw_scale) << ",orbitId\n";
  for (const EquilibriumEntry& e : report.profiles) {
    for (LocalFn f : e.profile) out << static_cast<int>(f) << ",";
    for (const LinearPayoff& p : e.payoffs) out << to_string(p.at(report.params)) << ",";
    out << to_string(e.social_welfare) << "," << to_string(e.p_win) << ",";
    for (const LinearPayoff& p : e.payoffs) out << csv_field(compact_expression(p, kUtilityScale)) << ",";
    // SW = total / n, so SW * 6n = 6 * total.
    out << csv_field(compact_expression(e.total, sw_scale / n)) << "," << e.orbit << "\n";
  }
  return out.str();
}

std::string report_table(const EquilibriumReport& report, const CompiledGame& game) {
  const int n = game.players();
  const Rational sw_scale = welfare_scale(n);
  std::ostringstream head;
  head << "# " << game.name << "  " << criterion_name(report.criterion) << "  v0=" << to_string(report.params.v0)
       << " v1=" << to_string(report.params.v1);
  if (report.params.ng != 0) head << " ng=" << to_string(report.params.ng);
  head << "\n# " << report.profiles.size() << " profiles, " << report.orbits.size()
       << " orbits (symmetry group order " << report.group_order << "), " << report.graph_classes
       << " classes under graph automorphisms\n";
  head << "# utilities x6, SW x" << to_string(sw_scale) << "; one row per orbit\n";

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"profile"};
  for (int j = 0; j < n; ++j) header.push_back("u" + std::to_string(j));
  for (const char* h : {"SW", "SW value", "orbit", "size"}) header.emplace_back(h);
  rows.push_back(header);
  for (std::size_t o = 0; o < report.orbits.size(); ++o) {
    const ProfileCode rep = report.orbits[o].representative;
    const auto it = std::find_if(report.profiles.begin(), report.profiles.end(),
                                 [&](const EquilibriumEntry& e) { return e.code == rep; });
    if (it == report.profiles.end()) continue;
    std::vector<std::string> row{profile_string(it->profile)};
    // The penalty part is only shown when a penalty is in force.
    auto shown = [&](LinearPayoff p) {
      if (report.params.ng == 0) p.lose_v0 = p.lose_v1 = 0;
      return p;
    };
    for (const LinearPayoff& p : it->payoffs) row.push_back(compact_expression(shown(p), kUtilityScale));
    row.push_back(compact_expression(shown(it->total), sw_scale / n));
    row.push_back(fixed(it->social_welfare));
    row.push_back(std::to_string(o));
    row.push_back(std::to_string(report.orbits[o].members.size()));
    rows.push_back(std::move(row));
  }
  return head.str() + render(rows);
}

json regimes_json(const RegimeAnalysis& regimes, const CompiledGame& game) {
  const int n = game.players();
  const SymmetryGroup group = n <= 8 ? game_automorphisms(game) : trivial_group(n);
  json breakpoints = json::array();
  for (const Rational& b : regimes.breakpoints) breakpoints.push_back(to_string(b));
  auto entry = [&](const RegimeEntry& e) {
    json codes = json::array();
    for (ProfileCode c : e.codes) codes.push_back(profile_string(decode(c, n)));
    return json{{"range", e.interval.to_string()},
                {"count", e.codes.size()},
                {"orbits", orbit_partition(e.codes, group, n).size()},
                {"profiles", codes}};
  };
  json intervals = json::array();
  for (const RegimeEntry& e : regimes.intervals) intervals.push_back(entry(e));
  json points = json::array();
  for (const RegimeEntry& e : regimes.points) {
    json p = entry(e);
    p["unionOfNeighbours"] = e.union_of_neighbours;
    points.push_back(p);
  }
  return {{"game", game.name}, {"breakpoints", breakpoints}, {"intervals", intervals}, {"points", points}};
}

std::string regimes_table(const RegimeAnalysis& regimes, const CompiledGame& game) {
  const int n = game.players();
  const SymmetryGroup group = n <= 8 ? game_automorphisms(game) : trivial_group(n);
  std::ostringstream out;
  out << "# " << game.name << "  Nash sets as a function of r = v0/v1\n# breakpoints:";
  for (const Rational& b : regimes.breakpoints) out << " " << to_string(b);
  out << "\n";
  std::vector<std::vector<std::string>> rows{{"r", "count", "orbits", "note"}};
  for (std::size_t i = 0; i < regimes.points.size(); ++i) {
    const RegimeEntry& p = regimes.points[i];
    std::string note;
    if (i > 0 && i + 1 < regimes.points.size()) {
      note = p.union_of_neighbours ? "union of neighbours" : "differs from union of neighbours";
    }
    rows.push_back({p.interval.to_string(), std::to_string(p.codes.size()),
                    std::to_string(orbit_partition(p.codes, group, n).size()), note});
    if (i < regimes.intervals.size()) {
      const RegimeEntry& e = regimes.intervals[i];
      rows.push_back({e.interval.to_string(), std::to_string(e.codes.size()),
                      std::to_string(orbit_partition(e.codes, group, n).size()), ""});
    }
  }
  return out.str() + render(rows);
}

QuantumSummary quantum_summary(const CompiledGame& game, const PayoffParams& params) {
  params.validate();
  QuantumSummary s;
  s.game = game.name;
  s.params = params;
  s.advice = advice_correlation(game);
  s.win = verify_perfect_win(game, s.advice);
  s.invariance = verify_uniform_and_belief_invariant(game, s.advice);
  s.threshold = quantum_threshold(game, s.advice);
  s.utilities = quantum_utilities(game, s.advice, params);
  if (params.ng == 0) s.nash = is_quantum_nash(game, s.advice, s.threshold, params);
  return s;
}

json quantum_json(const QuantumSummary& s, const CompiledGame& game) {
  const int n = game.players();
  json questions = json::array();
  for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
    const OutcomeLaw& law = s.advice.laws[qi].law;
    json marginals = json::array();
    for (int j = 0; j < n; ++j) {
      BitVector self(static_cast<std::size_t>(n));
      self.set(static_cast<std::size_t>(j));
      marginals.push_back(to_string(law.marginal(self)[1]));
    }
    questions.push_back({{"id", game.questions[qi].id},
                         {"type", game.questions[qi].type.to_string()},
                         {"rank", law.rank()},
                         {"winProbability", to_string(s.win.questions[qi].win_probability)},
                         {"marginals", marginals}});
  }
  json utilities = json::array();
  for (const Rational& u : s.utilities) utilities.push_back(to_string(u));
  json out{{"game", s.game},
           {"params", params_json(s.params)},
           {"questions", questions},
           {"perfectWin", s.win.all_win},
           {"uniformMarginals", s.invariance.uniform},
           {"beliefInvariant", s.invariance.belief_invariant},
           {"violations", s.invariance.violations},
           {"p", to_string(s.threshold.p)},
           {"bound", "v0/v1 >= " + to_string(s.threshold.bound)},
           {"threshold",
            {{"p", to_string(s.threshold.p)},
             {"bound", to_string(s.threshold.bound)},
             {"condition", s.threshold.condition},
             {"adviceIndependent", s.threshold.advice_independent},
             {"holdsAt",
              {{"v0", to_string(s.params.v0)},
               {"v1", to_string(s.params.v1)},
               {"holds", s.threshold.holds_at(s.params)}}}}},
           {"qsw", to_string(qsw(s.params))},
           {"utilities", utilities}};
  if (s.win.first_failure) out["firstFailure"] = *s.win.first_failure;
  if (s.nash) {
    json nash{{"thresholdMethod", s.nash->threshold_method},
              {"exhaustiveMethod", s.nash->exhaustive_method},
              {"agree", s.nash->agree()}};
    if (s.nash->witness) {
      nash["witness"] = {{"player", s.nash->witness->player},
                         {"policy", s.nash->witness->policy.to_string()},
                         {"gain", to_string(s.nash->witness->gain)}};
    }
    out["isNash"] = nash;
  }
  return out;
}

std::string quantum_table(const QuantumSummary& s, const CompiledGame& game) {
  std::ostringstream out;
  out << "# " << s.game << "  quantum advice from the graph state\n";
  std::vector<std::vector<std::string>> rows{{"question", "type", "rank", "P(win)"}};
  for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
    rows.push_back({game.questions[qi].id, game.questions[qi].type.to_string(),
                    std::to_string(s.win.questions[qi].law_rank),
                    to_string(s.win.questions[qi].win_probability)});
  }
  out << render(rows);
  out << "perfect win:        " << (s.win.all_win ? "yes" : "no") << "\n";
  out << "uniform marginals:  " << (s.invariance.uniform ? "yes" : "no") << "\n";
  out << "belief invariant:   " << (s.invariance.belief_invariant ? "yes" : "no") << "\n";
  out << "p = " << to_string(s.threshold.p) << ", equilibrium iff " << s.threshold.condition << "\n";
  out << "QSW = " << to_string(qsw(s.params)) << " (" << fixed(qsw(s.params)) << ")\n";
  if (s.nash) {
    out << "quantum Nash at v0/v1 = " << to_string(Rational(s.params.v0 / s.params.v1)) << ": "
        << (s.nash->exhaustive_method ? "yes" : "no")
        << (s.nash->agree() ? "" : "  (threshold and exhaustive methods DISAGREE)") << "\n";
    if (s.nash->witness) {
      out << "best deviation: player " << s.nash->witness->player << " policy "
          << s.nash->witness->policy.to_string() << " gains " << to_string(s.nash->witness->gain) << "\n";
    }
  }
  return out.str();
}

KfoldSummary kfold_summary(const GameSpec& base, int k, const PayoffParams& params,
                           bool bruteforce, int threads) {
  const GroupTable table = group_table(base, params, threads);
  KfoldSummary s;
  s.k = k;
  s.qsw = qsw(params);
  s.base_csw = kfold_best_csw(table, 1).csw;
  const int n = base.players();
  if (bruteforce) {
    s.method = "bruteforce";
    const BruteForceResult r = kfold_bruteforce(base, k, params, threads);
    s.csw = r.csw.social_welfare;
    const std::string joint = profile_string(decode(r.csw.argmax.front(), n * k));
    for (int g = 0; g < k; ++g) s.groups.push_back(joint.substr(static_cast<std::size_t>(g * n), static_cast<std::size_t>(n)));
  } else {
    s.method = "decomposition";
    const KfoldCsw r = kfold_best_csw(table, k);
    s.csw = r.csw;
    for (ProfileCode c : r.groups) s.groups.push_back(profile_string(decode(c, n)));
  }
  s.decay_factor = kfold_best_csw(table, 2).csw / s.base_csw;
  return s;
}

json kfold_json(const KfoldSummary& s) {
  const Rational alternative = pow(s.decay_factor, static_cast<unsigned>(s.k)) * s.base_csw;
  return {{"k", s.k},
          {"csw", to_string(s.csw)},
          {"qsw", to_string(s.qsw)},
          {"ratio", to_string(Rational(s.csw / s.qsw))},
          {"decayFactor", to_string(s.decay_factor)},
          {"method", s.method},
          {"groups", s.groups},
          {"measuredFormula", "decay^(k-1) * csw(1)"},
          {"exponentK", {{"formula", "decay^k * csw(1)"},
                         {"value", to_string(alternative)},
                         {"consistent", alternative == s.csw}}}};
}

std::string kfold_table(const KfoldSummary& s) {
  std::ostringstream out;
  const Rational alternative = pow(s.decay_factor, static_cast<unsigned>(s.k)) * s.base_csw;
  out << "k = " << s.k << " (" << s.method << ")\n";
  out << "CSW   = " << to_string(s.csw) << " (" << fixed(s.csw) << ")\n";
  out << "QSW   = " << to_string(s.qsw) << " (" << fixed(s.qsw) << ")\n";
  out << "ratio = " << to_string(Rational(s.csw / s.qsw)) << " (" << fixed(Rational(s.csw / s.qsw)) << ")\n";
  out << "decay per extra group = " << to_string(s.decay_factor) << "\n";
  out << "decay^k * CSW(1) = " << to_string(alternative)
      << (alternative == s.csw ? " (matches)" : " (does not match; the exponent is k-1)") << "\n";
  if (!s.groups.empty()) {
    out << "best profile per group:";
    for (const std::string& g : s.groups) out << " " << g;
    out << "\n";
  }
  return out.str();
}

json players_needed_json(const PlayersNeeded& r, const Rational& eps) {
  return {{"eps", to_string(eps)},
          {"k", r.k},
          {"playerCount", r.player_count},
          {"achievedRatio", to_string(r.achieved_ratio)},
          {"achievedRatioDecimal", to_double(r.achieved_ratio)},
          {"baseRatio", to_string(r.base_ratio)},
          {"decayFactor", to_string(r.decay_factor)},
          {"decayVerified", r.decay_verified},
          {"logConstant", r.log_constant},
          {"withinBound", r.within_bound}};
}

}  // namespace grapheq
