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

// Python bindings. Results cross the boundary as JSON text with exact
// rationals as "p/q" strings; the grapheq package turns them into Fractions.

#include <filesystem>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grapheq/acceptance.h"
#include "grapheq/amplification.h"
#include "grapheq/classical.h"
#include "grapheq/error.h"
#include "grapheq/quantum.h"
#include "grapheq/report.h"

namespace py = pybind11;
using namespace grapheq;

namespace {

// A builtin name, a file path, or an inline JSON document.
GameSpec game_from(const std::string& selector) {
  if (!selector.empty() && selector.front() == '{') return load_game(nlohmann::json::parse(selector));
  return resolve_game(selector);
}

PayoffParams params_from(const GameSpec& game, const std::optional<std::string>& v0,
                         const std::optional<std::string>& v1, const std::optional<std::string>& ng) {
  PayoffParams p = game.payoffs;
  if (v0) p.v0 = parse_rational(*v0);
  if (v1) p.v1 = parse_rational(*v1);
  if (ng) p.ng = parse_rational(*ng);
  p.validate();
  return p;
}

std::string equilibria(const std::string& selector, Criterion criterion, const std::optional<std::string>& v0,
                       const std::optional<std::string>& v1, const std::optional<std::string>& ng, int threads) {
  const GameSpec spec = game_from(selector);
  const CompiledGame game = compile(spec);
  EnumerationOptions options;
  options.criterion = criterion;
  options.threads = threads;
  const PayoffParams p = params_from(spec, v0, v1, ng);
  py::gil_scoped_release release;
  const EquilibriumReport report =
      criterion == Criterion::kNash ? enumerate_nash(game, p, options) : enumerate_pareto(game, p, options);
  return report_json(report, game).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact classical and quantum analysis of graph-state games";
  py::register_exception<Error>(m, "GraphEqError", PyExc_ValueError);

  const auto game = py::arg("game") = "NC00_C5";
  const auto v0 = py::arg("v0") = py::none();
  const auto v1 = py::arg("v1") = py::none();
  const auto ng = py::arg("ng") = py::none();
  const auto threads = py::arg("threads") = 0;

  m.def("builtin_names", &builtin_names);
  m.def("game_json", [](const std::string& selector) { return save_game(game_from(selector)).dump(); },
        py::arg("game"));
  m.def("nash", [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
                   std::optional<std::string> c, int t) { return equilibria(g, Criterion::kNash, a, b, c, t); },
        game, v0, v1, ng, threads);
  m.def("pareto",
        [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
           std::optional<std::string> c, int t, bool joint) {
          return equilibria(g, joint ? Criterion::kParetoJoint : Criterion::kPareto, a, b, c, t);
        },
        game, v0, v1, ng, threads, py::arg("joint") = false);
  m.def("best_csw",
        [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
           std::optional<std::string> c, int t) {
          const GameSpec spec = game_from(g);
          const CswResult r = best_csw(spec, params_from(spec, a, b, c), Criterion::kNash, t);
          std::vector<std::string> argmax;
          for (ProfileCode code : r.argmax) argmax.push_back(profile_string(decode(code, spec.players())));
          return py::make_tuple(to_string(r.social_welfare), argmax);
        },
        game, v0, v1, ng, threads);
  m.def("regimes",
        [](const std::string& g, std::optional<std::string> c, int t) {
          const GameSpec spec = game_from(g);
          const CompiledGame cg = compile(spec);
          return regimes_json(ratio_regimes(cg, c ? parse_rational(*c) : Rational(0), t), cg).dump();
        },
        game, ng, threads);
  m.def("quantum",
        [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
           std::optional<std::string> c) {
          const GameSpec spec = game_from(g);
          const CompiledGame cg = compile(spec);
          return quantum_json(quantum_summary(cg, params_from(spec, a, b, c)), cg).dump();
        },
        game, v0, v1, ng);
  m.def("correlated_sw",
        [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
           std::optional<std::string> c) {
          const GameSpec spec = game_from(g);
          return to_string(best_correlated_sw(spec, params_from(spec, a, b, c)));
        },
        game, v0, v1, ng);
  m.def("penalty",
        [](const std::string& g, std::optional<std::string> a, std::optional<std::string> b,
           std::optional<std::string> c, int t) {
          const GameSpec spec = game_from(g);
          const PenaltyReport r = penalty_report(spec, params_from(spec, a, b, c ? c : "4"), t);
          nlohmann::json j = report_json(r.equilibria, compile(spec));
          j["qsw"] = to_string(r.qsw);
          return j.dump();
        },
        game, v0, v1, ng, threads);
  m.def("kfold",
        [](const std::string& g, int k, std::optional<std::string> a, std::optional<std::string> b,
           bool bruteforce, int t) {
          const GameSpec spec = game_from(g);
          return kfold_json(kfold_summary(spec, k, params_from(spec, a, b, std::nullopt), bruteforce, t)).dump();
        },
        game, py::arg("k") = 2, v0, v1, py::arg("bruteforce") = false, threads);
  m.def("players_needed",
        [](const std::string& g, const std::string& eps, std::optional<std::string> a, std::optional<std::string> b) {
          const GameSpec spec = game_from(g);
          const Rational e = parse_rational(eps);
          return players_needed_json(players_needed(spec, params_from(spec, a, b, std::nullopt), e), e).dump();
        },
        game, py::arg("eps") = "1/100", v0, v1);
  m.def("verify_game",
        [](const std::string& g) {
          const GameSpec spec = !g.empty() && g.front() == '{' ? load_game(nlohmann::json::parse(g), false)
                                                               : std::filesystem::exists(g) ? load_game_file(g, false)
                                                                                            : resolve_game(g);
          std::vector<py::tuple> out;
          for (const GameCheck& c : verify_game(spec)) out.push_back(py::make_tuple(c.name, c.pass, c.detail));
          return out;
        },
        py::arg("game"));
  m.def("outcome_support",
        [](int n, std::vector<std::pair<int, int>> edges, const std::string& type) {
          const OutcomeLaw law = outcome_law(Graph(n, std::move(edges)), bases_from_type(BitVector::from_string(type)));
          std::vector<std::string> out;
          for (const BitVector& a : law.support()) out.push_back(a.to_string());
          return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("type"));
}
