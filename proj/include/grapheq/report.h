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

// Rendering of analysis results as JSON, CSV and plain-text tables. JSON and
// CSV carry exact rationals as "p/q" strings; tables scale utilities by 6 and
// social welfare by 6n (30 for five players) and say so in their header.

#ifndef GRAPHEQ_REPORT_H_
#define GRAPHEQ_REPORT_H_

#include <optional>
#include <string>

#include "grapheq/amplification.h"
#include "grapheq/classical.h"
#include "grapheq/quantum.h"
#include "json.hpp"

namespace grapheq {

nlohmann::json params_json(const PayoffParams& params);

// "2v0+3v1" with zero terms dropped.
std::string compact_expression(const LinearPayoff& payoff, const Rational& scale);

nlohmann::json report_json(const EquilibriumReport& report, const CompiledGame& game);
std::string report_csv(const EquilibriumReport& report, const CompiledGame& game);
// One row per orbit representative.
std::string report_table(const EquilibriumReport& report, const CompiledGame& game);

nlohmann::json regimes_json(const RegimeAnalysis& regimes, const CompiledGame& game);
std::string regimes_table(const RegimeAnalysis& regimes, const CompiledGame& game);

struct QuantumSummary {
  std::string game;
  PayoffParams params;
  AdviceCorrelation advice;
  PerfectWinReport win;
  InvarianceReport invariance;
  QuantumThreshold threshold;
  std::vector<Rational> utilities;
  std::optional<QuantumNashResult> nash;  // only for ng = 0
};

QuantumSummary quantum_summary(const CompiledGame& game, const PayoffParams& params);
nlohmann::json quantum_json(const QuantumSummary& summary, const CompiledGame& game);
std::string quantum_table(const QuantumSummary& summary, const CompiledGame& game);

struct KfoldSummary {
  int k = 1;
  std::string method;  // "decomposition" or "bruteforce"
  Rational csw;
  Rational qsw;
  Rational decay_factor;
  Rational base_csw;
  std::vector<std::string> groups;  // maximiser per group, when known
};

KfoldSummary kfold_summary(const GameSpec& base, int k, const PayoffParams& params,
                           bool bruteforce, int threads = 0);
nlohmann::json kfold_json(const KfoldSummary& summary);
std::string kfold_table(const KfoldSummary& summary);

nlohmann::json players_needed_json(const PlayersNeeded& result, const Rational& eps);

}  // namespace grapheq

#endif  // GRAPHEQ_REPORT_H_
