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

// Separation amplifiers: a penalty for wrong answers and k-fold parallel
// repetition where k groups play copies of the base game and are paid only
// when every group wins.

#ifndef GRAPHEQ_AMPLIFICATION_H_
#define GRAPHEQ_AMPLIFICATION_H_

#include <cstdint>
#include <vector>

#include "grapheq/classical.h"
#include "grapheq/game.h"
#include "grapheq/quantum.h"

namespace grapheq {

struct PenaltyReport {
  EquilibriumReport equilibria;
  Rational qsw;  // the quantum strategy never loses, so no penalty applies
};

// Requires params.ng > 0.
PenaltyReport penalty_report(const GameSpec& game, const PayoffParams& params, int threads = 0);

// Product game. Player j belongs to group j / base_players. Joint types are
// k-tuples of base questions with product weights (an assumption: groups
// receive independent questions); the joint question is won when every
// group's parity check holds.
struct ProductGameSpec {
  GameSpec base;
  int k = 1;
  CompiledGame game;

  int base_players() const { return base.players(); }
  int players() const { return game.players(); }
  int group_of(int player) const { return player / base_players(); }
};

ProductGameSpec kfold(const GameSpec& base, int k);

// Per base profile, at fixed parameters with ng = 0.
struct GroupRow {
  ProfileCode code = 0;
  Rational welfare_sum;  // sum of the group's utilities
  Rational p_win;
  bool nash = false;
};

struct GroupTable {
  int players = 0;
  PayoffParams params;
  std::vector<GroupRow> rows;  // indexed by code
};

GroupTable group_table(const GameSpec& base, const PayoffParams& params, int threads = 0);

struct KfoldCswOptions {
  // Zero-factor configurations (a group that never wins frees the others)
  // are skipped when an upper bound shows they cannot win. Disabling the
  // pruning evaluates them explicitly.
  bool prune_zero_factor = true;
};

struct KfoldCsw {
  int k = 1;
  Rational csw;
  std::vector<ProfileCode> groups;  // maximiser, one base profile per group
  Rational zero_factor_bound;        // best SW reachable with a zero factor
  bool zero_factor_evaluated = false;
};

// Uses u_j(P) = u_j(p_g) * prod_{h != g} p_win(p_h). Base games only (ng = 0).
KfoldCsw kfold_best_csw(const GroupTable& table, int k, KfoldCswOptions options = {});
KfoldCsw kfold_best_csw(const GameSpec& base, int k, const PayoffParams& params,
                        KfoldCswOptions options = {});

// Every Nash product profile (codes of the k*n player game, group 0 most
// significant) according to the factorisation rule; k*n <= 10.
std::vector<ProfileCode> kfold_nash_decomposition(const GroupTable& table, int k);

struct BruteForceResult {
  CswResult csw;
  std::vector<ProfileCode> nash;
};

// Direct enumeration on the expanded product game; Error(kSizeLimit) beyond
// 10 players.
BruteForceResult kfold_bruteforce(const GameSpec& base, int k, const PayoffParams& params,
                                  int threads = 0);

struct PlayersNeeded {
  int k = 1;
  int player_count = 0;
  Rational achieved_ratio;  // kfold CSW / QSW at this k
  Rational base_ratio;
  Rational decay_factor;    // CSW(k+1)/CSW(k), verified constant
  bool decay_verified = false;
  double log_constant = 0;  // C in k <= 2 + C*ln(1/eps), C = 1/ln(1/decay)
  bool within_bound = false;
};

// Smallest k with CSW(k)/QSW <= eps, for 0 < eps <= 1.
PlayersNeeded players_needed(const GameSpec& base, const PayoffParams& params, const Rational& eps);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace grapheq

#endif  // GRAPHEQ_AMPLIFICATION_H_
