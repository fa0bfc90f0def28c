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

// The quantum side of a stabilizer-backed game. Each player holds one qubit
// of the graph state and measures X when its type bit is 1, Z otherwise; the
// answer is the measurement outcome. All quantities below are computed from
// the exact outcome laws.

#ifndef GRAPHEQ_QUANTUM_H_
#define GRAPHEQ_QUANTUM_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grapheq/game.h"
#include "grapheq/rational.h"
#include "grapheq/stabilizer.h"

namespace grapheq {

struct QuestionLaw {
  std::string id;
  BitVector type;
  OutcomeLaw law;
};

struct AdviceCorrelation {
  std::vector<QuestionLaw> laws;  // same order as the game's questions

  const QuestionLaw& at(std::string_view id) const;
};

// Throws Error(kUnsupported) when some question has no generator set.
AdviceCorrelation advice_correlation(const CompiledGame& game);
AdviceCorrelation advice_correlation(const GameSpec& game);

struct QuestionWin {
  std::string id;
  Rational win_probability;
  std::size_t law_rank = 0;
};

struct PerfectWinReport {
  std::vector<QuestionWin> questions;
  // Each player's payoff is v_a for its own answer a with certainty.
  bool all_win = false;
  std::optional<std::string> first_failure;
};

PerfectWinReport verify_perfect_win(const CompiledGame& game, const AdviceCorrelation& advice);

struct InvarianceReport {
  bool uniform = true;
  bool belief_invariant = true;
  std::vector<std::string> violations;

  bool ok() const { return uniform && belief_invariant; }
};

// (a) every single-player advice marginal is uniform; (b) for each player the
// marginal only depends on its own type bit.
InvarianceReport verify_uniform_and_belief_invariant(const CompiledGame& game,
                                                     const AdviceCorrelation& advice);

struct InvolvementEntry {
  int player = 0;
  int type_bit = 0;
  Rational p_type;          // P(involved | t_i)
  Rational p_type_advice0;  // P(involved | t_i, a_i = 0)
};

struct QuantumThreshold {
  Rational p;
  Rational bound;  // 1 - p; equilibrium iff v0/v1 >= bound
  std::string condition;
  std::vector<InvolvementEntry> entries;
  // Conditioning on advice 0 never changes the involvement probability.
  bool advice_independent = true;

  bool holds_at(const PayoffParams& params) const { return params.v0 >= bound * params.v1; }
};

// Minimum over the (player, type) pairs that occur. Propagates
// Error(kConditioningOnImpossibleType) from the involvement computation.
QuantumThreshold quantum_threshold(const CompiledGame& game, const AdviceCorrelation& advice);
QuantumThreshold quantum_threshold(const GameSpec& game);

// answer = bit (2*type + advice) of `table`; 16 policies per player.
struct DeviationPolicy {
  std::uint8_t table = 0;

  int answer(int type_bit, int advice) const { return (table >> (2 * type_bit + advice)) & 1; }
  static DeviationPolicy honest() { return {0b1010}; }
  std::string to_string() const;
};

// Exact expected utility of `player` when it post-processes (type, advice)
// through `policy` and everyone else answers the advice. Losing pays 0
// unless params.ng > 0.
Rational deviation_utility(const CompiledGame& game, const AdviceCorrelation& advice,
                           const PayoffParams& params, int player, DeviationPolicy policy);

struct DeviationWitness {
  int player = 0;
  DeviationPolicy policy;
  Rational gain;
};

struct QuantumNashResult {
  bool threshold_method = false;
  bool exhaustive_method = false;
  std::optional<DeviationWitness> witness;  // best deviation when not Nash

  bool agree() const { return threshold_method == exhaustive_method; }
};

// Base games only (ng = 0).
QuantumNashResult is_quantum_nash(const CompiledGame& game, const AdviceCorrelation& advice,
                                  const QuantumThreshold& threshold, const PayoffParams& params,
                                  int threads = 0);
QuantumNashResult is_quantum_nash(const GameSpec& game, const PayoffParams& params);

Rational qsw(const PayoffParams& params);

// Per-player expected utility under honest play, computed from the laws.
std::vector<Rational> quantum_utilities(const CompiledGame& game, const AdviceCorrelation& advice,
                                        const PayoffParams& params);

// One uniformly random support vector; for demonstrations only.
BitVector sample_answers(const OutcomeLaw& law, std::mt19937_64& rng);

}  // namespace grapheq

#endif  // GRAPHEQ_QUANTUM_H_
