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

#include "grapheq/quantum.h"

#include <algorithm>

#include "grapheq/error.h"
#include "grapheq/parallel.h"

namespace grapheq {
namespace {

BitVector unit(std::size_t size, int player) {
  BitVector out(size);
  out.set(static_cast<std::size_t>(player));
  return out;
}

void require_advice(const CompiledGame& game, const AdviceCorrelation& advice) {
  if (advice.laws.size() != game.questions.size()) {
    throw std::invalid_argument("advice correlation does not belong to this game");
  }
}

}  // namespace

const QuestionLaw& AdviceCorrelation::at(std::string_view id) const {
  for (const QuestionLaw& q : laws) {
    if (q.id == id) return q;
  }
  throw std::out_of_range("no question '" + std::string(id) + "'");
}

AdviceCorrelation advice_correlation(const CompiledGame& game) {
  AdviceCorrelation out;
  for (const CompiledQuestion& q : game.questions) {
    if (!q.generators) {
      throw Error(ErrorCode::kUnsupported,
                  "question '" + q.id + "' has no generator set; no quantum strategy is attached");
    }
    out.laws.push_back({q.id, q.type, outcome_law(game.graph, bases_from_type(q.type))});
  }
  return out;
}

AdviceCorrelation advice_correlation(const GameSpec& game) { return advice_correlation(compile(game)); }

PerfectWinReport verify_perfect_win(const CompiledGame& game, const AdviceCorrelation& advice) {
  require_advice(game, advice);
  PerfectWinReport report;
  report.all_win = true;
  for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
    const CompiledQuestion& q = game.questions[qi];
    const OutcomeLaw& law = advice.laws[qi].law;
    std::vector<std::pair<BitVector, bool>> conditions;
    for (const ParityCheck& c : q.checks) conditions.emplace_back(c.players, c.parity);
    QuestionWin entry{q.id, law.probability_of(conditions), law.rank()};
    if (entry.win_probability != 1) {
      report.all_win = false;
      if (!report.first_failure) report.first_failure = q.id;
    }
    report.questions.push_back(std::move(entry));
  }
  return report;
}

InvarianceReport verify_uniform_and_belief_invariant(const CompiledGame& game,
                                                     const AdviceCorrelation& advice) {
  require_advice(game, advice);
  InvarianceReport report;
  const int n = game.players();
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i) {
    const BitVector self = unit(static_cast<std::size_t>(n), i);
    std::optional<std::vector<Rational>> seen[2];
    for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
      const auto marginal = advice.laws[qi].law.marginal(self);
      const std::string where = "player " + std::to_string(i) + " on " + game.questions[qi].id;
      if (marginal[1] != half) {
        report.uniform = false;
        report.violations.push_back(where + ": P(a=1) = " + to_string(marginal[1]));
      }
      auto& reference = seen[game.questions[qi].type.get(static_cast<std::size_t>(i)) ? 1 : 0];
      if (!reference) {
        reference = marginal;
      } else if (*reference != marginal) {
        report.belief_invariant = false;
        report.violations.push_back(where + ": marginal depends on the other types");
      }
    }
  }
  return report;
}

QuantumThreshold quantum_threshold(const CompiledGame& game, const AdviceCorrelation& advice) {
  require_advice(game, advice);
  const int n = game.players();
  QuantumThreshold out;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    const BitVector self = unit(static_cast<std::size_t>(n), i);
    for (int t = 0; t < 2; ++t) {
      Rational with_type = 0;
      Rational with_advice = 0;
      Rational involved_advice = 0;
      for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
        const CompiledQuestion& q = game.questions[qi];
        if (static_cast<int>(q.type.get(static_cast<std::size_t>(i))) != t) continue;
        with_type += q.weight;
        const Rational p0 = q.weight * advice.laws[qi].law.marginal(self)[0];
        with_advice += p0;
        if (std::any_of(q.checks.begin(), q.checks.end(), [&](const ParityCheck& c) {
              return c.players.get(static_cast<std::size_t>(i));
            })) {
          involved_advice += p0;
        }
      }
      if (with_type == 0) continue;
      if (with_advice == 0) {
        throw Error(ErrorCode::kConditioningOnImpossibleType,
                    "player " + std::to_string(i) + " never receives advice 0 with type " +
                        std::to_string(t));
      }
      InvolvementEntry entry{i, t, p_involved(game, i, t), involved_advice / with_advice};
      if (entry.p_type != entry.p_type_advice0) out.advice_independent = false;
      if (first || entry.p_type_advice0 < out.p) out.p = entry.p_type_advice0;
      first = false;
      out.entries.push_back(std::move(entry));
    }
  }
  out.bound = 1 - out.p;
  out.condition = "v0/v1 >= " + to_string(out.bound);
  return out;
}

QuantumThreshold quantum_threshold(const GameSpec& game) {
  const CompiledGame compiled = compile(game);
  return quantum_threshold(compiled, advice_correlation(compiled));
}

std::string DeviationPolicy::to_string() const {
  // Answers for (t,a) = (0,0) (0,1) (1,0) (1,1).
  std::string out;
  for (int t = 0; t < 2; ++t) {
    for (int a = 0; a < 2; ++a) out += static_cast<char>('0' + answer(t, a));
  }
  return out;
}

Rational deviation_utility(const CompiledGame& game, const AdviceCorrelation& advice,
                           const PayoffParams& params, int player, DeviationPolicy policy) {
  require_advice(game, advice);
  const auto n = static_cast<std::size_t>(game.players());
  const auto i = static_cast<std::size_t>(player);
  const BitVector self = unit(n, player);
  Rational total = 0;
  for (std::size_t qi = 0; qi < game.questions.size(); ++qi) {
    const CompiledQuestion& q = game.questions[qi];
    const OutcomeLaw& law = advice.laws[qi].law;
    const int t = q.type.get(i) ? 1 : 0;
    for (int x = 0; x < 2; ++x) {
      const int y = policy.answer(t, x);
      std::vector<std::pair<BitVector, bool>> conditions{{self, x != 0}};
      const Rational p_advice = law.probability_of(conditions);
      if (p_advice == 0) continue;
      for (const ParityCheck& c : q.checks) {
        conditions.emplace_back(c.players, c.parity != (c.players.get(i) && x != y));
      }
      const Rational p_win = law.probability_of(conditions);
      const Rational& value = y ? params.v1 : params.v0;
      total += q.weight * value * (p_win - params.ng * (p_advice - p_win));
    }
  }
  return total;
}

QuantumNashResult is_quantum_nash(const CompiledGame& game, const AdviceCorrelation& advice,
                                  const QuantumThreshold& threshold, const PayoffParams& params,
                                  int threads) {
  params.validate();
  if (params.ng != 0) {
    throw Error(ErrorCode::kInvalidParams, "the quantum equilibrium test covers base games (ng = 0)");
  }
  const int n = game.players();
  QuantumNashResult out;
  out.threshold_method = threshold.holds_at(params);

  std::vector<Rational> honest(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    honest[static_cast<std::size_t>(i)] =
        deviation_utility(game, advice, params, i, DeviationPolicy::honest());
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * 16;
  std::vector<Rational> gain(pairs);
  parallel_chunks(pairs, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const int i = static_cast<int>(k / 16);
      const DeviationPolicy policy{static_cast<std::uint8_t>(k % 16)};
      gain[k] = deviation_utility(game, advice, params, i, policy) - honest[static_cast<std::size_t>(i)];
    }
  });
  std::uint64_t best = 0;
  for (std::uint64_t k = 1; k < pairs; ++k) {
    if (gain[k] > gain[best]) best = k;
  }
  out.exhaustive_method = gain[best] <= 0;
  if (!out.exhaustive_method) {
    out.witness = DeviationWitness{static_cast<int>(best / 16),
                                   DeviationPolicy{static_cast<std::uint8_t>(best % 16)}, gain[best]};
  }
  return out;
}

QuantumNashResult is_quantum_nash(const GameSpec& game, const PayoffParams& params) {
  const CompiledGame compiled = compile(game);
  const AdviceCorrelation advice = advice_correlation(compiled);
  return is_quantum_nash(compiled, advice, quantum_threshold(compiled, advice), params);
}

Rational qsw(const PayoffParams& params) { return (params.v0 + params.v1) / 2; }

std::vector<Rational> quantum_utilities(const CompiledGame& game, const AdviceCorrelation& advice,
                                        const PayoffParams& params) {
  std::vector<Rational> out;
  for (int i = 0; i < game.players(); ++i) {
    out.push_back(deviation_utility(game, advice, params, i, DeviationPolicy::honest()));
  }
  return out;
}

BitVector sample_answers(const OutcomeLaw& law, std::mt19937_64& rng) {
  const Gf2System& system = law.constraints();
  const std::size_t n = law.size();
  BitVector pivot_columns(n);
  for (std::size_t p : system.pivots()) pivot_columns.set(p);
  BitVector out(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot_columns.get(j) && coin(rng)) out.set(j);
  }
  // Rows are fully reduced: each pivot appears in exactly one row.
  for (std::size_t r = 0; r < system.rank(); ++r) {
    const std::size_t p = system.pivots()[r];
    BitVector rest = system.rows()[r];
    rest.set(p, false);
    out.set(p, (system.rhs()[r] != 0) != rest.dot(out));
  }
  return out;
}

}  // namespace grapheq
