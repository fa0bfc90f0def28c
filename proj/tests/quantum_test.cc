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

#include <random>

#include <gtest/gtest.h>

#include "grapheq/error.h"
#include "grapheq/quantum.h"

namespace grapheq {
namespace {

PayoffParams ratio(const Rational& r, const Rational& ng = 0) { return {r, Rational(1), ng}; }

// Deviation utility by summing over the explicit support of every law.
Rational oracle_deviation(const CompiledGame& g, const AdviceCorrelation& adv, const PayoffParams& p,
                          int player, DeviationPolicy policy) {
  const auto i = static_cast<std::size_t>(player);
  Rational total = 0;
  for (std::size_t qi = 0; qi < g.questions.size(); ++qi) {
    const CompiledQuestion& q = g.questions[qi];
    const auto support = adv.laws[qi].law.support();
    const Rational each = Rational(1) / static_cast<long>(support.size());
    for (BitVector answers : support) {
      const int y = policy.answer(q.type.get(i) ? 1 : 0, answers.get(i) ? 1 : 0);
      answers.set(i, y != 0);
      bool win = true;
      for (const ParityCheck& c : q.checks) win = win && answers.dot(c.players) == c.parity;
      const Rational& v = y ? p.v1 : p.v0;
      total += q.weight * each * (win ? v : -p.ng * v);
    }
  }
  return total;
}

TEST(Quantum, LawsComeFromTheGraphState) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const AdviceCorrelation adv = advice_correlation(g);
  ASSERT_EQ(adv.laws.size(), 6u);
  EXPECT_EQ(adv.at("Ta").law.rank(), 1u);
  EXPECT_EQ(adv.at("T0").law.rank(), 1u);
  EXPECT_EQ(adv.at("T0").law.support().size(), 16u);
  EXPECT_THROW(adv.at("missing"), std::out_of_range);
}

TEST(Quantum, PerfectWinAndInvarianceOnBuiltins) {
  for (const std::string& name : builtin_names()) {
    const CompiledGame g = compile(builtin_game(name));
    const AdviceCorrelation adv = advice_correlation(g);
    const PerfectWinReport win = verify_perfect_win(g, adv);
    EXPECT_TRUE(win.all_win) << name;
    for (const QuestionWin& q : win.questions) EXPECT_EQ(q.win_probability, 1);
    EXPECT_TRUE(verify_uniform_and_belief_invariant(g, adv).ok()) << name;
    for (const Rational& r : {Rational(0), Rational(1, 3), Rational(1)}) {
      for (const Rational& u : quantum_utilities(g, adv, ratio(r))) EXPECT_EQ(u, qsw(ratio(r)));
    }
  }
}

TEST(Quantum, Thresholds) {
  EXPECT_EQ(quantum_threshold(builtin_game("NC00_C5")).p, Rational(1, 2));
  EXPECT_EQ(quantum_threshold(builtin_game("NC01_C5")).p, Rational(2, 3));
  EXPECT_EQ(quantum_threshold(builtin_game("NC000_C5")).p, Rational(4, 7));
  EXPECT_EQ(quantum_threshold(builtin_game("NC00010_C5")).p, Rational(8, 13));
  const QuantumThreshold t = quantum_threshold(builtin_game("NC01_C5"));
  EXPECT_EQ(t.bound, Rational(1, 3));
  EXPECT_EQ(t.condition, "v0/v1 >= 1/3");
  EXPECT_TRUE(t.advice_independent);
  EXPECT_TRUE(t.holds_at(ratio(Rational(1, 3))));
  EXPECT_FALSE(t.holds_at(ratio(Rational(1, 4))));
}

TEST(Quantum, DeviationUtilityMatchesSupportSum) {
  for (const std::string name : {"NC00_C5", "NC01_C5", "NC00010_C5"}) {
    const CompiledGame g = compile(builtin_game(name));
    const AdviceCorrelation adv = advice_correlation(g);
    for (const PayoffParams& p : {ratio(Rational(2, 5)), ratio(Rational(1, 3), 4)}) {
      for (int j = 0; j < 5; ++j) {
        for (std::uint8_t table = 0; table < 16; ++table) {
          EXPECT_EQ(deviation_utility(g, adv, p, j, {table}), oracle_deviation(g, adv, p, j, {table}))
              << name << " player " << j << " policy " << DeviationPolicy{table}.to_string();
        }
        EXPECT_EQ(deviation_utility(g, adv, p, j, DeviationPolicy::honest()), quantum_utilities(g, adv, p)[j]);
      }
    }
  }
}

TEST(Quantum, HonestPolicyEncoding) {
  EXPECT_EQ(DeviationPolicy::honest().to_string(), "0101");
  for (int t = 0; t < 2; ++t) {
    for (int a = 0; a < 2; ++a) EXPECT_EQ(DeviationPolicy::honest().answer(t, a), a);
  }
}

TEST(Quantum, NashMethodsAgreeAndWitness) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const AdviceCorrelation adv = advice_correlation(g);
  const QuantumThreshold t = quantum_threshold(g, adv);
  const QuantumNashResult below = is_quantum_nash(g, adv, t, ratio(Rational(1, 3)));
  EXPECT_FALSE(below.threshold_method);
  EXPECT_FALSE(below.exhaustive_method);
  ASSERT_TRUE(below.witness);
  EXPECT_EQ(below.witness->player, 0);
  EXPECT_EQ(below.witness->policy.to_string(), "1101");
  EXPECT_EQ(below.witness->gain, Rational(1, 18));
  const QuantumNashResult at = is_quantum_nash(g, adv, t, ratio(Rational(1, 2)));
  EXPECT_TRUE(at.threshold_method);
  EXPECT_TRUE(at.agree());
  EXPECT_FALSE(at.witness);
  for (int i = 0; i <= 20; ++i) {
    EXPECT_TRUE(is_quantum_nash(builtin_game("NC01_C5"), ratio(Rational(i, 20))).agree());
  }
}

TEST(Quantum, ErrorPaths) {
  EXPECT_THROW(is_quantum_nash(builtin_game("NC00_C5"), ratio(Rational(1, 2), 1)), Error);
  nlohmann::json doc = save_game(builtin_game("NC00_C5"));
  doc["questions"][1].erase("K");
  const GameSpec no_k = load_game(doc);
  EXPECT_FALSE(no_k.stabilizer_backed());
  try {
    advice_correlation(no_k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(Quantum, SamplesStayInTheSupportAndLookUniform) {
  const Graph c5 = Graph::cycle(5);
  const OutcomeLaw law = outcome_law(c5, bases_from_type(BitVector::from_string("10000")));
  std::mt19937_64 rng(1);
  std::map<std::string, int> counts;
  const int draws = 8000;
  for (int i = 0; i < draws; ++i) {
    const BitVector a = sample_answers(law, rng);
    ASSERT_TRUE(law.contains(a));
    ++counts[a.to_string()];
  }
  ASSERT_EQ(counts.size(), law.support().size());
  const double expected = static_cast<double>(draws) / static_cast<double>(counts.size());
  for (const auto& [bits, c] : counts) EXPECT_NEAR(c, expected, 5 * std::sqrt(expected)) << bits;
}

}  // namespace
}  // namespace grapheq
