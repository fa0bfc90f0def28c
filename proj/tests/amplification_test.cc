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

#include <cmath>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "grapheq/amplification.h"
#include "grapheq/error.h"

namespace grapheq {
namespace {

PayoffParams ratio(const Rational& r, const Rational& ng = 0) { return {r, Rational(1), ng}; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kUnsupported;
}

TEST(Penalty, Nc01HasTwoEquilibria) {
  const GameSpec g = builtin_game("NC01_C5");
  for (const Rational& ng : {Rational(301, 100), Rational(4), Rational(10)}) {
    const PenaltyReport rep = penalty_report(g, ratio(Rational(1, 2), ng));
    ASSERT_EQ(rep.equilibria.profiles.size(), 2u);
    EXPECT_EQ(profile_string(rep.equilibria.profiles[0].profile), "00000");
    EXPECT_EQ(profile_string(rep.equilibria.profiles[1].profile), "33333");
    EXPECT_EQ(rep.qsw, Rational(3, 4));
  }
  EXPECT_EQ(code_of([&] { penalty_report(g, ratio(Rational(1, 2))); }), ErrorCode::kInvalidParams);
}

TEST(Penalty, WelfareFallsLinearlyWhileQswStays) {
  const GameSpec g = builtin_game("NC01_C5");
  const Rational v0(2, 3);
  std::optional<Rational> previous;
  for (const Rational& ng : {Rational(301, 100), Rational(7, 2), Rational(4), Rational(10), Rational(100)}) {
    const PayoffParams p = ratio(v0, ng);
    const Rational csw = best_csw(g, p).social_welfare;
    EXPECT_EQ(csw, (-ng * v0 + 2 * v0 + 3) / 6);
    if (previous) EXPECT_LT(csw, *previous);
    previous = csw;
    EXPECT_EQ(penalty_report(g, p).qsw, Rational(5, 6));
  }
}

TEST(Kfold, ProductStructure) {
  const ProductGameSpec p = kfold(builtin_game("NC00_C5"), 2);
  EXPECT_EQ(p.players(), 10);
  EXPECT_EQ(p.base_players(), 5);
  EXPECT_EQ(p.group_of(7), 1);
  ASSERT_EQ(p.game.questions.size(), 36u);
  for (const CompiledQuestion& q : p.game.questions) {
    EXPECT_EQ(q.weight, Rational(1, 36));
    EXPECT_EQ(q.checks.size(), 2u);
  }
  EXPECT_EQ(p.game.questions[1].id, "(Ta,T0)");
  EXPECT_TRUE(verify_perfect_win(p.game, advice_correlation(p.game)).all_win);
  EXPECT_EQ(code_of([] { kfold(builtin_game("NC00_C5"), 10); }), ErrorCode::kSizeLimit);
}

TEST(Kfold, CswFactorisation) {
  const GameSpec base = builtin_game("NC00_C5");
  const PayoffParams p = ratio(Rational(2, 3));
  const GroupTable table = group_table(base, p);
  ASSERT_EQ(table.rows.size(), 1024u);
  EXPECT_EQ(kfold_best_csw(table, 1).csw, best_csw(base, p).social_welfare);
  const KfoldCsw k2 = kfold_best_csw(table, 2);
  EXPECT_EQ(k2.csw, Rational(23, 36));
  EXPECT_EQ(k2.groups.size(), 2u);
  EXPECT_EQ(kfold_best_csw(table, 3).csw, Rational(115, 216));
  for (int k = 1; k <= 4; ++k) {
    const KfoldCsw pruned = kfold_best_csw(table, k);
    const KfoldCsw full = kfold_best_csw(table, k, KfoldCswOptions{false});
    EXPECT_EQ(pruned.csw, full.csw);
    EXPECT_TRUE(full.zero_factor_evaluated);
  }
  EXPECT_EQ(code_of([&] { group_table(base, ratio(Rational(2, 3), 1)); }), ErrorCode::kUnsupported);
}

// u_j(P) = u_j(own group profile) * p_win(other group profile).
TEST(Kfold, FactorisationIdentity) {
  const GameSpec base = builtin_game("NC00_C5");
  const CompiledGame bg = compile(base);
  const ProductGameSpec product = kfold(base, 2);
  const PayoffParams p = ratio(Rational(2, 3));
  std::mt19937_64 rng(9);
  auto check = [&](ProfileCode first, ProfileCode second) {
    Profile joint = decode(first, 5);
    const Profile tail = decode(second, 5);
    joint.insert(joint.end(), tail.begin(), tail.end());
    const Evaluation direct = evaluate(product.game, joint);
    const Evaluation a = evaluate(bg, decode(first, 5));
    const Evaluation b = evaluate(bg, decode(second, 5));
    for (int j = 0; j < 5; ++j) {
      ASSERT_EQ(direct.payoffs[static_cast<std::size_t>(j)].at(p), a.payoffs[static_cast<std::size_t>(j)].at(p) * b.p_win);
      ASSERT_EQ(direct.payoffs[static_cast<std::size_t>(j + 5)].at(p), b.payoffs[static_cast<std::size_t>(j)].at(p) * a.p_win);
    }
    ASSERT_EQ(direct.p_win, a.p_win * b.p_win);
  };
  for (int i = 0; i < 1000; ++i) check(rng() % 1024, rng() % 1024);
  const ProfileCode fixed = encode(parse_profile("11122"));
  for (ProfileCode c = 0; c < 1024; ++c) check(fixed, c);
}

TEST(Kfold, QuantumWinSurvivesRepetition) {
  for (const std::string& name : builtin_names()) {
    for (int k = 1; k <= (name == "NC00_C5" ? 4 : 2); ++k) {
      const ProductGameSpec product = kfold(builtin_game(name), k);
      const AdviceCorrelation adv = advice_correlation(product.game);
      EXPECT_TRUE(verify_perfect_win(product.game, adv).all_win) << name << " k=" << k;
    }
  }
}

TEST(Kfold, DecompositionMatchesBruteForce) {
  for (const std::string name : {"NC00_C5", "NC01_C5"}) {
    const GameSpec base = builtin_game(name);
    const PayoffParams p = ratio(Rational(2, 3));
    const GroupTable table = group_table(base, p);
    const BruteForceResult brute = kfold_bruteforce(base, 2, p);
    EXPECT_EQ(kfold_nash_decomposition(table, 2), brute.nash) << name;
    EXPECT_EQ(kfold_best_csw(table, 2).csw, brute.csw.social_welfare) << name;
  }
  EXPECT_EQ(code_of([] { kfold_bruteforce(builtin_game("NC00_C5"), 3, ratio(Rational(2, 3))); }),
            ErrorCode::kSizeLimit);
}

TEST(Kfold, PlayersNeeded) {
  const GameSpec base = builtin_game("NC00_C5");
  const PayoffParams p = ratio(Rational(2, 3));
  const std::vector<std::pair<Rational, int>> expected{
      {Rational(1), 1}, {Rational(23, 25), 1}, {Rational(1, 10), 14}, {Rational(1, 100), 26},
      {Rational(1, 1000), 39}, {Rational(1, 1000000), 77}};
  for (const auto& [eps, k] : expected) {
    const PlayersNeeded pn = players_needed(base, p, eps);
    EXPECT_EQ(pn.k, k) << to_string(eps);
    EXPECT_EQ(pn.player_count, 5 * k);
    EXPECT_LE(pn.achieved_ratio, eps);
    EXPECT_EQ(pn.decay_factor, Rational(5, 6));
    EXPECT_TRUE(pn.decay_verified);
    EXPECT_TRUE(pn.within_bound);
    // Minimality: one group fewer misses the target.
    if (k > 1) EXPECT_GT(pn.base_ratio * pow(pn.decay_factor, static_cast<unsigned>(k - 2)), eps);
  }
  EXPECT_NEAR(players_needed(base, p, Rational(1, 2)).log_constant, 1 / std::log(6.0 / 5.0), 1e-12);
  EXPECT_EQ(code_of([&] { players_needed(base, p, Rational(0)); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([&] { players_needed(base, p, Rational(2)); }), ErrorCode::kInvalidParams);
}

TEST(LinearFit, ExactAndNoisyLines) {
  const LinearFit exact = linear_fit({0, 1, 2, 3}, {1, 3, 5, 7});
  EXPECT_NEAR(exact.slope, 2, 1e-12);
  EXPECT_NEAR(exact.intercept, 1, 1e-12);
  EXPECT_NEAR(exact.r_squared, 1, 1e-12);
  const LinearFit noisy = linear_fit({0, 1, 2, 3}, {0, 1, 0, 1});
  EXPECT_LT(noisy.r_squared, 0.5);
  EXPECT_THROW(linear_fit({1}, {1}), std::invalid_argument);
}

}  // namespace
}  // namespace grapheq
