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

#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "grapheq/error.h"
#include "grapheq/game.h"
#include "grapheq/rational.h"

namespace grapheq {
namespace {

using nlohmann::json;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kUnsupported;
}

json nc00() { return save_game(builtin_game("NC00_C5")); }

TEST(Game, BuiltinsValidateAndRoundTrip) {
  for (const std::string& name : builtin_names()) {
    const GameSpec game = builtin_game(name);
    EXPECT_NO_THROW(game.validate()) << name;
    EXPECT_TRUE(game.stabilizer_backed());
    EXPECT_EQ(game.players(), 5);
    EXPECT_EQ(load_game(save_game(game)), game) << name;
  }
}

TEST(Game, FixtureFilesEqualBuiltins) {
  for (const std::string name : {"NC00_C5", "NC01_C5"}) {
    EXPECT_EQ(load_game_file(std::string(GRAPHEQ_TEST_DATA) + "/" + name + ".json"), builtin_game(name));
  }
}

TEST(Game, Nc00Structure) {
  const GameSpec g = builtin_game("NC00_C5");
  ASSERT_EQ(g.questions.size(), 6u);
  EXPECT_EQ(g.questions[0].type.to_string(), "11111");
  EXPECT_EQ(g.questions[0].parity, 1);
  EXPECT_EQ(g.questions[1].involved.to_string(), "11001");
  EXPECT_EQ(g.questions[1].parity, 0);
  for (const QuestionSpec& q : g.questions) EXPECT_EQ(q.weight, Rational(1, 6));
  EXPECT_EQ(g.payoffs, (PayoffParams{Rational(2, 3), Rational(1), Rational(0)}));
}

TEST(Game, InvolvementDerivedFromGenerators) {
  json doc = nc00();
  for (auto& q : doc["questions"]) {
    q.erase("I");
    q.erase("b");
  }
  EXPECT_EQ(load_game(doc), builtin_game("NC00_C5"));
}

TEST(Game, ErrorCodes) {
  EXPECT_EQ(code_of([] { builtin_game("nope"); }), ErrorCode::kUnknownGame);
  EXPECT_EQ(code_of([] { resolve_game("/no/such/file.json"); }), ErrorCode::kUnknownGame);
  EXPECT_EQ(code_of([] { load_game(json::array()); }), ErrorCode::kMalformedDocument);
  EXPECT_EQ(code_of([] { load_game_file("/no/such/file.json"); }), ErrorCode::kMalformedDocument);
  {
    json doc = nc00();
    doc["questions"][0]["t"] = "1111";
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kTypeLength);
  }
  {
    json doc = nc00();
    doc["questions"][0]["w"] = "1/5";
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kWeightSum);
  }
  {
    json doc = nc00();
    doc["questions"][1]["K"] = {0, 1};  // an edge: both ends have odd degree
    doc["questions"][1].erase("I");
    doc["questions"][1].erase("b");
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kInvalidGenerator);
  }
  {
    json doc = nc00();
    doc["questions"][1]["b"] = 1;
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kInvolvementMismatch);
  }
  {
    json doc = nc00();
    doc["questions"][1]["t"] = "00000";  // K={0} needs X on player 0
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kInvalidGenerator);
  }
  {
    json doc = nc00();
    doc["edges"].push_back({2, 2});
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kInvalidGraph);
  }
  {
    json doc = nc00();
    doc["payoffs"]["v0"] = "3/2";
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kInvalidParams);
  }
  {
    json doc = nc00();
    doc["payoffs"]["v0"] = "two";
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kMalformedRational);
  }
  {
    json doc = nc00();
    doc["questions"][2]["id"] = "T0";
    EXPECT_EQ(code_of([&] { load_game(doc); }), ErrorCode::kMalformedDocument);
  }
}

TEST(Game, UncheckedLoadKeepsBrokenQuestions) {
  json doc = nc00();
  doc["questions"][1]["b"] = 1;
  const GameSpec g = load_game(doc, false);
  EXPECT_EQ(g.questions[1].parity, 1);
  EXPECT_THROW(g.validate(), Error);
}

TEST(Game, CompileAndInvolvement) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  ASSERT_EQ(g.questions.size(), 6u);
  EXPECT_EQ(g.questions[0].checks.size(), 1u);
  // Player 0 has type 1 in Ta and T0 and is involved in both.
  EXPECT_EQ(p_involved(g, 0, 1), 1);
  // Type 0 for player 0 occurs in T1..T4; it is involved in T1 and T4.
  EXPECT_EQ(p_involved(g, 0, 0), Rational(1, 2));
  EXPECT_EQ(p_involved(builtin_game("NC00_C5"), 0, 0), Rational(1, 2));
}

Rational type_one_probability(const GameSpec& g, int player) {
  Rational p = 0;
  for (const QuestionSpec& q : g.questions) {
    if (q.type.get(static_cast<std::size_t>(player))) p += q.weight;
  }
  return p;
}

TEST(Builtins, DerivedQuestionsMatchExactly) {
  for (const std::string& name : builtin_names()) {
    const GameSpec g = builtin_game(name);
    for (const QuestionSpec& q : g.questions) {
      const QuestionDerivation d = derive_question(g.graph, *q.generators);
      EXPECT_TRUE(d.valid) << name << " " << q.id;
      EXPECT_EQ(d.involved, q.involved) << name << " " << q.id;
      EXPECT_EQ(d.parity, q.parity) << name << " " << q.id;
    }
  }
}

TEST(Builtins, CyclicRelabelingPreservesQuestions) {
  auto rotate = [](const BitVector& v) {
    BitVector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out.set((j + 1) % v.size(), v.get(j));
    return out;
  };
  for (const std::string& name : builtin_names()) {
    const GameSpec g = builtin_game(name);
    std::multiset<std::tuple<std::string, std::string, int, std::string>> original;
    std::multiset<std::tuple<std::string, std::string, int, std::string>> rotated;
    for (const QuestionSpec& q : g.questions) {
      original.emplace(q.type.to_string(), q.involved.to_string(), q.parity, to_string(q.weight));
      rotated.emplace(rotate(q.type).to_string(), rotate(q.involved).to_string(), q.parity, to_string(q.weight));
    }
    EXPECT_EQ(original, rotated) << name;
  }
}

TEST(Builtins, Nc01TypesAreBalanced) {
  const GameSpec g = builtin_game("NC01_C5");
  for (int j = 0; j < 5; ++j) EXPECT_EQ(type_one_probability(g, j), Rational(1, 2));
}

TEST(Builtins, Nc00010Involvement) {
  const GameSpec g = builtin_game("NC00010_C5");
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(p_involved(g, j, 0), Rational(8, 13));
    EXPECT_GT(p_involved(g, j, 1), Rational(8, 13));
  }
}

// The shipped weights give unequal type probabilities. Within the same
// question family, weights with w(Ta) = 3 w(T_i) + w(T_ib) do equalise them.
TEST(Builtins, Nc000TypeMarginals) {
  const GameSpec g = builtin_game("NC000_C5");
  for (int j = 0; j < 5; ++j) EXPECT_EQ(type_one_probability(g, j), Rational(6, 13));
  nlohmann::json doc = save_game(g);
  for (auto& q : doc["questions"]) q["w"] = q["id"] == "Ta" ? "4/14" : "1/14";
  const GameSpec balanced = load_game(doc);
  for (int j = 0; j < 5; ++j) EXPECT_EQ(type_one_probability(balanced, j), Rational(1, 2));
}

TEST(Params, Validation) {
  EXPECT_NO_THROW((PayoffParams{Rational(0), Rational(1), Rational(0)}.validate()));
  EXPECT_NO_THROW((PayoffParams{Rational(1), Rational(1), Rational(100)}.validate()));
  EXPECT_THROW((PayoffParams{Rational(1), Rational(0), Rational(0)}.validate()), Error);
  EXPECT_THROW((PayoffParams{Rational(1, 2), Rational(1), Rational(-1)}.validate()), Error);
}

}  // namespace
}  // namespace grapheq
