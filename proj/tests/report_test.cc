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

#include <sstream>

#include <gtest/gtest.h>

#include "grapheq/report.h"

namespace grapheq {
namespace {

PayoffParams ratio(const Rational& r, const Rational& ng = 0) { return {r, Rational(1), ng}; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Report, CompactExpression) {
  LinearPayoff p;
  p.win_v0 = Rational(2, 3);
  p.win_v1 = Rational(1, 6);
  EXPECT_EQ(compact_expression(p, 6), "4v0+v1");
  p.lose_v1 = Rational(1, 2);
  EXPECT_EQ(compact_expression(p, 6), "4v0+v1-ng(3v1)");
  EXPECT_EQ(compact_expression(LinearPayoff{}, 6), "0");
}

TEST(Report, NashCsvShape) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const EquilibriumReport rep = enumerate_nash(g, ratio(Rational(2, 3)));
  const auto rows = lines(report_csv(rep, g));
  ASSERT_EQ(rows.size(), 41u);
  EXPECT_EQ(rows[0], "f0,f1,f2,f3,f4,u0,u1,u2,u3,u4,sw,pWin,u0_x6,u1_x6,u2_x6,u3_x6,u4_x6,SW_x30,orbitId");
  std::set<std::string> orbit_ids;
  for (std::size_t i = 1; i < rows.size(); ++i) orbit_ids.insert(rows[i].substr(rows[i].rfind(',') + 1));
  EXPECT_EQ(orbit_ids.size(), 6u);
}

TEST(Report, JsonFieldsAndExactValues) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const EquilibriumReport rep = enumerate_nash(g, ratio(Rational(2, 3)));
  const nlohmann::json j = report_json(rep, g);
  EXPECT_EQ(j["count"], 40);
  EXPECT_EQ(j["orbitCount"], 6);
  EXPECT_EQ(j["groupOrder"], 10);
  EXPECT_EQ(j["graphClasses"], 6);
  EXPECT_EQ(j["params"]["v0"], "2/3");
  ASSERT_EQ(j["profiles"].size(), 40u);
  for (const auto& p : j["profiles"]) {
    const Profile f = parse_profile(p["profile"].get<std::string>());
    const Evaluation ev = evaluate(g, f);
    EXPECT_EQ(parse_rational(p["sw"].get<std::string>()), ev.total().at(ratio(Rational(2, 3))) / 5);
    EXPECT_EQ(parse_rational(p["pWin"].get<std::string>()), ev.p_win);
  }
  // Rendering is deterministic.
  EXPECT_EQ(j.dump(), report_json(enumerate_nash(g, ratio(Rational(2, 3))), g).dump());
}

TEST(Report, TableMentionsScaling) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const std::string t = report_table(enumerate_nash(g, ratio(Rational(1, 4))), g);
  EXPECT_NE(t.find("utilities x6, SW x30"), std::string::npos);
  EXPECT_NE(t.find("20 profiles, 4 orbits"), std::string::npos);
  EXPECT_NE(t.find("13333    5v1  2v0+3v1"), std::string::npos);
  EXPECT_EQ(t.find("ng("), std::string::npos);
}

TEST(Report, QuantumJson) {
  const CompiledGame g = compile(builtin_game("NC01_C5"));
  const nlohmann::json j = quantum_json(quantum_summary(g, ratio(Rational(2, 3))), g);
  EXPECT_EQ(j["p"], "2/3");
  EXPECT_EQ(j["bound"], "v0/v1 >= 1/3");
  EXPECT_EQ(j["perfectWin"], true);
  EXPECT_EQ(j["qsw"], "5/6");
  EXPECT_EQ(j["isNash"]["agree"], true);
}

TEST(Report, RegimesAndKfold) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const nlohmann::json r = regimes_json(ratio_regimes(g), g);
  EXPECT_EQ(r["breakpoints"], nlohmann::json({"1/3", "1/2"}));
  const KfoldSummary k = kfold_summary(builtin_game("NC00_C5"), 2, ratio(Rational(2, 3)), false);
  const nlohmann::json kj = kfold_json(k);
  EXPECT_EQ(kj["csw"], "23/36");
  EXPECT_EQ(kj["decayFactor"], "5/6");
  EXPECT_EQ(kj["exponentK"]["consistent"], false);
}

}  // namespace
}  // namespace grapheq
