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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "grapheq/acceptance.h"
#include "grapheq/classical.h"
#include "grapheq/error.h"
#include "grapheq/reference_tables.h"

namespace grapheq {
namespace {

PayoffParams ratio(const Rational& r, const Rational& ng = 0) { return {r, Rational(1), ng}; }

// Utilities straight from the game definition, sharing no code with the
// engine beyond the data types.
std::vector<Rational> oracle_utilities(const GameSpec& g, const Profile& f, const PayoffParams& p) {
  const auto n = static_cast<std::size_t>(g.players());
  std::vector<Rational> u(n);
  for (const QuestionSpec& q : g.questions) {
    std::vector<int> a(n);
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int t = q.type.get(j);
      switch (f[j]) {
        case LocalFn::kZero: a[j] = 0; break;
        case LocalFn::kOne: a[j] = 1; break;
        case LocalFn::kIdentity: a[j] = t; break;
        case LocalFn::kNot: a[j] = 1 - t; break;
      }
      if (q.involved.get(j)) parity ^= a[j];
    }
    const bool win = parity == q.parity;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = a[j] ? p.v1 : p.v0;
      u[j] += q.weight * (win ? v : -p.ng * v);
    }
  }
  return u;
}

std::vector<ProfileCode> oracle_nash(const GameSpec& g, const PayoffParams& p) {
  const int n = g.players();
  std::vector<ProfileCode> out;
  for (ProfileCode c = 0; c < profile_count(n); ++c) {
    Profile f = decode(c, n);
    const auto base = oracle_utilities(g, f, p);
    bool nash = true;
    for (int j = 0; j < n && nash; ++j) {
      const LocalFn keep = f[static_cast<std::size_t>(j)];
      for (int d = 0; d < 4 && nash; ++d) {
        f[static_cast<std::size_t>(j)] = static_cast<LocalFn>(d);
        if (oracle_utilities(g, f, p)[static_cast<std::size_t>(j)] > base[static_cast<std::size_t>(j)]) nash = false;
      }
      f[static_cast<std::size_t>(j)] = keep;
    }
    if (nash) out.push_back(c);
  }
  return out;
}

TEST(Profiles, EncodingIsLexicographic) {
  EXPECT_EQ(encode(parse_profile("00001")), 1u);
  EXPECT_EQ(encode(parse_profile("10000")), 256u);
  EXPECT_EQ(profile_string(decode(encode(parse_profile("21330")), 5)), "21330");
  EXPECT_EQ(profile_count(5), 1024u);
  EXPECT_THROW(parse_profile("12a"), Error);
}

TEST(Evaluate, MatchesOracleEverywhere) {
  for (const std::string& name : builtin_names()) {
    const GameSpec g = builtin_game(name);
    const CompiledGame cg = compile(g);
    const PayoffParams p = ratio(Rational(2, 5), Rational(3));
    const PayoffTable table(cg, p);
    for (ProfileCode c = 0; c < 1024; c += 7) {
      const Profile f = decode(c, 5);
      const auto expected = oracle_utilities(g, f, p);
      const Evaluation ev = evaluate(cg, f);
      for (int j = 0; j < 5; ++j) {
        EXPECT_EQ(ev.payoffs[static_cast<std::size_t>(j)].at(p), expected[static_cast<std::size_t>(j)]);
        EXPECT_EQ(table.utility(c, j), expected[static_cast<std::size_t>(j)]);
      }
      EXPECT_EQ(table.p_win(c), ev.p_win);
    }
  }
}

TEST(Nash, MatchesOracleAtSampleRatios) {
  for (const std::string& name : {"NC00_C5", "NC01_C5"}) {
    const GameSpec g = builtin_game(name);
    for (const Rational& r : {Rational(1, 4), Rational(1, 3), Rational(2, 3)}) {
      std::vector<ProfileCode> got;
      for (const auto& e : enumerate_nash(g, ratio(r)).profiles) got.push_back(e.code);
      EXPECT_EQ(got, oracle_nash(g, ratio(r))) << name << " r=" << to_string(r);
    }
  }
}

struct Frozen {
  const char* game;
  Criterion criterion;
  Rational r;
  std::size_t profiles;
  std::size_t orbits;
  std::size_t classes;
};

TEST(Enumeration, FrozenCounts) {
  const std::vector<Frozen> cases{
      {"NC00_C5", Criterion::kNash, Rational(1, 4), 20, 4, 4},
      {"NC00_C5", Criterion::kNash, Rational(1, 3), 35, 6, 6},
      {"NC00_C5", Criterion::kNash, Rational(2, 5), 25, 4, 4},
      {"NC00_C5", Criterion::kNash, Rational(1, 2), 45, 7, 7},
      {"NC00_C5", Criterion::kNash, Rational(2, 3), 40, 6, 6},
      {"NC00_C5", Criterion::kNash, Rational(1), 192, 28, 28},
      {"NC00_C5", Criterion::kPareto, Rational(1, 4), 121, 18, 18},
      {"NC00_C5", Criterion::kPareto, Rational(2, 5), 91, 14, 14},
      {"NC00_C5", Criterion::kPareto, Rational(2, 3), 81, 12, 12},
      {"NC00_C5", Criterion::kParetoJoint, Rational(1, 4), 31, 6, 6},
      {"NC01_C5", Criterion::kNash, Rational(1, 4), 5, 1, 1},
      {"NC01_C5", Criterion::kNash, Rational(2, 5), 40, 8, 6},
      {"NC01_C5", Criterion::kNash, Rational(2, 3), 40, 8, 6},
      {"NC01_C5", Criterion::kPareto, Rational(2, 5), 76, 16, 13},
      {"NC000_C5", Criterion::kNash, Rational(1, 4), 11, 3, 3},
      {"NC000_C5", Criterion::kNash, Rational(2, 3), 41, 7, 7},
  };
  for (const Frozen& f : cases) {
    const CompiledGame g = compile(builtin_game(f.game));
    EnumerationOptions o;
    o.criterion = f.criterion;
    const EquilibriumReport rep = f.criterion == Criterion::kNash ? enumerate_nash(g, ratio(f.r), o)
                                                                  : enumerate_pareto(g, ratio(f.r), o);
    const std::string label = std::string(f.game) + " " + std::string(criterion_name(f.criterion)) + " r=" + to_string(f.r);
    EXPECT_EQ(rep.profiles.size(), f.profiles) << label;
    EXPECT_EQ(rep.orbits.size(), f.orbits) << label;
    EXPECT_EQ(rep.graph_classes, f.classes) << label;
  }
}

TEST(Enumeration, StrictIsSubsetOfWeak) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const PayoffTable t(g, ratio(Rational(1, 3)));
  EnumerationOptions strict;
  strict.strict = true;
  const auto s = equilibrium_codes(t, strict);
  const auto w = equilibrium_codes(t);
  EXPECT_TRUE(std::includes(w.begin(), w.end(), s.begin(), s.end()));
  EXPECT_LT(s.size(), w.size());
}

TEST(Enumeration, ThreadCountDoesNotChangeOutput) {
  const CompiledGame g = compile(builtin_game("NC01_C5"));
  const PayoffTable t1(g, ratio(Rational(2, 5)), 1);
  const PayoffTable t4(g, ratio(Rational(2, 5)), 4);
  for (Criterion c : {Criterion::kNash, Criterion::kPareto}) {
    EnumerationOptions a;
    a.criterion = c;
    a.threads = 1;
    EnumerationOptions b = a;
    b.threads = 4;
    EXPECT_EQ(equilibrium_codes(t1, a), equilibrium_codes(t4, b));
  }
}

TEST(Symmetry, GroupsOfTheBuiltins) {
  EXPECT_EQ(graph_automorphisms(Graph::cycle(5)).order(), 10u);
  EXPECT_EQ(game_automorphisms(builtin_game("NC00_C5")).order(), 10u);
  EXPECT_EQ(game_automorphisms(builtin_game("NC01_C5")).order(), 5u);
  EXPECT_EQ(trivial_group(4).order(), 1u);
}

// Equilibrium sets are unions of orbits of the game's symmetry group.
TEST(Symmetry, EquilibriumSetsAreClosed) {
  for (const std::string& name : builtin_names()) {
    const CompiledGame g = compile(builtin_game(name));
    const SymmetryGroup group = game_automorphisms(g);
    for (const Rational& r : {Rational(1, 4), Rational(2, 3)}) {
      for (Criterion c : {Criterion::kNash, Criterion::kPareto}) {
        EnumerationOptions o;
        o.criterion = c;
        const auto codes = equilibrium_codes(PayoffTable(g, ratio(r)), o);
        const std::set<ProfileCode> set(codes.begin(), codes.end());
        for (ProfileCode code : codes) {
          for (std::size_t e = 0; e < group.order(); ++e) {
            EXPECT_TRUE(set.count(group.act(e, code, 5))) << name;
          }
        }
        std::size_t total = 0;
        for (const Orbit& o2 : orbit_partition(codes, group, 5)) total += o2.members.size();
        EXPECT_EQ(total, codes.size());
      }
    }
  }
}

TEST(Regimes, Nc00) {
  const RegimeAnalysis r = ratio_regimes(builtin_game("NC00_C5"));
  EXPECT_EQ(r.breakpoints, (std::vector<Rational>{Rational(1, 3), Rational(1, 2)}));
  ASSERT_EQ(r.intervals.size(), 3u);
  EXPECT_EQ(r.intervals[0].codes.size(), 20u);
  EXPECT_EQ(r.intervals[1].codes.size(), 25u);
  EXPECT_EQ(r.intervals[2].codes.size(), 40u);
  ASSERT_EQ(r.points.size(), 4u);
  EXPECT_EQ(r.points[0].codes.size(), 21u);
  EXPECT_FALSE(r.points[0].union_of_neighbours);
  EXPECT_TRUE(r.points[1].union_of_neighbours);
  EXPECT_TRUE(r.points[2].union_of_neighbours);
  EXPECT_EQ(r.points[3].codes.size(), 192u);
}

TEST(Regimes, OtherBuiltins) {
  EXPECT_EQ(ratio_regimes(builtin_game("NC01_C5")).breakpoints, (std::vector<Rational>{Rational(1, 3)}));
  EXPECT_EQ(ratio_regimes(builtin_game("NC000_C5")).breakpoints,
            (std::vector<Rational>{Rational(1, 5), Rational(3, 7), Rational(1, 2), Rational(3, 5)}));
  const RegimeAnalysis r = ratio_regimes(builtin_game("NC00010_C5"));
  EXPECT_EQ(r.breakpoints, (std::vector<Rational>{Rational(3, 11), Rational(5, 13), Rational(1, 2),
                                                  Rational(5, 9), Rational(3, 5)}));
  // An isolated ratio where the set jumps while both sides agree.
  EXPECT_EQ(r.points[4].codes.size(), 41u);
  EXPECT_EQ(r.intervals[3].codes.size(), 21u);
  EXPECT_EQ(r.intervals[4].codes.size(), 21u);
}

// Per-profile intervals agree with direct enumeration on a fine grid.
TEST(Regimes, ProfileIntervalsMatchEnumeration) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  std::vector<std::optional<RatioInterval>> intervals;
  for (ProfileCode c = 0; c < 1024; ++c) intervals.push_back(nash_ratio_interval(g, c));
  for (int i = 0; i <= 60; ++i) {
    const Rational r(i, 60);
    const auto codes = equilibrium_codes(PayoffTable(g, ratio(r)));
    const std::set<ProfileCode> set(codes.begin(), codes.end());
    for (ProfileCode c = 0; c < 1024; ++c) {
      const bool in = intervals[c] && intervals[c]->contains(r);
      ASSERT_EQ(in, set.count(c) > 0) << profile_string(decode(c, 5)) << " r=" << to_string(r);
    }
  }
}

TEST(Welfare, BestPureNash) {
  const PayoffParams p = ratio(Rational(2, 3));
  const CswResult nc00 = best_csw(builtin_game("NC00_C5"), p);
  EXPECT_EQ(nc00.social_welfare, Rational(23, 30));
  EXPECT_EQ(nc00.argmax.size(), 5u);
  EXPECT_EQ(best_csw(builtin_game("NC01_C5"), p).social_welfare, Rational(7, 9));
  EXPECT_EQ(best_csw(builtin_game("NC000_C5"), p).social_welfare, Rational(28, 39));
  EXPECT_EQ(best_csw(builtin_game("NC00010_C5"), p).social_welfare, Rational(281, 390));
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  EXPECT_GE(max_social_welfare(PayoffTable(g, p)), nc00.social_welfare);
}

// Values cross-checked against an independent floating-point LP solver on
// the unreduced program.
TEST(Welfare, CorrelatedLp) {
  const PayoffParams p = ratio(Rational(2, 3));
  EXPECT_EQ(best_correlated_sw(builtin_game("NC00_C5"), p), Rational(97, 126));
  EXPECT_EQ(best_correlated_sw(builtin_game("NC01_C5"), p), Rational(7, 9));
  EXPECT_EQ(best_correlated_sw(builtin_game("NC000_C5"), p), Rational(28, 39));
  EXPECT_EQ(best_correlated_sw(builtin_game("NC00010_C5"), p), Rational(281, 390));
  for (const std::string& name : builtin_names()) {
    EXPECT_GE(best_correlated_sw(builtin_game(name), p), best_csw(builtin_game(name), p).social_welfare);
  }
}

TEST(Properties, NashIsInsidePareto) {
  for (const std::string& name : builtin_names()) {
    const CompiledGame g = compile(builtin_game(name));
    for (int i = 0; i <= 12; ++i) {
      const PayoffTable t(g, ratio(Rational(i, 12), i % 3 == 0 ? Rational(4) : Rational(0)));
      EnumerationOptions pareto;
      pareto.criterion = Criterion::kPareto;
      const auto n = equilibrium_codes(t);
      const auto p = equilibrium_codes(t, pareto);
      EXPECT_TRUE(std::includes(p.begin(), p.end(), n.begin(), n.end())) << name << " " << i;
    }
  }
}

// Each nash-* reference row is Nash exactly on the closed hull of the regimes whose
// table lists a member of its orbit.
TEST(Properties, TableTwoRowsHoldOnTheirIntervals) {
  const CompiledGame g = compile(builtin_game("NC00_C5"));
  const SymmetryGroup group = game_automorphisms(g);
  struct Regime {
    Rational lo, hi;
    std::set<ProfileCode> canon;
  };
  std::vector<Regime> regimes;
  for (const ReferenceTable& t : reference_tables()) {
    if (t.name.rfind("nash-", 0) != 0) continue;
    const EquilibriumReport rep = enumerate_nash(g, ratio(parse_rational(t.sample_ratio)));
    Regime r;
    r.lo = t.name == "nash-low" ? Rational(0) : t.name == "nash-mid" ? Rational(1, 3) : Rational(1, 2);
    r.hi = t.name == "nash-low" ? Rational(1, 3) : t.name == "nash-mid" ? Rational(1, 2) : Rational(1);
    for (const auto& e : rep.profiles) r.canon.insert(group.canonical(e.code, 5));
    regimes.push_back(r);
  }
  for (const ReferenceTable& t : reference_tables()) {
    if (t.name.rfind("nash-", 0) != 0) continue;
    for (const ReferenceRow& row : t.rows) {
      const ProfileCode code = encode(parse_profile(row.profile));
      std::optional<Rational> lo, hi;
      for (const Regime& r : regimes) {
        if (!r.canon.count(group.canonical(code, 5))) continue;
        if (!lo || r.lo < *lo) lo = r.lo;
        if (!hi || r.hi > *hi) hi = r.hi;
      }
      const auto interval = nash_ratio_interval(g, code);
      ASSERT_TRUE(interval && lo) << row.profile;
      EXPECT_EQ(interval->lo, *lo) << row.profile;
      EXPECT_EQ(interval->hi, *hi) << row.profile;
      EXPECT_TRUE(interval->lo_closed && interval->hi_closed);
    }
  }
}

TEST(Properties, WinBitMatchesLawSupport) {
  for (const std::string& name : builtin_names()) {
    const ConsistencyResult c = classical_quantum_consistency(builtin_game(name));
    EXPECT_EQ(c.checks, builtin_game(name).questions.size() * 1024) << name;
    EXPECT_TRUE(c.mismatches.empty()) << name;
  }
}

TEST(LinearPayoff, Expression) {
  LinearPayoff a;
  a.win_v0 = 2;
  a.win_v1 = Rational(1, 2);
  EXPECT_EQ(a.at(ratio(Rational(1, 2))), Rational(3, 2));
  a.lose_v1 = 1;
  EXPECT_EQ(a.at(ratio(Rational(1, 2), 2)), Rational(-1, 2));
}

}  // namespace
}  // namespace grapheq
