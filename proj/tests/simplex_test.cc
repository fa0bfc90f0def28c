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

#include "grapheq/simplex.h"

namespace grapheq {
namespace {

LinearConstraint row(std::vector<Rational> c, Relation rel, Rational rhs) {
  return {std::move(c), rel, std::move(rhs)};
}

TEST(Simplex, SmallOptimum) {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3.
  LinearProgram lp{2, {3, 2}, {}};
  lp.constraints.push_back(row({1, 1}, Relation::kLessEqual, 4));
  lp.constraints.push_back(row({1, 3}, Relation::kLessEqual, 6));
  lp.constraints.push_back(row({1, 0}, Relation::kLessEqual, 3));
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 11);
  EXPECT_EQ(s.x, (std::vector<Rational>{3, 1}));
}

TEST(Simplex, EqualityAndGreaterRows) {
  // max -x - y with x + y >= 1, x - y = 1/2.
  LinearProgram lp{2, {-1, -1}, {}};
  lp.constraints.push_back(row({1, 1}, Relation::kGreaterEqual, 1));
  lp.constraints.push_back(row({1, -1}, Relation::kEqual, Rational(1, 2)));
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, -1);
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(3, 4), Rational(1, 4)}));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LinearProgram infeasible{1, {1}, {}};
  infeasible.constraints.push_back(row({1}, Relation::kLessEqual, 1));
  infeasible.constraints.push_back(row({1}, Relation::kGreaterEqual, 2));
  EXPECT_EQ(solve(infeasible).status, LpStatus::kInfeasible);
  LinearProgram unbounded{2, {1, 1}, {}};
  unbounded.constraints.push_back(row({1, -1}, Relation::kLessEqual, 1));
  EXPECT_EQ(solve(unbounded).status, LpStatus::kUnbounded);
}

// Beale's example cycles under plain largest-coefficient pricing.
TEST(Simplex, BealeCyclingExample) {
  LinearProgram lp{4, {Rational(3, 4), -20, Rational(1, 2), -6}, {}};
  lp.constraints.push_back(row({Rational(1, 4), -8, -1, 9}, Relation::kLessEqual, 0));
  lp.constraints.push_back(row({Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::kLessEqual, 0));
  lp.constraints.push_back(row({0, 0, 1, 0}, Relation::kLessEqual, 1));
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(5, 4));
}

TEST(Simplex, KleeMintyCube) {
  const int n = 5;
  LinearProgram lp{static_cast<std::size_t>(n), {}, {}};
  for (int j = 0; j < n; ++j) lp.objective.push_back(Rational(1) * (1 << (n - 1 - j)));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = 1 << (i - j + 1);
    c[static_cast<std::size_t>(i)] = 1;
    lp.constraints.push_back(row(c, Relation::kLessEqual, pow(Rational(5), static_cast<unsigned>(i + 1))));
  }
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, pow(Rational(5), n));
}

// Two-variable programs against vertex enumeration.
TEST(Simplex, RandomPlanarProgramsMatchVertexEnumeration) {
  std::mt19937_64 rng(5);
  auto draw = [&](int lo, int hi) { return Rational(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))); };
  int optimal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearProgram lp{2, {draw(-3, 5), draw(-3, 5)}, {}};
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < m; ++i) {
      const Relation rel = rng() % 4 == 0 ? Relation::kGreaterEqual : Relation::kLessEqual;
      lp.constraints.push_back(row({draw(-2, 4), draw(-2, 4)}, rel, draw(0, 8)));
    }
    lp.constraints.push_back(row({1, 1}, Relation::kLessEqual, 20));  // bounded region
    // Lines: every constraint plus the two axes.
    std::vector<std::pair<std::vector<Rational>, Rational>> lines;
    for (const auto& c : lp.constraints) lines.emplace_back(c.coefficients, c.rhs);
    lines.push_back({{1, 0}, 0});
    lines.push_back({{0, 1}, 0});
    std::optional<Rational> best;
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const auto& [p, r] = lines[a];
        const auto& [q, s] = lines[b];
        const Rational det = p[0] * q[1] - p[1] * q[0];
        if (det == 0) continue;
        const Rational x = (r * q[1] - p[1] * s) / det;
        const Rational y = (p[0] * s - r * q[0]) / det;
        if (x < 0 || y < 0) continue;
        bool feasible = true;
        for (const auto& c : lp.constraints) {
          const Rational v = c.coefficients[0] * x + c.coefficients[1] * y;
          feasible = feasible && (c.relation == Relation::kLessEqual ? v <= c.rhs : v >= c.rhs);
        }
        if (!feasible) continue;
        const Rational value = lp.objective[0] * x + lp.objective[1] * y;
        if (!best || value > *best) best = value;
      }
    }
    const LpSolution sol = solve(lp);
    if (!best) {
      EXPECT_EQ(sol.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(sol.status, LpStatus::kOptimal);
    EXPECT_EQ(sol.value, *best);
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
}

}  // namespace
}  // namespace grapheq
