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

// Dense two-phase simplex over exact rationals. Pricing starts with the
// largest reduced cost and switches to Bland's rule on degenerate stalls.
// Intended for the small linear programs of the correlated-equilibrium
// analysis; no tolerances anywhere.

#ifndef GRAPHEQ_SIMPLEX_H_
#define GRAPHEQ_SIMPLEX_H_

#include <cstddef>
#include <vector>

#include "grapheq/rational.h"

namespace grapheq {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective·x subject to the constraints and x >= 0.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

LpSolution solve(const LinearProgram& program);

}  // namespace grapheq

#endif  // GRAPHEQ_SIMPLEX_H_
