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

// Regression suite against the reference numbers, shared by the acceptance
// test binary and the `verify` command, plus per-game sanity checks.

#ifndef GRAPHEQ_ACCEPTANCE_H_
#define GRAPHEQ_ACCEPTANCE_H_

#include <functional>
#include <string>
#include <vector>

#include "grapheq/game.h"

namespace grapheq {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
  double seconds = 0;
};

// One pass/fail line followed by indented notes.
std::string format_result(const CriterionResult& result);

std::vector<CriterionResult> run_acceptance(
    int threads = 0, const std::function<void(const CriterionResult&)>& on_result = {});

// Individual criteria, numbered as in the suite.
CriterionResult criterion_nash_counts(int threads = 0);
CriterionResult criterion_table_replay(int threads = 0);
CriterionResult criterion_table_replay_nc01(int threads = 0);
CriterionResult criterion_social_welfare(int threads = 0);
CriterionResult criterion_quantum_guarantees();
CriterionResult criterion_thresholds(int threads = 0);
CriterionResult criterion_penalty(int threads = 0);
CriterionResult criterion_kfold(int threads = 0);
CriterionResult criterion_separation();
CriterionResult criterion_cross_module();

struct GameCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Rules, then (for stabilizer-backed games) perfect win, uniform marginals,
// belief invariance and classical/quantum consistency. A game named like a
// builtin is also compared with it.
std::vector<GameCheck> verify_game(const GameSpec& game);

// Classical win bit against membership in the affine set cut out by the
// generator word, for every profile. Returns the number of comparisons and
// the first mismatch, if any.
struct ConsistencyResult {
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
};
ConsistencyResult classical_quantum_consistency(const GameSpec& game);

}  // namespace grapheq

#endif  // GRAPHEQ_ACCEPTANCE_H_
