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

#ifndef GRAPHEQ_GAME_H_
#define GRAPHEQ_GAME_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grapheq/gf2.h"
#include "grapheq/rational.h"
#include "grapheq/stabilizer.h"
#include "json.hpp"

namespace grapheq {

// Winning players earn v1 for answering 1 and v0 for answering 0. Losing
// players earn 0, or -ng times the same amount when a penalty is set.
struct PayoffParams {
  Rational v0{2, 3};
  Rational v1{1};
  Rational ng{0};

  // Requires v1 > 0, 0 <= v0 <= v1 and ng >= 0.
  void validate() const;

  friend bool operator==(const PayoffParams&, const PayoffParams&) = default;
};

struct QuestionSpec {
  std::string id;
  BitVector type;
  std::optional<BitVector> generators;
  BitVector involved;
  int parity = 0;
  Rational weight;

  friend bool operator==(const QuestionSpec&, const QuestionSpec&) = default;
};

struct GameSpec {
  std::string name;
  Graph graph;
  std::vector<QuestionSpec> questions;
  PayoffParams payoffs;

  int players() const { return graph.size(); }
  // True when every question carries a generator set.
  bool stabilizer_backed() const;
  // Checks lengths, weights, generator consistency and uniqueness; throws
  // Error with the matching code.
  void validate() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

std::vector<std::string> builtin_names();
// One of NC00_C5, NC01_C5, NC000_C5, NC00010_C5.
GameSpec builtin_game(std::string_view name);

// With `check` false only the document structure is enforced; call
// GameSpec::validate() later to apply the game rules.
GameSpec load_game(const nlohmann::json& document, bool check = true);
nlohmann::json save_game(const GameSpec& game);
GameSpec load_game_file(const std::filesystem::path& path, bool check = true);
// Builtin name, or a path to a JSON game document.
GameSpec resolve_game(std::string_view selector);

// Probability that player `player` is involved given its type bit.
Rational p_involved(const GameSpec& game, int player, int type_bit);

// Engine-facing form of a game. A question may carry several parity checks;
// the players win only when all of them hold. Plain games have exactly one
// check per question, k-fold products have one per group.
struct ParityCheck {
  BitVector players;
  bool parity = false;
};

struct CompiledQuestion {
  std::string id;
  BitVector type;
  Rational weight;
  std::vector<ParityCheck> checks;
  std::optional<BitVector> generators;
};

struct CompiledGame {
  std::string name;
  Graph graph;
  std::vector<CompiledQuestion> questions;

  int players() const { return graph.size(); }
};

CompiledGame compile(const GameSpec& game);

// A player counts as involved in a compiled question when it appears in any
// of its parity checks.
Rational p_involved(const CompiledGame& game, int player, int type_bit);

}  // namespace grapheq

#endif  // GRAPHEQ_GAME_H_
