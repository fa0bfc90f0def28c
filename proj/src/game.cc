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

#include "grapheq/game.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "grapheq/error.h"

namespace grapheq {
namespace {

constexpr int kCycle = 5;

int wrap(int v) { return ((v % kCycle) + kCycle) % kCycle; }

// Builtin questions are specified by their generator set; type, involved set
// and parity are derived and then checked against the reference tables.
QuestionSpec from_generators(const Graph& graph, std::string id, std::initializer_list<int> k,
                             const Rational& weight) {
  std::vector<int> wrapped;
  for (int v : k) wrapped.push_back(wrap(v));
  const BitVector generators = BitVector::from_indices(kCycle, wrapped);
  const QuestionDerivation d = derive_question(graph, generators);
  QuestionSpec q;
  q.id = std::move(id);
  q.type = generators;
  q.generators = generators;
  q.involved = d.involved;
  q.parity = d.parity;
  q.weight = weight;
  return q;
}

void expect_involved(const QuestionSpec& q, std::initializer_list<int> involved) {
  std::vector<int> wrapped;
  for (int v : involved) wrapped.push_back(wrap(v));
  if (q.involved != BitVector::from_indices(kCycle, wrapped)) {
    throw Error(ErrorCode::kInvolvementMismatch, "builtin question " + q.id +
                                                     " disagrees with its table");
  }
}

GameSpec cycle_game(std::string name, const Rational& all_weight) {
  GameSpec game;
  game.name = std::move(name);
  game.graph = Graph::cycle(kCycle);
  game.questions.push_back(
      from_generators(game.graph, "Ta", {0, 1, 2, 3, 4}, all_weight));
  return game;
}

GameSpec make_nc00() {
  GameSpec game = cycle_game("NC00_C5", Rational(1, 6));
  for (int i = 0; i < kCycle; ++i) {
    auto q = from_generators(game.graph, "T" + std::to_string(i), {i}, Rational(1, 6));
    expect_involved(q, {i - 1, i, i + 1});
    game.questions.push_back(std::move(q));
  }
  return game;
}

// Type 0_{i-1} 1_i 0_{i+1} 1_{i+2} 0_{i+3} with generator i only: the extra 1
// lands on a player that is not involved.
QuestionSpec shifted_one(const Graph& graph, std::string id, int i, const Rational& weight) {
  QuestionSpec q = from_generators(graph, std::move(id), {i}, weight);
  q.type.set(static_cast<std::size_t>(wrap(i + 2)));
  expect_involved(q, {i - 1, i, i + 1});
  return q;
}

GameSpec make_nc01() {
  GameSpec game = cycle_game("NC01_C5", Rational(1, 6));
  for (int i = 0; i < kCycle; ++i) {
    game.questions.push_back(shifted_one(game.graph, "T" + std::to_string(i), i, Rational(1, 6)));
  }
  return game;
}

QuestionSpec four_involved(const Graph& graph, std::string id, int i, const Rational& weight) {
  QuestionSpec q = from_generators(graph, std::move(id), {i, i + 2}, weight);
  expect_involved(q, {i - 1, i, i + 2, i + 3});
  return q;
}

GameSpec make_nc000() {
  GameSpec game = cycle_game("NC000_C5", Rational(3, 13));
  for (int i = 0; i < kCycle; ++i) {
    auto q = from_generators(game.graph, "T" + std::to_string(i), {i}, Rational(1, 13));
    expect_involved(q, {i - 1, i, i + 1});
    game.questions.push_back(std::move(q));
  }
  for (int i = 0; i < kCycle; ++i) {
    game.questions.push_back(
        four_involved(game.graph, "T" + std::to_string(i) + "b", i, Rational(1, 13)));
  }
  return game;
}

GameSpec make_nc00010() {
  GameSpec game = cycle_game("NC00010_C5", Rational(3, 13));
  for (int i = 0; i < kCycle; ++i) {
    auto q = from_generators(game.graph, "T" + std::to_string(i), {i}, Rational(1, 26));
    expect_involved(q, {i - 1, i, i + 1});
    game.questions.push_back(std::move(q));
  }
  for (int i = 0; i < kCycle; ++i) {
    game.questions.push_back(
        shifted_one(game.graph, "T" + std::to_string(i) + "a", i, Rational(1, 26)));
  }
  for (int i = 0; i < kCycle; ++i) {
    game.questions.push_back(
        four_involved(game.graph, "T" + std::to_string(i) + "b", i, Rational(1, 13)));
  }
  return game;
}

[[noreturn]] void bad_document(const std::string& message) {
  throw Error(ErrorCode::kMalformedDocument, message);
}

Rational rational_field(const nlohmann::json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) bad_document(std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    throw Error(ErrorCode::kMalformedRational,
                std::string("field '") + key + "' must be a \"p/q\" string");
  }
  return parse_rational(it->get<std::string>());
}

BitVector vertex_set(const nlohmann::json& value, int n, const std::string& what) {
  if (!value.is_array()) bad_document(what + " must be an array of vertices");
  std::vector<int> vertices;
  for (const auto& v : value) {
    if (!v.is_number_integer()) bad_document(what + " must contain integers");
    const int index = v.get<int>();
    if (index < 0 || index >= n) bad_document(what + " mentions vertex " + std::to_string(index));
    vertices.push_back(index);
  }
  return BitVector::from_indices(static_cast<std::size_t>(n), vertices);
}

}  // namespace

void PayoffParams::validate() const {
  if (v1 <= 0) throw Error(ErrorCode::kInvalidParams, "v1 must be positive");
  if (v0 < 0 || v0 > v1) throw Error(ErrorCode::kInvalidParams, "need 0 <= v0 <= v1");
  if (ng < 0) throw Error(ErrorCode::kInvalidParams, "penalty ng must be non-negative");
}

bool GameSpec::stabilizer_backed() const {
  return std::all_of(questions.begin(), questions.end(),
                     [](const QuestionSpec& q) { return q.generators.has_value(); });
}

void GameSpec::validate() const {
  const auto n = static_cast<std::size_t>(players());
  if (questions.empty()) bad_document("game has no questions");
  Rational total = 0;
  std::set<std::string> ids;
  std::set<std::pair<BitVector, BitVector>> keyed;
  for (const QuestionSpec& q : questions) {
    if (!ids.insert(q.id).second) bad_document("duplicate question id " + q.id);
    if (q.type.size() != n) {
      throw Error(ErrorCode::kTypeLength, "question " + q.id + " has type length " +
                                              std::to_string(q.type.size()) + ", expected " +
                                              std::to_string(n));
    }
    if (q.involved.size() != n) bad_document("question " + q.id + " involved set has wrong size");
    if (q.parity != 0 && q.parity != 1) bad_document("question " + q.id + " parity must be 0 or 1");
    if (q.weight <= 0) bad_document("question " + q.id + " must have positive weight");
    total += q.weight;
    if (!keyed.emplace(q.type, q.involved).second) {
      bad_document("question " + q.id + " repeats an existing (type, involved) pair");
    }
    if (!q.generators) continue;
    if (q.generators->size() != n) bad_document("question " + q.id + " generator set has wrong size");
    const QuestionDerivation d = derive_question(graph, *q.generators);
    if (!d.valid) {
      throw Error(ErrorCode::kInvalidGenerator,
                  "question " + q.id + ": generator set " + q.generators->to_string() +
                      " has a vertex of odd degree in the induced subgraph");
    }
    if (d.involved != q.involved || d.parity != q.parity) {
      throw Error(ErrorCode::kInvolvementMismatch,
                  "question " + q.id + ": involved set or parity disagrees with the generators");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const BasisRequirement r = d.required_basis[j];
      if ((r == BasisRequirement::kMustMeasureX && !q.type.get(j)) ||
          (r == BasisRequirement::kMustMeasureZ && q.type.get(j))) {
        throw Error(ErrorCode::kInvalidGenerator,
                    "question " + q.id + ": type bit of player " + std::to_string(j) +
                        " is incompatible with the generator measurement");
      }
    }
  }
  if (total != 1) {
    throw Error(ErrorCode::kWeightSum, "question weights sum to " + to_string(total));
  }
  payoffs.validate();
}

std::vector<std::string> builtin_names() {
  return {"NC00_C5", "NC01_C5", "NC000_C5", "NC00010_C5"};
}

GameSpec builtin_game(std::string_view name) {
  GameSpec game;
  if (name == "NC00_C5") {
    game = make_nc00();
  } else if (name == "NC01_C5") {
    game = make_nc01();
  } else if (name == "NC000_C5") {
    game = make_nc000();
  } else if (name == "NC00010_C5") {
    game = make_nc00010();
  } else {
    throw Error(ErrorCode::kUnknownGame, "no builtin game named '" + std::string(name) + "'");
  }
  game.validate();
  return game;
}

GameSpec load_game(const nlohmann::json& document, bool check) {
  if (!document.is_object()) bad_document("game document must be an object");
  GameSpec game;
  try {
    game.name = document.value("name", std::string("unnamed"));
    if (!document.contains("n") || !document["n"].is_number_integer()) {
      bad_document("missing integer field 'n'");
    }
    const int n = document["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (document.contains("edges")) {
      for (const auto& e : document["edges"]) {
        if (!e.is_array() || e.size() != 2) bad_document("edges must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
    game.graph = Graph(n, std::move(edges));
    if (document.contains("payoffs")) {
      const auto& p = document["payoffs"];
      game.payoffs.v0 = rational_field(p, "v0");
      game.payoffs.v1 = rational_field(p, "v1");
      game.payoffs.ng = p.contains("ng") ? rational_field(p, "ng") : Rational(0);
    }
    if (!document.contains("questions") || !document["questions"].is_array()) {
      bad_document("missing array field 'questions'");
    }
    for (const auto& item : document["questions"]) {
      QuestionSpec q;
      if (!item.contains("id") || !item["id"].is_string()) bad_document("question without id");
      q.id = item["id"].get<std::string>();
      if (!item.contains("t") || !item["t"].is_string()) bad_document("question " + q.id + " lacks 't'");
      const std::string t = item["t"].get<std::string>();
      if (t.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::kTypeLength, "question " + q.id + " has type '" + t +
                                                "' but the graph has " + std::to_string(n) +
                                                " vertices");
      }
      try {
        q.type = BitVector::from_string(t);
      } catch (const std::invalid_argument&) {
        bad_document("question " + q.id + " type must be a 0/1 string");
      }
      q.weight = rational_field(item, "w");
      if (item.contains("K")) {
        q.generators = vertex_set(item["K"], n, "K of " + q.id);
        const QuestionDerivation d = derive_question(game.graph, *q.generators);
        if (!d.valid && check) {
          throw Error(ErrorCode::kInvalidGenerator,
                      "question " + q.id + ": generator set " + q.generators->to_string() +
                          " has a vertex of odd degree in the induced subgraph");
        }
        const BitVector derived = d.valid ? d.involved : BitVector(static_cast<std::size_t>(n));
        q.involved = item.contains("I") ? vertex_set(item["I"], n, "I of " + q.id) : derived;
        q.parity = item.contains("b") ? item["b"].get<int>() : d.parity;
      } else {
        if (!item.contains("I") || !item.contains("b")) {
          bad_document("question " + q.id + " needs either K or both I and b");
        }
        q.involved = vertex_set(item["I"], n, "I of " + q.id);
        q.parity = item["b"].get<int>();
      }
      game.questions.push_back(std::move(q));
    }
  } catch (const nlohmann::json::exception& e) {
    bad_document(e.what());
  }
  if (check) game.validate();
  return game;
}

nlohmann::json save_game(const GameSpec& game) {
  nlohmann::json doc;
  doc["name"] = game.name;
  doc["n"] = game.players();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : game.graph.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  doc["payoffs"] = {{"v0", to_string(game.payoffs.v0)},
                    {"v1", to_string(game.payoffs.v1)},
                    {"ng", to_string(game.payoffs.ng)}};
  nlohmann::json questions = nlohmann::json::array();
  for (const QuestionSpec& q : game.questions) {
    nlohmann::json item;
    item["id"] = q.id;
    item["t"] = q.type.to_string();
    if (q.generators) item["K"] = q.generators->indices();
    item["I"] = q.involved.indices();
    item["b"] = q.parity;
    item["w"] = to_string(q.weight);
    questions.push_back(std::move(item));
  }
  doc["questions"] = questions;
  return doc;
}

GameSpec load_game_file(const std::filesystem::path& path, bool check) {
  std::ifstream in(path);
  if (!in) bad_document("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    bad_document(path.string() + ": " + e.what());
  }
  return load_game(doc, check);
}

GameSpec resolve_game(std::string_view selector) {
  for (const std::string& name : builtin_names()) {
    if (selector == name) return builtin_game(name);
  }
  if (std::filesystem::exists(std::filesystem::path(std::string(selector)))) {
    return load_game_file(std::string(selector));
  }
  throw Error(ErrorCode::kUnknownGame,
              "'" + std::string(selector) + "' is neither a builtin game nor a file");
}

Rational p_involved(const GameSpec& game, int player, int type_bit) {
  const auto j = static_cast<std::size_t>(player);
  Rational with_type = 0;
  Rational involved = 0;
  for (const QuestionSpec& q : game.questions) {
    if (static_cast<int>(q.type.get(j)) != type_bit) continue;
    with_type += q.weight;
    if (q.involved.get(j)) involved += q.weight;
  }
  if (with_type == 0) {
    throw Error(ErrorCode::kConditioningOnImpossibleType,
                "player " + std::to_string(player) + " never receives type " +
                    std::to_string(type_bit));
  }
  return involved / with_type;
}

CompiledGame compile(const GameSpec& game) {
  CompiledGame out;
  out.name = game.name;
  out.graph = game.graph;
  for (const QuestionSpec& q : game.questions) {
    out.questions.push_back(
        {q.id, q.type, q.weight, {ParityCheck{q.involved, q.parity != 0}}, q.generators});
  }
  return out;
}

Rational p_involved(const CompiledGame& game, int player, int type_bit) {
  const auto j = static_cast<std::size_t>(player);
  Rational with_type = 0;
  Rational involved = 0;
  for (const CompiledQuestion& q : game.questions) {
    if (static_cast<int>(q.type.get(j)) != type_bit) continue;
    with_type += q.weight;
    if (std::any_of(q.checks.begin(), q.checks.end(),
                    [&](const ParityCheck& c) { return c.players.get(j); })) {
      involved += q.weight;
    }
  }
  if (with_type == 0) {
    throw Error(ErrorCode::kConditioningOnImpossibleType,
                "player " + std::to_string(player) + " never receives type " +
                    std::to_string(type_bit));
  }
  return involved / with_type;
}

}  // namespace grapheq
