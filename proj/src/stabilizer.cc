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

#include "grapheq/stabilizer.h"

#include <algorithm>
#include <stdexcept>

#include "grapheq/error.h"

namespace grapheq {
namespace {

Rational inverse_power_of_two(std::size_t exponent) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent);
  return Rational(Integer(1), den);
}

}  // namespace

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edges) : n_(vertices) {
  if (vertices < 0) throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(vertices), BitVector(static_cast<std::size_t>(vertices)));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error(ErrorCode::kInvalidGraph, "edge (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidGraph, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adjacency_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adjacency_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph Graph::cycle(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < vertices; ++v) edges.emplace_back(v, (v + 1) % vertices);
  return Graph(vertices, std::move(edges));
}

Graph Graph::edgeless(int vertices) { return Graph(vertices, {}); }

Graph Graph::disjoint_union(int copies) const {
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < copies; ++c) {
    for (auto [u, v] : edges_) edges.emplace_back(u + c * n_, v + c * n_);
  }
  return Graph(n_ * copies, std::move(edges));
}

std::size_t Graph::induced_edges(const BitVector& subset) const {
  std::size_t twice = 0;
  for (int v : subset.indices()) {
    twice += (adjacency_[static_cast<std::size_t>(v)] & subset).count();
  }
  return twice / 2;
}

BitVector PauliWord::support() const {
  BitVector out(letters.size());
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j] != Pauli::kI) out.set(j);
  }
  return out;
}

std::string PauliWord::to_string() const {
  std::string out(1, negative ? '-' : '+');
  for (Pauli p : letters) out += "IXYZ"[static_cast<int>(p)];
  return out;
}

std::vector<Pauli> multiply_letters(const std::vector<Pauli>& a, const std::vector<Pauli>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli words differ in length");
  // Encode as (x, z) bits: I=(0,0) X=(1,0) Y=(1,1) Z=(0,1).
  auto bits = [](Pauli p) {
    switch (p) {
      case Pauli::kI: return 0;
      case Pauli::kX: return 2;
      case Pauli::kY: return 3;
      case Pauli::kZ: return 1;
    }
    return 0;
  };
  static constexpr Pauli kFromBits[4] = {Pauli::kI, Pauli::kZ, Pauli::kX, Pauli::kY};
  std::vector<Pauli> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = kFromBits[bits(a[j]) ^ bits(b[j])];
  return out;
}

PauliWord stabilizer_word(const Graph& graph, const BitVector& generators) {
  const auto n = static_cast<std::size_t>(graph.size());
  if (generators.size() != n) {
    throw std::invalid_argument("generator set length differs from the graph size");
  }
  PauliWord word;
  word.letters.resize(n, Pauli::kI);
  for (std::size_t j = 0; j < n; ++j) {
    const bool x = generators.get(j);
    const bool z = graph.neighbours(static_cast<int>(j)).dot(generators);
    word.letters[j] = x ? (z ? Pauli::kY : Pauli::kX) : (z ? Pauli::kZ : Pauli::kI);
  }
  word.negative = graph.induced_edges(generators) % 2 == 1;
  return word;
}

QuestionDerivation derive_question(const Graph& graph, const BitVector& generators) {
  QuestionDerivation out;
  out.generators = generators;
  for (int v : generators.indices()) {
    if (graph.neighbours(v).dot(generators)) return out;
  }
  const PauliWord word = stabilizer_word(graph, generators);
  out.valid = true;
  out.involved = word.support();
  out.parity = word.negative ? 1 : 0;
  out.required_basis.assign(generators.size(), BasisRequirement::kFree);
  for (int v : out.involved.indices()) {
    out.required_basis[static_cast<std::size_t>(v)] =
        generators.get(static_cast<std::size_t>(v)) ? BasisRequirement::kMustMeasureX
                                                    : BasisRequirement::kMustMeasureZ;
  }
  return out;
}

std::vector<Basis> bases_from_type(const BitVector& type) {
  std::vector<Basis> bases(type.size());
  for (std::size_t j = 0; j < type.size(); ++j) bases[j] = type.get(j) ? Basis::kX : Basis::kZ;
  return bases;
}

OutcomeLaw::OutcomeLaw(Gf2System system) : system_(std::move(system)) {
  if (!system_.consistent()) throw std::invalid_argument("inconsistent outcome constraints");
}

Integer OutcomeLaw::support_size() const {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, size() - rank());
  return out;
}

bool OutcomeLaw::contains(const BitVector& answers) const {
  const auto rows = system_.rows();
  const auto rhs = system_.rhs();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dot(answers) != (rhs[r] != 0)) return false;
  }
  return true;
}

Rational OutcomeLaw::probability(const BitVector& answers) const {
  return contains(answers) ? inverse_power_of_two(size() - rank()) : Rational(0);
}

Rational OutcomeLaw::probability_of(
    const std::vector<std::pair<BitVector, bool>>& conditions) const {
  Gf2System extended = system_;
  for (const auto& [row, rhs] : conditions) extended.add(row, rhs);
  if (!extended.consistent()) return Rational(0);
  return inverse_power_of_two(extended.rank() - rank());
}

Rational OutcomeLaw::parity_one(const BitVector& players) const {
  return probability_of({{players, true}});
}

std::vector<Rational> OutcomeLaw::marginal(const BitVector& players) const {
  const std::vector<int> listed = players.indices();
  if (listed.size() > 20) throw Error(ErrorCode::kSizeLimit, "marginal over more than 20 players");
  std::vector<Rational> out(std::size_t{1} << listed.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::vector<std::pair<BitVector, bool>> conditions;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      BitVector unit(size());
      unit.set(static_cast<std::size_t>(listed[i]));
      conditions.emplace_back(std::move(unit), ((x >> i) & 1) != 0);
    }
    out[x] = probability_of(conditions);
  }
  return out;
}

std::vector<BitVector> OutcomeLaw::support() const {
  const std::size_t free_count = size() - rank();
  if (free_count > 24) throw Error(ErrorCode::kSizeLimit, "support too large to enumerate");
  std::vector<bool> is_pivot(size(), false);
  for (std::size_t p : system_.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < size(); ++c) {
    if (!is_pivot[c]) free_columns.push_back(c);
  }
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << free_count);
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_count); ++mask) {
    BitVector a(size());
    for (std::size_t i = 0; i < free_count; ++i) {
      if ((mask >> i) & 1) a.set(free_columns[i]);
    }
    // Each reduced row fixes its pivot from the free entries.
    for (std::size_t r = 0; r < rank(); ++r) {
      const bool value = (system_.rhs()[r] != 0) ^ system_.rows()[r].dot(a);
      a.set(system_.pivots()[r], value);
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BitVector> admissible_generator_basis(const Graph& graph,
                                                  const std::vector<Basis>& bases) {
  const auto n = static_cast<std::size_t>(graph.size());
  if (bases.size() != n) throw std::invalid_argument("one basis per qubit required");
  std::vector<BitVector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (bases[j] == Basis::kZ) {
      BitVector unit(n);
      unit.set(j);
      rows.push_back(std::move(unit));
    } else {
      rows.push_back(graph.neighbours(static_cast<int>(j)));
    }
  }
  return nullspace_basis(rows, n);
}

OutcomeLaw outcome_law(const Graph& graph, const std::vector<Basis>& bases) {
  Gf2System system(static_cast<std::size_t>(graph.size()));
  for (const BitVector& k : admissible_generator_basis(graph, bases)) {
    const PauliWord word = stabilizer_word(graph, k);
    system.add(word.support(), word.negative);
  }
  return OutcomeLaw(std::move(system));
}

}  // namespace grapheq
