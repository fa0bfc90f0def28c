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

// Graph-state stabilizer algebra over GF(2).
//
// A graph state |G> on n qubits is stabilized by S_j = X_j prod_{i in N(j)} Z_i.
// Multiplying the generators indexed by a vertex subset K gives, up to sign,
// X on K and Z on every vertex with an odd number of neighbours in K; the
// sign is (-1)^{|E(G[K])|} when no Y letter appears (Y letters carry an extra
// power of i that is not tracked). Everything below is exact: outcome distributions
// of single-qubit X/Z measurements are uniform over an affine subspace and
// are represented by that subspace, never by samples.

#ifndef GRAPHEQ_STABILIZER_H_
#define GRAPHEQ_STABILIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grapheq/gf2.h"
#include "grapheq/rational.h"

namespace grapheq {

class Graph {
 public:
  Graph() = default;
  // Edges are deduplicated; self-loops and out-of-range endpoints throw
  // Error(kInvalidGraph).
  Graph(int vertices, std::vector<std::pair<int, int>> edges);

  static Graph cycle(int vertices);
  static Graph edgeless(int vertices);
  // `copies` disjoint copies; copy c occupies vertices [c*n, (c+1)*n).
  Graph disjoint_union(int copies) const;

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const BitVector& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].get(static_cast<std::size_t>(v)); }

  // |E(G[subset])|.
  std::size_t induced_edges(const BitVector& subset) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<BitVector> adjacency_;
};

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

struct PauliWord {
  std::vector<Pauli> letters;
  bool negative = false;  // sign exponent: false -> +1, true -> -1

  BitVector support() const;
  // "+XZIIZ" style rendering.
  std::string to_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

// Letter-wise product, ignoring the overall phase.
std::vector<Pauli> multiply_letters(const std::vector<Pauli>& a, const std::vector<Pauli>& b);

PauliWord stabilizer_word(const Graph& graph, const BitVector& generators);

enum class BasisRequirement : std::uint8_t { kFree, kMustMeasureX, kMustMeasureZ };

struct QuestionDerivation {
  BitVector generators;
  bool valid = false;
  // The fields below are only meaningful when `valid`.
  BitVector involved;
  int parity = 0;
  std::vector<BasisRequirement> required_basis;
};

// A generator subset is a valid question when every vertex of G[K] has even
// degree inside G[K].
QuestionDerivation derive_question(const Graph& graph, const BitVector& generators);

enum class Basis : std::uint8_t { kZ, kX };

// Bases from a type vector: X where the type bit is 1, Z where it is 0.
std::vector<Basis> bases_from_type(const BitVector& type);

// Uniform distribution over the solutions of M·a = c.
class OutcomeLaw {
 public:
  explicit OutcomeLaw(std::size_t answers) : system_(answers) {}
  // Throws std::invalid_argument when the system is inconsistent.
  explicit OutcomeLaw(Gf2System system);

  std::size_t size() const { return system_.columns(); }
  std::size_t rank() const { return system_.rank(); }
  const Gf2System& constraints() const { return system_; }

  // 2^(n - rank).
  Integer support_size() const;
  bool contains(const BitVector& answers) const;
  Rational probability(const BitVector& answers) const;

  // Probability that every listed parity row·a equals its rhs.
  Rational probability_of(const std::vector<std::pair<BitVector, bool>>& conditions) const;

  // Probability that the parity of the answers of `players` is odd.
  Rational parity_one(const BitVector& players) const;

  // Distribution of the answers of `players`; entry x gives the probability
  // that the i-th listed player (ascending order) answers bit i of x.
  std::vector<Rational> marginal(const BitVector& players) const;

  // Every support vector; only for small laws (n - rank <= 24).
  std::vector<BitVector> support() const;

 private:
  Gf2System system_;
};

// Basis of the generator subsets K whose stabilizer word is diagonal in the
// requested measurement bases (no generator on a Z-measured vertex, an even
// number of K-neighbours at every X-measured vertex).
std::vector<BitVector> admissible_generator_basis(const Graph& graph,
                                                  const std::vector<Basis>& bases);

// Exact joint law of measuring every qubit of |G> in the given basis.
OutcomeLaw outcome_law(const Graph& graph, const std::vector<Basis>& bases);

}  // namespace grapheq

#endif  // GRAPHEQ_STABILIZER_H_
