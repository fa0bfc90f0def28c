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

#ifndef GRAPHEQ_GF2_H_
#define GRAPHEQ_GF2_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grapheq {

// Fixed-length bit string packed into 64-bit words. Used both as a GF(2)
// vector and as a vertex subset.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_indices(std::size_t size, std::span<const int> indices);
  static BitVector from_indices(std::size_t size, std::initializer_list<int> indices);
  // Character j of `bits` is entry j ("10000" has only entry 0 set).
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  // Parity of the overlap with `other`, i.e. the GF(2) inner product.
  bool dot(const BitVector& other) const;
  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  std::vector<int> indices() const;
  // True when every set bit of this vector is also set in `other`.
  bool subset_of(const BitVector& other) const;

  // Concatenation (this followed by `tail`).
  BitVector concat(const BitVector& tail) const;
  // Copy placed at `offset` inside a vector of length `size`.
  BitVector embed(std::size_t size, std::size_t offset) const;

  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incrementally maintained reduced row echelon form of an affine GF(2)
// system M·x = c. Rows are kept fully reduced so membership tests are a
// single pass.
class Gf2System {
 public:
  explicit Gf2System(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }

  // Adds the equation row·x = rhs. Returns true when the row was independent
  // of the rows already present. A dependent row with a contradicting rhs
  // marks the system inconsistent.
  bool add(BitVector row, bool rhs);

  struct Reduction {
    bool in_span = false;  // row is a combination of the system rows
    bool rhs = false;      // implied value of row·x when in_span
  };
  Reduction reduce(const BitVector& row) const;

  std::span<const BitVector> rows() const { return rows_; }
  std::span<const std::uint8_t> rhs() const { return rhs_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

 private:
  std::size_t columns_;
  std::vector<BitVector> rows_;
  std::vector<std::uint8_t> rhs_;
  std::vector<std::size_t> pivots_;
  bool consistent_ = true;
};

// Basis of {x : row·x = 0 for every row}, one vector per free column.
std::vector<BitVector> nullspace_basis(std::span<const BitVector> rows,
                                       std::size_t columns);

}  // namespace grapheq

#endif  // GRAPHEQ_GF2_H_
