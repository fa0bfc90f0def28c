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

#include "grapheq/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grapheq {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_indices(std::size_t size, std::span<const int> indices) {
  BitVector out(size);
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= size) {
      throw std::out_of_range("bit index " + std::to_string(i) + " out of range");
    }
    out.set(static_cast<std::size_t>(i));
  }
  return out;
}

BitVector BitVector::from_indices(std::size_t size, std::initializer_list<int> indices) {
  return from_indices(size, std::span<const int>(indices.begin(), indices.size()));
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
  }
  return out;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::vector<int> BitVector::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

bool BitVector::subset_of(const BitVector& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(size_ + tail.size_);
  for (int i : indices()) out.set(static_cast<std::size_t>(i));
  for (int i : tail.indices()) out.set(size_ + static_cast<std::size_t>(i));
  return out;
}

BitVector BitVector::embed(std::size_t size, std::size_t offset) const {
  BitVector out(size);
  for (int i : indices()) out.set(offset + static_cast<std::size_t>(i));
  return out;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Lexicographic on the bit string, entry 0 first.
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool Gf2System::add(BitVector row, bool rhs) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row.get(pivots_[r])) {
      row ^= rows_[r];
      rhs ^= rhs_[r] != 0;
    }
  }
  const std::size_t pivot = row.first();
  if (pivot == row.size()) {
    if (rhs) consistent_ = false;
    return false;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(pivot)) {
      rows_[r] ^= row;
      rhs_[r] ^= static_cast<std::uint8_t>(rhs);
    }
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(static_cast<std::uint8_t>(rhs));
  pivots_.push_back(pivot);
  return true;
}

Gf2System::Reduction Gf2System::reduce(const BitVector& row) const {
  BitVector residual = row;
  bool rhs = false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (residual.get(pivots_[r])) {
      residual ^= rows_[r];
      rhs ^= rhs_[r] != 0;
    }
  }
  return {residual.none(), rhs};
}

std::vector<BitVector> nullspace_basis(std::span<const BitVector> rows, std::size_t columns) {
  Gf2System system(columns);
  for (const BitVector& row : rows) system.add(row, false);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : system.pivots()) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(columns);
    v.set(free);
    // Fully reduced rows: pivot variable equals the sum of its free entries.
    for (std::size_t r = 0; r < system.rank(); ++r) {
      if (system.rows()[r].get(free)) v.set(system.pivots()[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace grapheq
