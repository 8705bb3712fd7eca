// Copyright 2026 The coregames Authors
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

#ifndef COREGAMES_COALITION_HPP
#define COREGAMES_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "coregames/errors.hpp"

namespace coregames {

// A nonempty finite set of players, indexed 0..count-1.
struct PlayerSet {
  unsigned count = 0;

  explicit PlayerSet(unsigned n) : count(n) {
    if (n == 0) throw ValidationError("player set must be nonempty");
  }
};

// A set of players.  Players 0..63 live in an inline word; larger indices
// spill into extension words so any finite player set is representable with
// the same semantics.  Extension words are kept trimmed of trailing zeros so
// equality is plain member comparison.
class Coalition {
 public:
  Coalition() = default;

  static Coalition from_mask(std::uint64_t mask) {
    Coalition c;
    c.lo_ = mask;
    return c;
  }

  static Coalition of(std::initializer_list<unsigned> players) {
    Coalition c;
    for (unsigned p : players) c.add(p);
    return c;
  }

  static Coalition from_indices(std::span<const unsigned> players) {
    Coalition c;
    for (unsigned p : players) c.add(p);
    return c;
  }

  // Full player set {0..n-1}.
  static Coalition full(unsigned n) {
    Coalition c;
    unsigned w = 0;
    for (; n >= 64; n -= 64, ++w) c.word_ref(w) = ~std::uint64_t{0};
    if (n > 0) c.word_ref(w) = (std::uint64_t{1} << n) - 1;
    return c;
  }

  void add(unsigned player) { word_ref(player / 64) |= bit(player % 64); }

  bool contains(unsigned player) const {
    unsigned w = player / 64;
    if (w == 0) return (lo_ & bit(player)) != 0;
    if (w - 1 >= ext_.size()) return false;
    return (ext_[w - 1] & bit(player % 64)) != 0;
  }

  bool empty() const { return lo_ == 0 && ext_.empty(); }

  std::size_t size() const {
    std::size_t c = std::popcount(lo_);
    for (std::uint64_t w : ext_) c += std::popcount(w);
    return c;
  }

  // Lowest word; the whole set when all players are below 64.
  std::uint64_t mask() const { return lo_; }

  std::size_t word_count() const { return ext_.size() + 1; }
  std::uint64_t word(std::size_t w) const {
    if (w == 0) return lo_;
    return w - 1 < ext_.size() ? ext_[w - 1] : 0;
  }

  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    append_members(lo_, 0, out);
    for (std::size_t w = 0; w < ext_.size(); ++w)
      append_members(ext_[w], 64 * (static_cast<unsigned>(w) + 1), out);
    return out;
  }

  bool fits_within(unsigned n) const {
    Coalition overflow = *this;
    overflow.remove_all(full(n));
    return overflow.empty();
  }

  friend Coalition operator&(const Coalition& a, const Coalition& b) {
    Coalition r;
    r.lo_ = a.lo_ & b.lo_;
    std::size_t k = a.ext_.size() < b.ext_.size() ? a.ext_.size() : b.ext_.size();
    if (k > 0) {
      r.ext_.resize(k);
      for (std::size_t i = 0; i < k; ++i) r.ext_[i] = a.ext_[i] & b.ext_[i];
      r.trim();
    }
    return r;
  }

  friend Coalition operator|(const Coalition& a, const Coalition& b) {
    Coalition r;
    r.lo_ = a.lo_ | b.lo_;
    std::size_t k = a.ext_.size() > b.ext_.size() ? a.ext_.size() : b.ext_.size();
    if (k > 0) {
      r.ext_.resize(k, 0);
      for (std::size_t i = 0; i < a.ext_.size(); ++i) r.ext_[i] |= a.ext_[i];
      for (std::size_t i = 0; i < b.ext_.size(); ++i) r.ext_[i] |= b.ext_[i];
    }
    return r;
  }

  // Set difference this \ other, in place.
  void remove_all(const Coalition& other) {
    lo_ &= ~other.lo_;
    std::size_t k = ext_.size() < other.ext_.size() ? ext_.size() : other.ext_.size();
    for (std::size_t i = 0; i < k; ++i) ext_[i] &= ~other.ext_[i];
    trim();
  }

  friend Coalition difference(const Coalition& a, const Coalition& b) {
    Coalition r = a;
    r.remove_all(b);
    return r;
  }

  Coalition complement(unsigned n) const { return difference(full(n), *this); }

  bool is_subset_of(const Coalition& other) const {
    if ((lo_ & ~other.lo_) != 0) return false;
    for (std::size_t i = 0; i < ext_.size(); ++i) {
      std::uint64_t ow = i < other.ext_.size() ? other.ext_[i] : 0;
      if ((ext_[i] & ~ow) != 0) return false;
    }
    return true;
  }

  bool intersects(const Coalition& other) const {
    if ((lo_ & other.lo_) != 0) return true;
    std::size_t k = ext_.size() < other.ext_.size() ? ext_.size() : other.ext_.size();
    for (std::size_t i = 0; i < k; ++i)
      if ((ext_[i] & other.ext_[i]) != 0) return true;
    return false;
  }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.lo_ == b.lo_ && a.ext_ == b.ext_;
  }
  friend bool operator!=(const Coalition& a, const Coalition& b) {
    return !(a == b);
  }

 private:
  static std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

  std::uint64_t& word_ref(unsigned w) {
    if (w == 0) return lo_;
    if (ext_.size() < w) ext_.resize(w, 0);
    return ext_[w - 1];
  }

  static void append_members(std::uint64_t word, unsigned base,
                             std::vector<unsigned>& out) {
    while (word != 0) {
      unsigned i = static_cast<unsigned>(std::countr_zero(word));
      out.push_back(base + i);
      word &= word - 1;
    }
  }

  void trim() {
    while (!ext_.empty() && ext_.back() == 0) ext_.pop_back();
  }

  std::uint64_t lo_ = 0;
  std::vector<std::uint64_t> ext_;
};

// Canonical coalition order: by size, then by bit pattern (numerically, most
// significant word first).  Used everywhere a deterministic ordering of sets
// is promised.
bool coalition_less(const Coalition& a, const Coalition& b);

// A Boolean subalgebra of the power set of the player set, represented by its
// generating partition.  The algebra's members are exactly the unions of
// blocks, so membership and closure are O(#blocks) per query.
class Algebra {
 public:
  // Validates the partition invariants: nonempty pairwise-disjoint blocks
  // covering the player set.  Blocks are stored in canonical order.
  static Algebra from_partition(PlayerSet players, std::vector<Coalition> blocks);

  // The full power-set algebra 2^N (singleton partition).
  static Algebra full(unsigned player_count);

  unsigned player_count() const { return player_count_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::span<const Coalition> blocks() const { return blocks_; }

  // True iff s is a union of blocks: every block is contained in s or
  // disjoint from it.
  bool contains(const Coalition& s) const;

  // Union of all blocks meeting s: the least algebra member containing s.
  Coalition closure(const Coalition& s) const;

  // Every algebra member, in canonical coalition order.  Guarded: at most
  // 20 blocks.
  std::vector<Coalition> members() const;

  bool is_full_power_set() const { return blocks_.size() == player_count_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.player_count_ == b.player_count_ && a.blocks_ == b.blocks_;
  }

 private:
  Algebra() = default;

  unsigned player_count_ = 0;
  std::vector<Coalition> blocks_;
};

// All set partitions of {0..n-1}, each as a block list in canonical order.
// Enumerated via restricted growth strings; guarded at n <= 10.
std::vector<std::vector<Coalition>> all_partitions(unsigned n);

}  // namespace coregames

#endif  // COREGAMES_COALITION_HPP
