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

#include "coregames/coalition.hpp"

#include <algorithm>

namespace coregames {

bool coalition_less(const Coalition& a, const Coalition& b) {
  std::size_t sa = a.size();
  std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  // Same size: compare bit patterns numerically, most significant word first.
  std::size_t k = std::max(a.word_count(), b.word_count());
  for (std::size_t w = k; w-- > 0;) {
    if (a.word(w) != b.word(w)) return a.word(w) < b.word(w);
  }
  return false;
}

Algebra Algebra::from_partition(PlayerSet players, std::vector<Coalition> blocks) {
  Coalition seen;
  for (const Coalition& b : blocks) {
    if (b.empty()) throw PartitionError("partition block is empty");
    if (!b.fits_within(players.count))
      throw PartitionError("partition block mentions a player outside 0..n-1");
    if (seen.intersects(b)) throw PartitionError("partition blocks overlap");
    seen = seen | b;
  }
  if (seen != Coalition::full(players.count))
    throw PartitionError("partition blocks do not cover the player set");

  std::sort(blocks.begin(), blocks.end(), coalition_less);
  Algebra a;
  a.player_count_ = players.count;
  a.blocks_ = std::move(blocks);
  return a;
}

Algebra Algebra::full(unsigned player_count) {
  std::vector<Coalition> singletons;
  singletons.reserve(player_count);
  for (unsigned i = 0; i < player_count; ++i) singletons.push_back(Coalition::of({i}));
  return from_partition(PlayerSet(player_count), std::move(singletons));
}

bool Algebra::contains(const Coalition& s) const {
  if (!s.fits_within(player_count_))
    throw ValidationError("coalition mentions a player outside 0..n-1");
  for (const Coalition& b : blocks_) {
    if (b.intersects(s) && !b.is_subset_of(s)) return false;
  }
  return true;
}

Coalition Algebra::closure(const Coalition& s) const {
  if (!s.fits_within(player_count_))
    throw ValidationError("coalition mentions a player outside 0..n-1");
  Coalition c;
  for (const Coalition& b : blocks_) {
    if (b.intersects(s)) c = c | b;
  }
  return c;
}

std::vector<Coalition> Algebra::members() const {
  if (blocks_.size() > 20)
    throw ScaleError("algebra member enumeration guarded at 20 blocks");
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << blocks_.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks_.size()); ++mask) {
    Coalition u;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) u = u | blocks_[i];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end(), coalition_less);
  return out;
}

std::vector<std::vector<Coalition>> all_partitions(unsigned n) {
  if (n == 0 || n > 10)
    throw ScaleError("partition enumeration guarded at 1 <= n <= 10");
  std::vector<std::vector<Coalition>> result;
  std::vector<unsigned> rgs(n, 0);
  // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(rgs[0..i-1]) + 1.
  while (true) {
    unsigned block_count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Coalition> blocks(block_count);
    for (unsigned i = 0; i < n; ++i) blocks[rgs[i]].add(i);
    result.push_back(std::move(blocks));

    // Next string in lexicographic order.
    unsigned i = n;
    while (i-- > 1) {
      unsigned prefix_max = 0;
      for (unsigned j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        for (unsigned j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      if (i == 1) return result;
      rgs[i] = 0;
    }
    if (n == 1) return result;
  }
}

}  // namespace coregames
