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

#ifndef COREGAMES_GAME_HPP
#define COREGAMES_GAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "coregames/cardinal.hpp"
#include "coregames/coalition.hpp"

namespace coregames {

// A simple game: a nonempty family of nonempty winning coalitions, all of
// which are members of the algebra.  The winning list is stored deduplicated
// in canonical coalition order; witness subfamilies and reports refer to that
// order.
class SimpleGame {
 public:
  static SimpleGame create(Algebra algebra, std::vector<Coalition> winning);

  // Convenience quota game: S wins iff its total weight reaches the quota
  // (strictly exceeds it when strict is set).  Winning coalitions are the
  // qualifying algebra members.
  static SimpleGame weighted_majority(Algebra algebra,
                                      std::span<const long long> weights,
                                      long long quota, bool strict = false);

  // Simple majority over 2^N: coalitions with more than half the players.
  static SimpleGame majority(unsigned player_count);

  const Algebra& algebra() const { return algebra_; }
  std::span<const Coalition> winning() const { return winning_; }

 private:
  SimpleGame(Algebra algebra, std::vector<Coalition> winning)
      : algebra_(std::move(algebra)), winning_(std::move(winning)) {}

  Algebra algebra_;
  std::vector<Coalition> winning_;
};

// True iff the winning coalitions share a common player.
bool is_weak(const SimpleGame& game);

struct SubfamilySearchResult {
  ExtendedCardinal size = ExtendedCardinal::infinite();
  // Indices into the family, ascending; empty when size is infinite.
  std::vector<std::size_t> indices;
};

// Smallest subfamily with empty intersection, searched over subfamilies of
// ascending size with a branch-and-bound prune (a set that does not shrink
// the running intersection can never belong to a minimum witness).  Among
// minimum witnesses, returns the lexicographically least index tuple with
// respect to the family order given by the caller.
SubfamilySearchResult min_empty_intersection(std::span<const Coalition> family);

struct NakamuraResult {
  ExtendedCardinal number = ExtendedCardinal::infinite();
  // A minimum witnessing subfamily with empty intersection, in canonical
  // coalition order; empty when the game is weak.
  std::vector<Coalition> witness;
};

// Exact Nakamura number: infinite for weak games, otherwise the least k such
// that some k winning coalitions have empty intersection.
NakamuraResult nakamura_number(const SimpleGame& game);

}  // namespace coregames

#endif  // COREGAMES_GAME_HPP
