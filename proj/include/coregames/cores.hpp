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

#ifndef COREGAMES_CORES_HPP
#define COREGAMES_CORES_HPP

#include <span>
#include <vector>

#include "coregames/game.hpp"
#include "coregames/preference.hpp"

namespace coregames {

// A family of winning sets of players, given to the core operations.  Unlike
// a SimpleGame this accepts the empty family (with the convention that
// nothing is ever dominated, so core and core-plus are the whole agenda) and
// does not require the sets to be algebra members, so it serves a simple
// game's winning coalitions and an extended family's winning sets alike.
class WinningSets {
 public:
  // Rejects families containing the empty set.
  static WinningSets of(unsigned player_count, std::vector<Coalition> family);
  static WinningSets from_game(const SimpleGame& game);
  static WinningSets none(unsigned player_count);

  unsigned player_count() const { return player_count_; }
  std::span<const Coalition> family() const { return family_; }
  bool empty() const { return family_.empty(); }

 private:
  WinningSets(unsigned player_count, std::vector<Coalition> family)
      : player_count_(player_count), family_(std::move(family)) {}

  unsigned player_count_;
  std::vector<Coalition> family_;
};

// True iff some winning set unanimously prefers x to y.
bool dominates(const WinningSets& w, const Profile& profile, unsigned x,
               unsigned y);

// Agenda members undominated within the agenda.
AltMask core(const WinningSets& w, const Agenda& agenda,
             const Profile& profile);

// The core without majority dissatisfaction: agenda members that are maximal
// for at least one player in every winning set.  Computed as the intersection
// over winning sets of the union of the members' maximal sets.
AltMask core_plus(const WinningSets& w, const Agenda& agenda,
                  const Profile& profile);

// Set-to-point dominance: some winning set whose players each prefer some
// element of y_set (possibly different ones) to x.
bool extended_dominates(const WinningSets& w, const Profile& profile,
                        AltMask y_set, unsigned x);

}  // namespace coregames

#endif  // COREGAMES_CORES_HPP
