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

#include "coregames/cores.hpp"

#include <algorithm>

namespace coregames {

WinningSets WinningSets::of(unsigned player_count,
                            std::vector<Coalition> family) {
  for (const Coalition& s : family) {
    if (s.empty())
      throw FamilyError("the empty set cannot be a winning set");
    if (!s.fits_within(player_count))
      throw ValidationError("winning set mentions a player outside 0..n-1");
  }
  std::sort(family.begin(), family.end(), coalition_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return WinningSets(player_count, std::move(family));
}

WinningSets WinningSets::from_game(const SimpleGame& game) {
  std::vector<Coalition> family(game.winning().begin(), game.winning().end());
  return WinningSets(game.algebra().player_count(), std::move(family));
}

WinningSets WinningSets::none(unsigned player_count) {
  return WinningSets(player_count, {});
}

namespace {

bool contains_winning_set(const WinningSets& w, const Coalition& players) {
  for (const Coalition& s : w.family())
    if (s.is_subset_of(players)) return true;
  return false;
}

}  // namespace

bool dominates(const WinningSets& w, const Profile& profile, unsigned x,
               unsigned y) {
  return contains_winning_set(w, supporters(profile, x, y));
}

AltMask core(const WinningSets& w, const Agenda& agenda,
             const Profile& profile) {
  AltMask out = 0;
  for (unsigned x : agenda.members()) {
    bool dominated = false;
    for (unsigned y : agenda.members()) {
      if (y == x) continue;
      if (dominates(w, profile, y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out |= AltMask{1} << x;
  }
  return out;
}

AltMask core_plus(const WinningSets& w, const Agenda& agenda,
                  const Profile& profile) {
  std::vector<AltMask> maximal(profile.player_count());
  for (unsigned i = 0; i < profile.player_count(); ++i)
    maximal[i] = maximal_set(profile.of(i), agenda);

  AltMask out = agenda.mask();
  for (const Coalition& s : w.family()) {
    AltMask satisfied_somewhere = 0;
    for (unsigned i : s.members()) satisfied_somewhere |= maximal[i];
    out &= satisfied_somewhere;
  }
  return out;
}

bool extended_dominates(const WinningSets& w, const Profile& profile,
                        AltMask y_set, unsigned x) {
  Coalition satisfied;
  for (unsigned i = 0; i < profile.player_count(); ++i)
    if ((profile.of(i).above(x) & y_set) != 0) satisfied.add(i);
  return contains_winning_set(w, satisfied);
}

}  // namespace coregames
