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

#include "coregames/game.hpp"

#include <algorithm>

namespace coregames {

namespace {

void canonicalize(std::vector<Coalition>& sets) {
  std::sort(sets.begin(), sets.end(), coalition_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

SimpleGame SimpleGame::create(Algebra algebra, std::vector<Coalition> winning) {
  if (winning.empty()) throw GameError("winning family must be nonempty");
  for (const Coalition& s : winning) {
    if (s.empty()) throw GameError("the empty coalition cannot be winning");
    if (!algebra.contains(s))
      throw GameError("winning coalition is not a member of the algebra");
  }
  canonicalize(winning);
  return SimpleGame(std::move(algebra), std::move(winning));
}

SimpleGame SimpleGame::weighted_majority(Algebra algebra,
                                         std::span<const long long> weights,
                                         long long quota, bool strict) {
  if (weights.size() != algebra.player_count())
    throw GameError("one weight per player required");
  std::vector<Coalition> winning;
  for (const Coalition& member : algebra.members()) {
    if (member.empty()) continue;
    long long total = 0;
    for (unsigned p : member.members()) total += weights[p];
    if (strict ? total > quota : total >= quota) winning.push_back(member);
  }
  return create(std::move(algebra), std::move(winning));
}

SimpleGame SimpleGame::majority(unsigned player_count) {
  std::vector<long long> weights(player_count, 1);
  return weighted_majority(Algebra::full(player_count), weights,
                           static_cast<long long>(player_count / 2) + 1);
}

bool is_weak(const SimpleGame& game) {
  Coalition common = Coalition::full(game.algebra().player_count());
  for (const Coalition& s : game.winning()) common = common & s;
  return !common.empty();
}

SubfamilySearchResult min_empty_intersection(std::span<const Coalition> family) {
  SubfamilySearchResult result;
  if (family.empty()) return result;

  Coalition common = family[0];
  Coalition all = family[0];
  for (const Coalition& s : family.subspan(1)) {
    common = common & s;
    all = all | s;
  }
  if (!common.empty()) return result;

  // Iterate target size k upward; enumerate index combinations in
  // lexicographic order so the first witness found at the minimum size is the
  // lexicographically least one.  A minimum witness never contains a set that
  // leaves the running intersection unchanged (dropping it would give a
  // smaller witness), so such extensions are pruned.  The family union seeds
  // the intersection, making the prune uniform at depth zero.
  std::vector<std::size_t> chosen;
  bool found = false;
  for (std::size_t k = 2; k <= family.size() && !found; ++k) {
    auto extend = [&](auto&& self, std::size_t start, const Coalition& inter) -> bool {
      for (std::size_t i = start; i + (k - chosen.size()) <= family.size(); ++i) {
        Coalition next = inter & family[i];
        if (next == inter) continue;
        chosen.push_back(i);
        if (chosen.size() == k) {
          if (next.empty()) return true;
        } else if (self(self, i + 1, next)) {
          return true;
        }
        chosen.pop_back();
      }
      return false;
    };
    found = extend(extend, 0, all);
  }
  if (found) {
    result.size = ExtendedCardinal::finite(chosen.size());
    result.indices = chosen;
  }
  return result;
}

NakamuraResult nakamura_number(const SimpleGame& game) {
  NakamuraResult out;
  SubfamilySearchResult found = min_empty_intersection(game.winning());
  out.number = found.size;
  for (std::size_t i : found.indices) out.witness.push_back(game.winning()[i]);
  return out;
}

}  // namespace coregames
