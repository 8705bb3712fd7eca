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

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "coregames/game.hpp"

using namespace coregames;

namespace {

// Full-enumeration oracle: the smallest subfamily with empty intersection,
// lexicographically least index tuple first, found by walking index
// combinations without any pruning.
std::optional<std::vector<std::size_t>> oracle_min_witness(
    const std::vector<Coalition>& family, unsigned player_count) {
  for (std::size_t k = 1; k <= family.size(); ++k) {
    std::vector<std::size_t> idx;
    auto walk = [&](auto&& self, std::size_t start) -> bool {
      if (idx.size() == k) {
        Coalition inter = Coalition::full(player_count);
        for (std::size_t i : idx) inter = inter & family[i];
        return inter.empty();
      }
      for (std::size_t i = start; i < family.size(); ++i) {
        idx.push_back(i);
        if (self(self, i + 1)) return true;
        idx.pop_back();
      }
      return false;
    };
    if (walk(walk, 0)) return idx;
  }
  return std::nullopt;
}

std::vector<Coalition> family_from_mask(unsigned n, std::uint32_t family_mask) {
  std::vector<Coalition> family;
  for (std::uint32_t c = 1; c < (1u << n); ++c)
    if ((family_mask >> (c - 1)) & 1) family.push_back(Coalition::from_mask(c));
  return family;
}

}  // namespace

TEST_CASE("simple game validation") {
  Algebra full3 = Algebra::full(3);
  SimpleGame maj3 = SimpleGame::majority(3);
  CHECK(maj3.winning().size() == 4);  // three pairs and the grand coalition

  CHECK_THROWS_AS(SimpleGame::create(full3, {}), GameError);
  CHECK_THROWS_AS(SimpleGame::create(full3, {Coalition()}), GameError);

  Algebra coarse = Algebra::from_partition(
      PlayerSet(3), {Coalition::of({0, 1}), Coalition::of({2})});
  CHECK_THROWS_AS(SimpleGame::create(coarse, {Coalition::of({0})}), GameError);
  CHECK_NOTHROW(SimpleGame::create(coarse, {Coalition::of({0, 1})}));
}

TEST_CASE("weakness is a nonempty intersection of winning coalitions") {
  Algebra full3 = Algebra::full(3);
  CHECK(is_weak(SimpleGame::create(full3, {Coalition::of({0, 1, 2})})));
  CHECK(!is_weak(SimpleGame::majority(3)));
  CHECK(!is_weak(
      SimpleGame::create(full3, {Coalition::of({0}), Coalition::of({1})})));
}

TEST_CASE("nakamura number of majority-of-three") {
  SimpleGame maj3 = SimpleGame::majority(3);
  NakamuraResult nak = nakamura_number(maj3);
  CHECK(nak.number == ExtendedCardinal::finite(3));

  // Independent check: no pair of winning coalitions intersects empty, and
  // the three two-player coalitions do.
  auto oracle = oracle_min_witness(
      {maj3.winning().begin(), maj3.winning().end()}, 3);
  REQUIRE(oracle.has_value());
  CHECK(oracle->size() == 3);
  REQUIRE(nak.witness.size() == 3);
  CHECK(nak.witness[0] == Coalition::of({0, 1}));
  CHECK(nak.witness[1] == Coalition::of({0, 2}));
  CHECK(nak.witness[2] == Coalition::of({1, 2}));
}

TEST_CASE("nakamura number edge cases") {
  Algebra full3 = Algebra::full(3);
  SimpleGame disjoint =
      SimpleGame::create(full3, {Coalition::of({0}), Coalition::of({1})});
  CHECK(nakamura_number(disjoint).number == ExtendedCardinal::finite(2));

  SimpleGame weak = SimpleGame::create(full3, {Coalition::of({0, 1, 2})});
  NakamuraResult nak = nakamura_number(weak);
  CHECK(nak.number == ExtendedCardinal::infinite());
  CHECK(nak.witness.empty());
}

TEST_CASE("lemma: nakamura bounds hold for every game on up to four players") {
  for (unsigned n = 1; n <= 4; ++n) {
    Algebra algebra = Algebra::full(n);
    std::uint32_t families = (1u << ((1u << n) - 1));
    for (std::uint32_t mask = 1; mask < families; ++mask) {
      SimpleGame game = SimpleGame::create(algebra, family_from_mask(n, mask));
      ExtendedCardinal nu = nakamura_number(game).number;
      if (is_weak(game)) {
        CHECK(nu == ExtendedCardinal::infinite());
        continue;
      }
      std::size_t min_size = game.winning()[0].size();
      for (const Coalition& s : game.winning())
        min_size = std::min(min_size, s.size());
      CHECK(ExtendedCardinal::finite(2) <= nu);
      CHECK(nu <= ExtendedCardinal::finite(min_size + 1));
      CHECK(nu <= ExtendedCardinal::finite(n));
    }
  }
}

TEST_CASE("witness subfamily matches the enumeration oracle") {
  // All 127 games on three players, plus a stride of the four-player games.
  for (unsigned n = 3; n <= 4; ++n) {
    std::uint32_t families = (1u << ((1u << n) - 1));
    std::uint32_t stride = n == 3 ? 1 : 7;
    for (std::uint32_t mask = 1; mask < families; mask += stride) {
      SimpleGame game =
          SimpleGame::create(Algebra::full(n), family_from_mask(n, mask));
      if (game.winning().size() > 12) continue;
      NakamuraResult nak = nakamura_number(game);
      std::vector<Coalition> family(game.winning().begin(),
                                    game.winning().end());
      auto oracle = oracle_min_witness(family, n);
      if (!oracle) {
        CHECK(nak.number == ExtendedCardinal::infinite());
        continue;
      }
      REQUIRE(nak.number == ExtendedCardinal::finite(oracle->size()));
      REQUIRE(nak.witness.size() == oracle->size());
      Coalition inter = Coalition::full(n);
      for (std::size_t i = 0; i < oracle->size(); ++i) {
        CHECK(nak.witness[i] == family[(*oracle)[i]]);
        inter = inter & nak.witness[i];
      }
      CHECK(inter.empty());
    }
  }
}

TEST_CASE("nakamura number is invariant under player permutations") {
  SimpleGame base = SimpleGame::create(
      Algebra::full(4),
      {Coalition::of({0, 1}), Coalition::of({1, 2}), Coalition::of({2, 3})});
  ExtendedCardinal nu = nakamura_number(base).number;

  std::vector<unsigned> perm = {0, 1, 2, 3};
  do {
    std::vector<Coalition> mapped;
    for (const Coalition& s : base.winning()) {
      Coalition t;
      for (unsigned p : s.members()) t.add(perm[p]);
      mapped.push_back(t);
    }
    SimpleGame permuted = SimpleGame::create(Algebra::full(4), mapped);
    CHECK(nakamura_number(permuted).number == nu);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("nakamura number survives block-preserving permutations") {
  // Swapping the two blocks of a coarse algebra maps winning coalitions to
  // winning coalitions and keeps the number.
  Algebra coarse = Algebra::from_partition(
      PlayerSet(4), {Coalition::of({0, 1}), Coalition::of({2, 3})});
  SimpleGame game = SimpleGame::create(
      coarse, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  std::vector<unsigned> swap_blocks = {2, 3, 0, 1};
  std::vector<Coalition> mapped;
  for (const Coalition& s : game.winning()) {
    Coalition t;
    for (unsigned p : s.members()) t.add(swap_blocks[p]);
    mapped.push_back(t);
  }
  SimpleGame permuted = SimpleGame::create(coarse, mapped);
  CHECK(nakamura_number(permuted).number == nakamura_number(game).number);
}

TEST_CASE("weighted majority constructor") {
  std::vector<long long> weights = {49, 49, 2};
  SimpleGame game =
      SimpleGame::weighted_majority(Algebra::full(3), weights, 51);
  // Every pair reaches 51; no singleton does.
  CHECK(game.winning().size() == 4);
  CHECK(nakamura_number(game).number == ExtendedCardinal::finite(3));

  // 49+49 = 98 misses a strict quota of 98; only the grand coalition passes.
  SimpleGame strict =
      SimpleGame::weighted_majority(Algebra::full(3), weights, 98, true);
  REQUIRE(strict.winning().size() == 1);
  CHECK(strict.winning()[0] == Coalition::of({0, 1, 2}));

  CHECK_THROWS_AS(
      SimpleGame::weighted_majority(Algebra::full(3), weights, 1000),
      GameError);
}

TEST_CASE("extended cardinal ordering") {
  ExtendedCardinal two = ExtendedCardinal::finite(2);
  ExtendedCardinal three = ExtendedCardinal::finite(3);
  ExtendedCardinal inf = ExtendedCardinal::infinite();
  CHECK(two < three);
  CHECK(three < inf);
  CHECK(two < inf);
  CHECK(!(inf < inf));
  CHECK(inf == inf);
  CHECK(inf <= inf);
  CHECK(two.to_string() == "2");
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.finite_value(), PreconditionError);
}

TEST_CASE("nakamura handles games on more than 64 players") {
  // Three overlapping blocks of a 70-player set; the game is the three
  // pairwise unions, which intersect pairwise but not jointly.
  Coalition a;
  Coalition b;
  Coalition c;
  for (unsigned i = 0; i < 70; ++i) {
    if (i % 3 == 0) a.add(i);
    if (i % 3 == 1) b.add(i);
    if (i % 3 == 2) c.add(i);
  }
  Algebra algebra = Algebra::from_partition(PlayerSet(70), {a, b, c});
  SimpleGame game = SimpleGame::create(algebra, {a | b, a | c, b | c});
  CHECK(nakamura_number(game).number == ExtendedCardinal::finite(3));
}

TEST_CASE("weighted majority strict threshold excludes the boundary") {
  std::vector<long long> weights = {1, 1, 1, 1};
  SimpleGame weak_quota =
      SimpleGame::weighted_majority(Algebra::full(4), weights, 2);
  SimpleGame strict_quota =
      SimpleGame::weighted_majority(Algebra::full(4), weights, 2, true);
  CHECK(weak_quota.winning().size() == 11);   // pairs, triples, grand
  CHECK(strict_quota.winning().size() == 5);  // triples and grand
}
