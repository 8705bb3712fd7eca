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

#include "coregames/extended.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace coregames {

GroundCollection GroundCollection::all_subsets() { return GroundCollection(); }

GroundCollection GroundCollection::explicit_sets(std::vector<Coalition> sets) {
  GroundCollection g;
  g.all_ = false;
  std::sort(sets.begin(), sets.end(), coalition_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  g.sets_ = std::move(sets);
  return g;
}

bool GroundCollection::contains(const Coalition& s) const {
  if (all_) return true;
  return std::binary_search(sets_.begin(), sets_.end(), s, coalition_less);
}

WinningFamily WinningFamily::create(Algebra algebra, GroundCollection ground,
                                    std::vector<Coalition> sets) {
  if (sets.empty()) throw FamilyError("winning-set family must be nonempty");
  for (const Coalition& s : sets) {
    if (s.empty()) throw FamilyError("the empty set cannot be winning");
    if (!s.fits_within(algebra.player_count()))
      throw FamilyError("winning set mentions a player outside 0..n-1");
    if (!ground.contains(s))
      throw FamilyError("winning set is not in the ground collection");
  }
  if (!ground.is_all()) {
    for (const Coalition& member : algebra.members())
      if (!ground.contains(member))
        throw FamilyError("ground collection does not extend the algebra");
  }
  std::sort(sets.begin(), sets.end(), coalition_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return WinningFamily(std::move(algebra), std::move(ground), std::move(sets));
}

WinningSets induced_game(const WinningFamily& family) {
  std::vector<Coalition> coalitions;
  for (const Coalition& s : family.sets())
    if (family.algebra().contains(s)) coalitions.push_back(s);
  return WinningSets::of(family.player_count(), std::move(coalitions));
}

ExtendedCardinal nu_prime(const WinningFamily& family) {
  return min_empty_intersection(family.sets()).size;
}

ExtendedCardinal induced_nakamura(const WinningFamily& family) {
  WinningSets induced = induced_game(family);
  if (induced.empty()) return ExtendedCardinal::infinite();
  return min_empty_intersection(induced.family()).size;
}

KappaResult kappa_number(const WinningFamily& family) {
  std::vector<Coalition> closures;
  closures.reserve(family.sets().size());
  for (const Coalition& s : family.sets())
    closures.push_back(family.algebra().closure(s));

  KappaResult out;
  SubfamilySearchResult found = min_empty_intersection(closures);
  out.number = found.size;
  for (std::size_t i : found.indices) {
    out.witness_sets.push_back(family.sets()[i]);
    out.witness_closures.push_back(closures[i]);
  }
  return out;
}

CoverTable make_cover_table(const Algebra& algebra,
                            std::size_t cover_size_limit) {
  unsigned n = algebra.player_count();
  if (n > 8) throw ScaleError("cover enumeration guarded at 8 players");
  if (cover_size_limit == 0)
    throw ValidationError("cover size limit must be positive");

  std::vector<std::uint64_t> members;
  for (const Coalition& m : algebra.members())
    if (!m.empty()) members.push_back(m.mask());

  // Walk every cover (nonempty subset of members of size at most the limit)
  // and keep, per achieved union, the smallest cover and one representative.
  std::vector<std::uint32_t> min_size(std::size_t{1} << n, 0);
  std::vector<std::vector<std::uint64_t>> rep(std::size_t{1} << n);
  std::vector<std::uint64_t> picked;
  auto walk = [&](auto&& self, std::size_t start, std::uint64_t union_so_far) -> void {
    if (!picked.empty()) {
      std::uint32_t size = static_cast<std::uint32_t>(picked.size());
      if (min_size[union_so_far] == 0 || size < min_size[union_so_far]) {
        min_size[union_so_far] = size;
        rep[union_so_far] = picked;
      }
      if (picked.size() == cover_size_limit) return;
    }
    for (std::size_t i = start; i < members.size(); ++i) {
      picked.push_back(members[i]);
      self(self, i + 1, union_so_far | members[i]);
      picked.pop_back();
    }
  };
  walk(walk, 0, 0);

  CoverTable table;
  table.player_count = n;
  table.cover_size_limit = cover_size_limit;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
    if (min_size[u] == 0) continue;
    table.unions.push_back(u);
    table.min_cover_size.push_back(min_size[u]);
    table.representative.push_back(std::move(rep[u]));
  }
  return table;
}

namespace {

// Does some choice of one admissible union per remaining set drive the
// running intersection to empty?  Memoized on (position, intersection);
// fills the chosen union indices on success.
bool choice_with_empty_intersection(
    const std::vector<std::vector<std::uint32_t>>& admissible,
    const std::vector<std::size_t>& positions, std::size_t depth,
    std::uint64_t intersection, const CoverTable& table,
    std::uint32_t max_cover_size, std::vector<std::vector<bool>>& failed,
    std::vector<std::uint32_t>& choice) {
  if (depth == positions.size()) return intersection == 0;
  if (failed[depth][intersection]) return false;
  for (std::uint32_t c : admissible[positions[depth]]) {
    if (table.min_cover_size[c] > max_cover_size) continue;
    choice[depth] = c;
    if (choice_with_empty_intersection(admissible, positions, depth + 1,
                                       intersection & table.unions[c], table,
                                       max_cover_size, failed, choice))
      return true;
  }
  failed[depth][intersection] = true;
  return false;
}

}  // namespace

BruteforceKappaResult kappa_number_bruteforce(const WinningFamily& family,
                                              std::size_t cover_size_limit) {
  return kappa_number_bruteforce(
      family, cover_size_limit,
      make_cover_table(family.algebra(), cover_size_limit));
}

BruteforceKappaResult kappa_number_bruteforce(const WinningFamily& family,
                                              std::size_t cover_size_limit,
                                              const CoverTable& table) {
  unsigned n = family.player_count();
  if (n > 8 || family.sets().size() > 6)
    throw ScaleError("kappa brute force guarded at 8 players and 6 sets");
  if (table.player_count != n || table.cover_size_limit != cover_size_limit)
    throw ValidationError("cover table does not match the family");

  // Per winning set, the admissible cover unions (those containing it), as
  // indices into the table in ascending mask order.
  std::size_t set_count = family.sets().size();
  std::vector<std::vector<std::uint32_t>> admissible(set_count);
  for (std::size_t w = 0; w < set_count; ++w) {
    std::uint64_t set_mask = family.sets()[w].mask();
    for (std::uint32_t u = 0; u < table.unions.size(); ++u)
      if ((set_mask & ~table.unions[u]) == 0) admissible[w].push_back(u);
  }

  std::uint64_t everyone = Coalition::full(n).mask();
  std::size_t intersection_values = std::size_t{1} << n;

  BruteforceKappaResult best;
  // Subfamilies in ascending size then lexicographic order; the achieved
  // value is at least the subfamily size, so stop once that bound reaches
  // the best value found.
  for (std::size_t y_size = 1; y_size <= set_count; ++y_size) {
    if (best.number.is_finite() && y_size >= best.number.finite_value()) break;
    std::vector<std::size_t> positions(y_size);
    std::vector<std::vector<bool>> failed(
        y_size, std::vector<bool>(intersection_values, false));
    std::vector<std::uint32_t> choice(y_size);
    auto try_subfamily = [&]() {
      for (std::uint32_t s = 1; s <= cover_size_limit; ++s) {
        for (auto& row : failed) std::fill(row.begin(), row.end(), false);
        if (!choice_with_empty_intersection(admissible, positions, 0, everyone,
                                            table, s, failed, choice))
          continue;
        std::size_t value = std::max<std::size_t>(y_size, s);
        if (!best.number.is_finite() || value < best.number.finite_value()) {
          best.number = ExtendedCardinal::finite(value);
          CoverPair pair;
          for (std::size_t d = 0; d < y_size; ++d) {
            pair.y_family.push_back(family.sets()[positions[d]]);
            std::vector<Coalition> cover;
            for (std::uint64_t m : table.representative[choice[d]])
              cover.push_back(Coalition::from_mask(m));
            pair.covers.push_back(std::move(cover));
          }
          best.witness = std::move(pair);
        }
        break;
      }
    };
    auto combos = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
      if (depth == y_size) {
        try_subfamily();
        return;
      }
      for (std::size_t i = start; i + (y_size - depth) <= set_count; ++i) {
        positions[depth] = i;
        self(self, depth + 1, i + 1);
      }
    };
    combos(combos, 0, 0);
  }
  return best;
}

}  // namespace coregames
