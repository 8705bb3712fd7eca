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

#ifndef COREGAMES_EXTENDED_HPP
#define COREGAMES_EXTENDED_HPP

#include <optional>
#include <span>
#include <vector>

#include "coregames/cores.hpp"
#include "coregames/game.hpp"

namespace coregames {

// The ground collection B' of player sets that can be assigned winning or
// losing status.  Either all subsets (kept symbolic, never materialized) or
// an explicit list.
class GroundCollection {
 public:
  static GroundCollection all_subsets();
  static GroundCollection explicit_sets(std::vector<Coalition> sets);

  bool is_all() const { return all_; }
  bool contains(const Coalition& s) const;
  std::span<const Coalition> sets() const { return sets_; }

 private:
  GroundCollection() = default;

  bool all_ = true;
  std::vector<Coalition> sets_;
};

// A collection W' of winning sets inside a ground collection B' that extends
// the coalition algebra B.  Sets are stored deduplicated in canonical order.
class WinningFamily {
 public:
  static WinningFamily create(Algebra algebra, GroundCollection ground,
                              std::vector<Coalition> sets);

  const Algebra& algebra() const { return algebra_; }
  const GroundCollection& ground() const { return ground_; }
  std::span<const Coalition> sets() const { return sets_; }
  unsigned player_count() const { return algebra_.player_count(); }

 private:
  WinningFamily(Algebra algebra, GroundCollection ground,
                std::vector<Coalition> sets)
      : algebra_(std::move(algebra)),
        ground_(std::move(ground)),
        sets_(std::move(sets)) {}

  Algebra algebra_;
  GroundCollection ground_;
  std::vector<Coalition> sets_;
};

// The simple game induced by the family: its sets that are algebra members.
// May be empty; the cores module's empty-family convention applies.
WinningSets induced_game(const WinningFamily& family);

// Minimum size of a subfamily of the winning sets with empty intersection.
ExtendedCardinal nu_prime(const WinningFamily& family);

// Nakamura number of the induced game, read as infinite when the induced
// family is empty so the nu' <= kappa <= nu chain stays assertable.
ExtendedCardinal induced_nakamura(const WinningFamily& family);

struct KappaResult {
  ExtendedCardinal number = ExtendedCardinal::infinite();
  // A minimum subfamily whose closures have empty intersection, with the
  // closures; both in the family's canonical order, empty when infinite.
  std::vector<Coalition> witness_sets;
  std::vector<Coalition> witness_closures;
};

// Kappa number, closure fast path.  For finite players every finite cover
// merges into a single algebra member containing the set, and the least such
// member is the closure, so kappa is the minimum size of a subfamily whose
// closures have empty intersection.  Validated against the brute-force
// oracle below.
KappaResult kappa_number(const WinningFamily& family);

// A pair of a subfamily and, per member, an explicit algebra cover whose
// unions intersect to the empty set.
struct CoverPair {
  std::vector<Coalition> y_family;
  std::vector<std::vector<Coalition>> covers;
};

struct BruteforceKappaResult {
  ExtendedCardinal number = ExtendedCardinal::infinite();
  std::optional<CoverPair> witness;
};

// Enumeration of every algebra cover of size at most cover_size_limit,
// reduced to the achievable union masks with the smallest cover size per
// union and one representative cover each.  Reusable across families over
// the same algebra; the sweep suites build it once per partition.
struct CoverTable {
  unsigned player_count = 0;
  std::size_t cover_size_limit = 0;
  std::vector<std::uint64_t> unions;                    // achievable unions
  std::vector<std::uint32_t> min_cover_size;            // aligned with unions
  std::vector<std::vector<std::uint64_t>> representative;  // one cover each
};

// Guarded: at most 8 players.
CoverTable make_cover_table(const Algebra& algebra,
                            std::size_t cover_size_limit);

// Oracle evaluation of the kappa number: direct minimization of
// max{#Y, max #Z(W)} over subfamilies Y and explicit per-set algebra covers
// of size at most cover_size_limit.  Guarded: at most 8 players and 6 sets.
BruteforceKappaResult kappa_number_bruteforce(const WinningFamily& family,
                                              std::size_t cover_size_limit);
BruteforceKappaResult kappa_number_bruteforce(const WinningFamily& family,
                                              std::size_t cover_size_limit,
                                              const CoverTable& table);

}  // namespace coregames

#endif  // COREGAMES_EXTENDED_HPP
