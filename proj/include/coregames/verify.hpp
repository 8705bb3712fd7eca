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

#ifndef COREGAMES_VERIFY_HPP
#define COREGAMES_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coregames/extended.hpp"
#include "coregames/game.hpp"
#include "coregames/preference.hpp"
#include "coregames/witness.hpp"

namespace coregames {

// What to quantify over when sweeping profiles.
//
// A measurable profile assigns, for every ordered pair of alternatives, a
// coalition of supporters that is a union of algebra blocks, so all players
// of a block share one preference.  The sweep therefore enumerates one
// relation per block, which for the full power-set algebra is one relation
// per player.
enum class ProfileEnumerationMode {
  kFullAsymmetric,   // every asymmetric relation on the agenda
  kAcyclicOnly,      // acyclic relations only
  kLinearOnly,       // linear orders on the agenda only
  kMaximalSetsOnly,  // only the per-player maximal-set assignment; sound for
                     // core-plus checks, which are tops-only
};

// Relations on an agenda of the given size, each exactly once, in a fixed
// deterministic order.  FullAsymmetric yields 3^(m choose 2) relations; with
// require_maximal the ones with an empty maximal set are dropped.
// MaximalSetsOnly yields one canonical representative per nonempty maximal
// set.  Guarded: agenda size at most 5 for FullAsymmetric and AcyclicOnly.
std::vector<Preference> enumerate_preferences_for(
    unsigned agenda_size, ProfileEnumerationMode mode,
    bool require_maximal = false);

struct ProfileCounterexample {
  std::string statement;        // which quantified statement it falsifies
  std::uint64_t profile_index;  // position in the fixed total profile order
  Profile profile;              // on the ambient X, pairs inside the agenda
};

// Machine-readable outcome of an exhaustive equivalence check.
struct TheoremReport {
  std::vector<std::pair<std::string, bool>> statements;
  bool agree = false;
  std::optional<ProfileCounterexample> counterexample;
  std::uint64_t profiles_enumerated = 0;
  std::uint64_t core_computations = 0;
  std::string evidence;  // "enumeration" or "witness"
  std::vector<std::string> notes;

  bool statement(const std::string& name) const;
};

// Checks that the following agree for the game and agenda:
//   (i)   #B < nakamura number,
//   (ii)  core-plus nonempty for every measurable profile for B,
//   (iii) core nonempty for every measurable profile for B.
// (ii)/(iii) are decided by exhaustive enumeration within the guards
// (agenda size <= 4 and <= 4 algebra blocks for relation modes; agenda size
// <= 5 for MaximalSetsOnly, which decides (ii) only).  Outside the guards,
// when #B >= nu the constructive witness settles (ii) and (iii) negatively;
// otherwise a ScaleError is raised.
TheoremReport check_nakamura_equivalence(
    const SimpleGame& game, const Agenda& agenda,
    ProfileEnumerationMode mode = ProfileEnumerationMode::kFullAsymmetric,
    unsigned jobs = 1);

// Checks, over measurable profiles of acyclic preferences, that the core is
// always nonempty iff #B < nu, and that the dominance relation on all of X
// is always acyclic iff #X < nu.
TheoremReport check_acyclic_theorem(const SimpleGame& game,
                                    const Agenda& agenda, unsigned jobs = 1);

// Extended-framework check:
//   (i)   #B < kappa number,
//   (ii)  core-plus w.r.t. the family nonempty for every measurable profile
//         for B,
//   (iii) core w.r.t. the family nonempty for every such profile.
// Verifies (i) <=> (ii) and that (ii) implies (iii); the converse of the
// implication is never asserted.
TheoremReport check_extended_equivalence(
    const WinningFamily& family, const Agenda& agenda,
    ProfileEnumerationMode mode = ProfileEnumerationMode::kFullAsymmetric,
    unsigned jobs = 1);

// A separating instance found by the divergence search.
struct DivergenceInstance {
  unsigned players = 0;
  std::vector<Coalition> blocks;
  std::vector<Coalition> sets;
  unsigned alternative_count = 0;
  AltMask agenda_mask = 0;
  std::optional<Profile> profile;
  std::string detail;
};

struct DivergenceReport {
  // (a) nu' strictly below kappa.
  std::optional<DivergenceInstance> nu_prime_below_kappa;
  // (b) core-plus of the family differs from core-plus of the induced game.
  std::optional<DivergenceInstance> family_vs_induced;
  // (c) core-plus strictly inside core ∩ union of maximal sets.
  std::optional<DivergenceInstance> coreplus_strict;
  std::uint64_t instances_examined = 0;
};

// Searches partitions, families, and profiles (in a fixed deterministic
// order, smallest instances first) for the three separation phenomena,
// stopping each category at its first hit.  Guarded: n_max <= 6, m_max <= 4.
DivergenceReport search_divergence_instance(unsigned n_max, unsigned m_max);

}  // namespace coregames

#endif  // COREGAMES_VERIFY_HPP
