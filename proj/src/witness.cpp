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

#include "coregames/witness.hpp"

#include <algorithm>
#include <utility>

namespace coregames {

namespace {

// The first nu agenda members in X-label order.
std::vector<unsigned> pick_cycle(const Agenda& agenda, std::size_t nu) {
  std::vector<unsigned> members = agenda.members();
  members.resize(nu);
  return members;
}

// Cycle profile: the edge (x_{k+1}, x_k) is held exactly by supporters[k],
// and every player prefers x_0 to each agenda alternative outside the cycle.
Profile cycle_profile(unsigned player_count, unsigned alternative_count,
                      const Agenda& agenda, const std::vector<unsigned>& cycle,
                      const std::vector<Coalition>& supporters) {
  std::size_t nu = cycle.size();
  AltMask cycle_mask = 0;
  for (unsigned x : cycle) cycle_mask |= AltMask{1} << x;

  Profile profile;
  profile.preferences.reserve(player_count);
  for (unsigned i = 0; i < player_count; ++i) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (std::size_t k = 0; k < nu; ++k) {
      if (supporters[k].contains(i))
        pairs.emplace_back(cycle[(k + 1) % nu], cycle[k]);
    }
    for (unsigned y : agenda.members()) {
      if (!((cycle_mask >> y) & 1)) pairs.emplace_back(cycle[0], y);
    }
    profile.preferences.push_back(
        Preference::from_pairs(alternative_count, pairs));
  }
  return profile;
}

void require_witnessable(ExtendedCardinal number, const Agenda& agenda,
                         const char* which) {
  if (!number.is_finite())
    throw PreconditionError(std::string(which) + " is infinite");
  if (number.finite_value() > agenda.size())
    throw PreconditionError(std::string(which) +
                            " exceeds the agenda size");
}

}  // namespace

WitnessProfile empty_core_witness(const SimpleGame& game, const Agenda& agenda) {
  NakamuraResult nak = nakamura_number(game);
  require_witnessable(nak.number, agenda, "nakamura number");
  std::size_t nu = nak.number.finite_value();

  WitnessProfile out;
  out.cycle_alternatives = pick_cycle(agenda, nu);
  out.subfamily = nak.witness;
  out.profile =
      cycle_profile(game.algebra().player_count(), agenda.x_size(), agenda,
                    out.cycle_alternatives, out.subfamily);
  return out;
}

WitnessProfile empty_core_linear_witness(const SimpleGame& game,
                                         const Agenda& agenda,
                                         const AlternativeSet& x) {
  if (x.size() != agenda.x_size())
    throw ValidationError("agenda and alternative set sizes disagree");
  NakamuraResult nak = nakamura_number(game);
  require_witnessable(nak.number, agenda, "nakamura number");
  std::size_t nu = nak.number.finite_value();
  unsigned n = game.algebra().player_count();

  WitnessProfile out;
  out.cycle_alternatives = pick_cycle(agenda, nu);
  out.subfamily = nak.witness;
  const std::vector<unsigned>& cycle = out.cycle_alternatives;

  // D_k = (L_0 ∩ ... ∩ L_{k-1}) \ L_k; each player lands in the first D_k
  // with k the least index whose coalition excludes them.  The witness
  // subfamily has empty intersection, so every player lands somewhere.
  std::vector<std::size_t> block_of(n);
  for (unsigned i = 0; i < n; ++i) {
    std::size_t k = 0;
    while (k < nu && out.subfamily[k].contains(i)) ++k;
    block_of[i] = k;  // k < nu by the empty-intersection property
  }

  // Alternatives outside the cycle, linearly ordered in descending X-label
  // order, strictly below every cycle alternative.
  AltMask cycle_mask = 0;
  for (unsigned c : cycle) cycle_mask |= AltMask{1} << c;
  std::vector<unsigned> tail;
  for (unsigned y = x.size(); y-- > 0;)
    if (!((cycle_mask >> y) & 1)) tail.push_back(y);

  // The linear order for D_k descends through the cycle from x_k:
  // x_k, x_{k-1}, ..., x_0, x_{nu-1}, ..., x_{k+1}, then the tail.
  std::vector<Preference> block_orders;
  block_orders.reserve(nu);
  for (std::size_t k = 0; k < nu; ++k) {
    std::vector<unsigned> sequence;
    sequence.reserve(x.size());
    for (std::size_t step = 0; step < nu; ++step)
      sequence.push_back(cycle[(k + nu - step) % nu]);
    sequence.insert(sequence.end(), tail.begin(), tail.end());

    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (std::size_t a = 0; a < sequence.size(); ++a)
      for (std::size_t b = a + 1; b < sequence.size(); ++b)
        pairs.emplace_back(sequence[a], sequence[b]);
    block_orders.push_back(Preference::from_pairs(x.size(), pairs));
  }

  out.profile.preferences.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    out.profile.preferences.push_back(block_orders[block_of[i]]);
  return out;
}

WitnessProfile empty_coreplus_witness_extended(const WinningFamily& family,
                                               const Agenda& agenda) {
  KappaResult kappa = kappa_number(family);
  require_witnessable(kappa.number, agenda, "kappa number");
  std::size_t k = kappa.number.finite_value();

  WitnessProfile out;
  out.cycle_alternatives = pick_cycle(agenda, k);
  out.subfamily = kappa.witness_sets;
  out.profile = cycle_profile(family.player_count(), agenda.x_size(), agenda,
                              out.cycle_alternatives, kappa.witness_closures);
  return out;
}

}  // namespace coregames
