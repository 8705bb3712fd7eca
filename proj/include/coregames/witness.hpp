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

#ifndef COREGAMES_WITNESS_HPP
#define COREGAMES_WITNESS_HPP

#include <vector>

#include "coregames/extended.hpp"
#include "coregames/game.hpp"
#include "coregames/preference.hpp"

namespace coregames {

// A constructed profile proving core emptiness once the agenda is large
// enough, together with the cycle alternatives and the winning sets that
// drive the cycle.  The subfamily always has empty intersection and one
// member per cycle alternative.
struct WitnessProfile {
  Profile profile;
  std::vector<unsigned> cycle_alternatives;
  std::vector<Coalition> subfamily;
};

// Builds a measurable profile for the agenda whose dominance relation cycles
// through the first nu agenda alternatives, so the core is empty.  The cycle
// edge from x_{k+1} down to x_k is supported exactly by the k-th coalition of
// a minimum witnessing subfamily, and every player keeps the maximal set
// { x_k : player outside L_k }.  Requires finite nu <= agenda size.
WitnessProfile empty_core_witness(const SimpleGame& game, const Agenda& agenda);

// Variant in which every player holds a full linear order on X with exactly
// one maximal agenda element.  Players are partitioned into coalitions
// D_k = (L_0 ∩ ... ∩ L_{k-1}) \ L_k, and everyone in D_k ranks the cycle
// alternatives downward from x_k, with the remaining alternatives linearly
// ordered strictly below the cycle.  Core is again empty.
WitnessProfile empty_core_linear_witness(const SimpleGame& game,
                                         const Agenda& agenda,
                                         const AlternativeSet& x);

// Extended-framework variant: the cycle edges are supported by the closures
// of a minimum kappa-witnessing subfamily, which are algebra members, so the
// profile is measurable and the core without majority dissatisfaction with
// respect to the family is empty.  Requires finite kappa <= agenda size.
WitnessProfile empty_coreplus_witness_extended(const WinningFamily& family,
                                               const Agenda& agenda);

}  // namespace coregames

#endif  // COREGAMES_WITNESS_HPP
