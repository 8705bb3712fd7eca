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

#ifndef COREGAMES_PREFERENCE_HPP
#define COREGAMES_PREFERENCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coregames/coalition.hpp"
#include "coregames/errors.hpp"

namespace coregames {

// A set of alternatives, as a bitmask over the indices of an AlternativeSet.
using AltMask = std::uint64_t;

// The set X of alternatives.  Labels are strings at the I/O boundary; all
// computation uses the dense indices 0..size-1.  At most 64 alternatives.
class AlternativeSet {
 public:
  static AlternativeSet of(std::vector<std::string> labels);

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::string& label(unsigned i) const { return labels_[i]; }
  std::span<const std::string> labels() const { return labels_; }

  // Index of a label; ValidationError if unknown.
  unsigned index_of(const std::string& label) const;

  std::vector<std::string> labels_of(AltMask mask) const;

 private:
  explicit AlternativeSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

// A nonempty subset of the alternatives actually on the table.  Carries the
// size of the ambient X so operations can validate consistency.
class Agenda {
 public:
  static Agenda all(const AlternativeSet& x);
  static Agenda of(const AlternativeSet& x, std::span<const std::string> labels);
  static Agenda from_mask(unsigned x_size, AltMask mask);

  AltMask mask() const { return mask_; }
  unsigned x_size() const { return x_size_; }
  unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(unsigned alt) const { return (mask_ >> alt) & 1; }

  // Agenda members as ascending X indices.
  std::vector<unsigned> members() const;

 private:
  Agenda(unsigned x_size, AltMask mask) : mask_(mask), x_size_(x_size) {}

  AltMask mask_;
  unsigned x_size_;
};

// An asymmetric strict preference on X, stored as an explicit relation:
// incomparability is the default and no ordering structure is assumed.
class Preference {
 public:
  static Preference none(unsigned alternative_count);

  // Validates asymmetry and irreflexivity.
  static Preference from_pairs(
      unsigned alternative_count,
      std::span<const std::pair<unsigned, unsigned>> pairs);

  unsigned alternative_count() const { return m_; }

  // True iff x is preferred to y.
  bool holds(unsigned x, unsigned y) const { return (beats_[x] >> y) & 1; }

  // Alternatives y with x preferred to y.
  AltMask below(unsigned x) const { return beats_[x]; }

  // Alternatives y preferred to x.
  AltMask above(unsigned x) const {
    AltMask up = 0;
    for (unsigned y = 0; y < m_; ++y) up |= ((beats_[y] >> x) & 1) << y;
    return up;
  }

  std::vector<std::pair<unsigned, unsigned>> pairs() const;

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.m_ == b.m_ && a.beats_ == b.beats_;
  }

 private:
  Preference(unsigned m, std::vector<AltMask> beats)
      : m_(m), beats_(std::move(beats)) {}

  unsigned m_;
  std::vector<AltMask> beats_;  // beats_[x] bit y set iff x is preferred to y
};

// One preference per player.
struct Profile {
  std::vector<Preference> preferences;

  unsigned player_count() const {
    return static_cast<unsigned>(preferences.size());
  }
  const Preference& of(unsigned player) const { return preferences[player]; }
};

// Agenda members with no strictly better agenda member under pref.
AltMask maximal_set(const Preference& pref, const Agenda& agenda);

// True iff the directed graph of the relation has no directed cycle.
bool is_acyclic(const Preference& pref);

// True iff the relation restricted to domain is transitive and total there.
bool is_linear_on(const Preference& pref, AltMask domain);

// The coalition of players preferring x to y.
Coalition supporters(const Profile& profile, unsigned x, unsigned y);

// True iff every supporter coalition {i : x >_i y} is an algebra member.
bool is_measurable(const Profile& profile, const Algebra& algebra,
                   const AlternativeSet& x);

// Measurable and every player has a maximal element on the agenda.
bool is_profile_for(const Profile& profile, const Agenda& agenda,
                    const Algebra& algebra);

// Agenda members not unanimously beaten by any agenda member.
AltMask pareto_set(const Profile& profile, const Agenda& agenda);

}  // namespace coregames

#endif  // COREGAMES_PREFERENCE_HPP
