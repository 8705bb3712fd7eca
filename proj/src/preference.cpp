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

#include "coregames/preference.hpp"

#include <algorithm>
#include <bit>

namespace coregames {

AlternativeSet AlternativeSet::of(std::vector<std::string> labels) {
  if (labels.size() < 2)
    throw ValidationError("at least two alternatives required");
  if (labels.size() > 64)
    throw ValidationError("at most 64 alternatives supported");
  for (const std::string& l : labels) {
    if (l.empty()) throw ValidationError("alternative label must be nonempty");
  }
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("alternative labels must be distinct");
  return AlternativeSet(std::move(labels));
}

unsigned AlternativeSet::index_of(const std::string& label) const {
  for (unsigned i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("unknown alternative label: " + label);
}

std::vector<std::string> AlternativeSet::labels_of(AltMask mask) const {
  std::vector<std::string> out;
  for (unsigned i = 0; i < size(); ++i)
    if ((mask >> i) & 1) out.push_back(labels_[i]);
  return out;
}

Agenda Agenda::all(const AlternativeSet& x) {
  return Agenda(x.size(), x.size() == 64 ? ~AltMask{0}
                                         : (AltMask{1} << x.size()) - 1);
}

Agenda Agenda::of(const AlternativeSet& x, std::span<const std::string> labels) {
  AltMask mask = 0;
  for (const std::string& l : labels) mask |= AltMask{1} << x.index_of(l);
  return from_mask(x.size(), mask);
}

Agenda Agenda::from_mask(unsigned x_size, AltMask mask) {
  if (mask == 0) throw ValidationError("agenda must be nonempty");
  AltMask in_range =
      x_size == 64 ? ~AltMask{0} : (AltMask{1} << x_size) - 1;
  if ((mask & ~in_range) != 0)
    throw ValidationError("agenda mentions an alternative outside X");
  return Agenda(x_size, mask);
}

std::vector<unsigned> Agenda::members() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < x_size_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Preference Preference::none(unsigned alternative_count) {
  return Preference(alternative_count,
                    std::vector<AltMask>(alternative_count, 0));
}

Preference Preference::from_pairs(
    unsigned alternative_count,
    std::span<const std::pair<unsigned, unsigned>> pairs) {
  std::vector<AltMask> beats(alternative_count, 0);
  for (auto [x, y] : pairs) {
    if (x >= alternative_count || y >= alternative_count)
      throw ValidationError("preference pair mentions an unknown alternative");
    if (x == y) throw AsymmetryError("reflexive preference pair");
    if ((beats[y] >> x) & 1)
      throw AsymmetryError("both (x,y) and (y,x) present in preference");
    beats[x] |= AltMask{1} << y;
  }
  return Preference(alternative_count, std::move(beats));
}

std::vector<std::pair<unsigned, unsigned>> Preference::pairs() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned x = 0; x < m_; ++x)
    for (unsigned y = 0; y < m_; ++y)
      if (holds(x, y)) out.emplace_back(x, y);
  return out;
}

AltMask maximal_set(const Preference& pref, const Agenda& agenda) {
  AltMask beaten = 0;
  for (unsigned y = 0; y < pref.alternative_count(); ++y)
    if (agenda.contains(y)) beaten |= pref.below(y);
  return agenda.mask() & ~beaten;
}

bool is_acyclic(const Preference& pref) {
  unsigned m = pref.alternative_count();
  // Iterated source elimination: a relation is acyclic iff repeatedly
  // deleting alternatives nothing points at empties the graph.
  AltMask alive = m == 64 ? ~AltMask{0} : (AltMask{1} << m) - 1;
  for (;;) {
    AltMask beaten = 0;
    for (unsigned x = 0; x < m; ++x)
      if ((alive >> x) & 1) beaten |= pref.below(x) & alive;
    AltMask sources = alive & ~beaten;
    if (sources == 0) return alive == 0;
    alive &= ~sources;
  }
}

bool is_linear_on(const Preference& pref, AltMask domain) {
  unsigned m = pref.alternative_count();
  for (unsigned x = 0; x < m; ++x) {
    if (!((domain >> x) & 1)) continue;
    for (unsigned y = x + 1; y < m; ++y) {
      if (!((domain >> y) & 1)) continue;
      if (!pref.holds(x, y) && !pref.holds(y, x)) return false;
    }
    // Transitivity: everything below a dominated y must be below x too.
    for (unsigned y = 0; y < m; ++y) {
      if (!((domain >> y) & 1) || !pref.holds(x, y)) continue;
      if ((pref.below(y) & domain & ~pref.below(x)) != 0) return false;
    }
  }
  return true;
}

Coalition supporters(const Profile& profile, unsigned x, unsigned y) {
  Coalition s;
  for (unsigned i = 0; i < profile.player_count(); ++i)
    if (profile.of(i).holds(x, y)) s.add(i);
  return s;
}

bool is_measurable(const Profile& profile, const Algebra& algebra,
                   const AlternativeSet& x) {
  for (const Preference& pref : profile.preferences)
    if (pref.alternative_count() != x.size())
      throw ValidationError("profile and alternative set sizes disagree");
  if (profile.player_count() != algebra.player_count())
    throw ValidationError("profile and algebra player counts disagree");
  unsigned m = x.size();
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      if (a == b) continue;
      if (!algebra.contains(supporters(profile, a, b))) return false;
    }
  return true;
}

bool is_profile_for(const Profile& profile, const Agenda& agenda,
                    const Algebra& algebra) {
  if (profile.player_count() != algebra.player_count())
    throw ValidationError("profile and algebra player counts disagree");
  for (const Preference& pref : profile.preferences) {
    if (pref.alternative_count() != agenda.x_size())
      throw ValidationError("profile and agenda alternative counts disagree");
    if (maximal_set(pref, agenda) == 0) return false;
  }
  unsigned m = agenda.x_size();
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      if (a == b) continue;
      if (!algebra.contains(supporters(profile, a, b))) return false;
    }
  return true;
}

AltMask pareto_set(const Profile& profile, const Agenda& agenda) {
  Coalition everyone = Coalition::full(profile.player_count());
  AltMask out = 0;
  for (unsigned x : agenda.members()) {
    bool unanimously_beaten = false;
    for (unsigned y : agenda.members()) {
      if (y == x) continue;
      if (supporters(profile, y, x) == everyone) {
        unanimously_beaten = true;
        break;
      }
    }
    if (!unanimously_beaten) out |= AltMask{1} << x;
  }
  return out;
}

}  // namespace coregames
