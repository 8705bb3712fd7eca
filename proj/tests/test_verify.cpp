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

#include "coregames/cores.hpp"
#include "coregames/verify.hpp"
#include "instances.hpp"

using namespace coregames;
using namespace coregames::testing;

TEST_CASE("preference enumeration counts") {
  CHECK(enumerate_preferences_for(3, ProfileEnumerationMode::kFullAsymmetric)
            .size() == 27);
  // 27 minus the two orientations of the three-cycle.
  std::vector<Preference> acyclic =
      enumerate_preferences_for(3, ProfileEnumerationMode::kAcyclicOnly);
  CHECK(acyclic.size() == 25);
  std::size_t cyclic_count = 0;
  for (const Preference& p :
       enumerate_preferences_for(3, ProfileEnumerationMode::kFullAsymmetric))
    if (!is_acyclic(p)) ++cyclic_count;
  CHECK(cyclic_count == 2);

  CHECK(enumerate_preferences_for(3, ProfileEnumerationMode::kMaximalSetsOnly)
            .size() == 7);
  CHECK(enumerate_preferences_for(4, ProfileEnumerationMode::kFullAsymmetric)
            .size() == 729);
  // The relations for an agenda coincide with the acyclic ones at size 3.
  CHECK(enumerate_preferences_for(3, ProfileEnumerationMode::kFullAsymmetric,
                                  true)
            .size() == 25);
  CHECK_THROWS_AS(
      enumerate_preferences_for(6, ProfileEnumerationMode::kFullAsymmetric),
      ScaleError);
}

TEST_CASE("maximal-set enumeration yields the declared maximal sets") {
  for (const Preference& p :
       enumerate_preferences_for(3, ProfileEnumerationMode::kMaximalSetsOnly)) {
    CHECK(maximal_set(p, Agenda::from_mask(3, 0b111)) != 0);
  }
}

TEST_CASE("nakamura equivalence on majority-of-three") {
  SimpleGame maj3 = SimpleGame::majority(3);
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});

  SUBCASE("two alternatives: everything holds") {
    Agenda two = Agenda::of(x, std::vector<std::string>{"a", "b"});
    TheoremReport r = check_nakamura_equivalence(maj3, two);
    CHECK(r.agree);
    CHECK(r.statement("i"));
    CHECK(r.statement("ii"));
    CHECK(r.statement("iii"));
    CHECK(!r.counterexample.has_value());
    CHECK(r.evidence == "enumeration");
  }

  SUBCASE("three alternatives: everything fails with a counterexample") {
    Agenda three = Agenda::all(x);
    TheoremReport r = check_nakamura_equivalence(maj3, three);
    CHECK(r.agree);
    CHECK(!r.statement("i"));
    CHECK(!r.statement("ii"));
    CHECK(!r.statement("iii"));
    REQUIRE(r.counterexample.has_value());
    // The reported profile really empties the respective core.
    WinningSets w = WinningSets::from_game(maj3);
    const Profile& p = r.counterexample->profile;
    CHECK(is_profile_for(p, three, maj3.algebra()));
    if (r.counterexample->statement == "ii")
      CHECK(core_plus(w, three, p) == 0);
    else
      CHECK(core(w, three, p) == 0);
    CHECK(r.profiles_enumerated == 25 * 25 * 25);
  }

  SUBCASE("weak game: vacuously fine at any size") {
    SimpleGame weak =
        SimpleGame::create(Algebra::full(3), {Coalition::of({0, 1, 2})});
    TheoremReport r = check_nakamura_equivalence(weak, Agenda::all(x));
    CHECK(r.agree);
    CHECK(r.statement("i"));
    CHECK(r.statement("ii"));
    CHECK(r.statement("iii"));
  }
}

TEST_CASE("maximal-sets mode decides the core-plus statement") {
  SimpleGame maj3 = SimpleGame::majority(3);
  AlternativeSet x5 = abcde();
  Agenda five = Agenda::all(x5);
  TheoremReport r = check_nakamura_equivalence(
      maj3, five, ProfileEnumerationMode::kMaximalSetsOnly);
  CHECK(r.agree);
  CHECK(!r.statement("i"));
  CHECK(!r.statement("ii"));
  CHECK_THROWS_AS(r.statement("iii"), ValidationError);
  CHECK(r.profiles_enumerated == 31u * 31u * 31u);
}

TEST_CASE("linear-only mode mirrors the full equivalence") {
  SimpleGame maj3 = SimpleGame::majority(3);
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  TheoremReport small = check_nakamura_equivalence(
      maj3, Agenda::of(x, std::vector<std::string>{"a", "b"}),
      ProfileEnumerationMode::kLinearOnly);
  CHECK(small.agree);
  CHECK(small.statement("ii"));
  TheoremReport big = check_nakamura_equivalence(
      maj3, Agenda::all(x), ProfileEnumerationMode::kLinearOnly);
  CHECK(big.agree);
  CHECK(!big.statement("ii"));
  CHECK(!big.statement("iii"));
}

TEST_CASE("witness evidence path beyond the enumeration guard") {
  // Five players, full algebra: five blocks exceed the enumeration guard,
  // but the agenda reaches nu, so the witness settles the statements.
  SimpleGame maj5 = SimpleGame::majority(5);
  AlternativeSet x = abcde();
  Agenda agenda = Agenda::all(x);
  REQUIRE(nakamura_number(maj5).number == ExtendedCardinal::finite(3));
  TheoremReport r = check_nakamura_equivalence(maj5, agenda);
  CHECK(r.evidence == "witness");
  CHECK(r.agree);
  CHECK(!r.statement("i"));
  CHECK(!r.statement("ii"));
  CHECK(!r.statement("iii"));
  REQUIRE(r.counterexample.has_value());

  // Below nu the enumeration guard cannot be bypassed.
  Agenda two = Agenda::of(x, std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(check_nakamura_equivalence(maj5, two), ScaleError);
}

TEST_CASE("acyclic theorem and the dominance corollary") {
  SimpleGame maj3 = SimpleGame::majority(3);
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});

  SUBCASE("three alternatives: a dominance cycle appears") {
    TheoremReport r = check_acyclic_theorem(maj3, Agenda::all(x));
    CHECK(r.agree);
    CHECK(!r.statement("agenda_below_nakamura"));
    CHECK(!r.statement("core_always_nonempty"));
    CHECK(!r.statement("dominance_always_acyclic"));
    REQUIRE(r.counterexample.has_value());
  }

  SUBCASE("two-element agendas stay acyclic") {
    for (const char* drop : {"a", "b", "c"}) {
      std::vector<std::string> labels;
      for (const char* l : {"a", "b", "c"})
        if (std::string(l) != drop) labels.push_back(l);
      TheoremReport r = check_acyclic_theorem(maj3, Agenda::of(x, labels));
      CHECK(r.statement("agenda_below_nakamura"));
      CHECK(r.statement("core_always_nonempty"));
      CHECK(r.agree);
    }
  }

  SUBCASE("a nakamura-two game already cycles on two alternatives") {
    SimpleGame pair_game = SimpleGame::create(
        Algebra::full(2), {Coalition::of({0}), Coalition::of({1})});
    AlternativeSet ab = AlternativeSet::of({"a", "b"});
    TheoremReport r = check_acyclic_theorem(pair_game, Agenda::all(ab));
    CHECK(r.agree);
    CHECK(!r.statement("core_always_nonempty"));
    CHECK(!r.statement("dominance_always_acyclic"));
  }
}

TEST_CASE("extended equivalence on the closure instance") {
  WinningFamily family = closure_family_n6();
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});

  SUBCASE("two alternatives below kappa") {
    Agenda two = Agenda::of(x, std::vector<std::string>{"a", "b"});
    TheoremReport r = check_extended_equivalence(family, two);
    CHECK(r.agree);
    CHECK(r.statement("i"));
    CHECK(r.statement("ii"));
    CHECK(r.statement("iii"));
    bool flagged = false;
    for (const std::string& note : r.notes)
      if (note == "induced game empty") flagged = true;
    CHECK(flagged);
  }

  SUBCASE("three alternatives reach kappa") {
    TheoremReport r = check_extended_equivalence(family, Agenda::all(x));
    CHECK(r.agree);
    CHECK(!r.statement("i"));
    CHECK(!r.statement("ii"));
    REQUIRE(r.counterexample.has_value());
    WinningSets sets =
        WinningSets::of(6, {family.sets().begin(), family.sets().end()});
    CHECK(core_plus(sets, Agenda::all(x), r.counterexample->profile) == 0);
  }
}

TEST_CASE("extended check reduces to the plain one inside the algebra") {
  SimpleGame maj3 = SimpleGame::majority(3);
  WinningFamily family = WinningFamily::create(
      maj3.algebra(), GroundCollection::all_subsets(),
      {maj3.winning().begin(), maj3.winning().end()});
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  for (unsigned size = 2; size <= 3; ++size) {
    Agenda agenda = Agenda::from_mask(3, (AltMask{1} << size) - 1);
    TheoremReport plain = check_nakamura_equivalence(maj3, agenda);
    TheoremReport ext = check_extended_equivalence(family, agenda);
    CHECK(plain.statement("i") == ext.statement("i"));
    CHECK(plain.statement("ii") == ext.statement("ii"));
    CHECK(plain.statement("iii") == ext.statement("iii"));
    CHECK(plain.agree);
    CHECK(ext.agree);
  }
}

TEST_CASE("equivalence check under a proper subalgebra") {
  // Two blocks of two players; measurable profiles assign one relation per
  // block, so the sweep is over 25^2 block profiles at three alternatives.
  Algebra blocks2 = Algebra::from_partition(
      PlayerSet(4), {Coalition::of({0, 1}), Coalition::of({2, 3})});
  SimpleGame game = SimpleGame::create(
      blocks2, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  REQUIRE(nakamura_number(game).number == ExtendedCardinal::finite(2));
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});

  Agenda one = Agenda::from_mask(3, 0b001);
  TheoremReport below = check_nakamura_equivalence(game, one);
  CHECK(below.agree);
  CHECK(below.statement("i"));
  CHECK(below.statement("ii"));
  CHECK(below.profiles_enumerated == 1);

  Agenda two = Agenda::from_mask(3, 0b011);
  TheoremReport at = check_nakamura_equivalence(game, two);
  CHECK(at.agree);
  CHECK(!at.statement("i"));
  CHECK(!at.statement("ii"));
  CHECK(!at.statement("iii"));
  CHECK(at.profiles_enumerated == 9);  // three relations per block
  REQUIRE(at.counterexample.has_value());
  CHECK(is_profile_for(at.counterexample->profile, two, blocks2));
  CHECK(is_measurable(at.counterexample->profile, blocks2, x));

  Agenda three = Agenda::all(x);
  TheoremReport above = check_nakamura_equivalence(game, three);
  CHECK(above.agree);
  CHECK(above.profiles_enumerated == 25 * 25);
}

TEST_CASE("linear-only quantifier still separates the extended statements") {
  // The block-measurable linear profiles already contain a counterexample at
  // kappa: players of each closure-complement block top one cycle
  // alternative.
  WinningFamily family = closure_family_n6();
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  TheoremReport r = check_extended_equivalence(
      family, Agenda::all(x), ProfileEnumerationMode::kLinearOnly);
  CHECK(!r.statement("ii"));
  CHECK(r.agree);
  TheoremReport small = check_extended_equivalence(
      family, Agenda::of(x, std::vector<std::string>{"a", "b"}),
      ProfileEnumerationMode::kLinearOnly);
  CHECK(small.statement("ii"));
  CHECK(small.agree);
}

TEST_CASE("parallel and sequential sweeps produce identical reports") {
  SimpleGame maj3 = SimpleGame::majority(3);
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  for (unsigned jobs : {2u, 3u, 7u}) {
    TheoremReport seq = check_nakamura_equivalence(maj3, Agenda::all(x),
        ProfileEnumerationMode::kFullAsymmetric, 1);
    TheoremReport par = check_nakamura_equivalence(maj3, Agenda::all(x),
        ProfileEnumerationMode::kFullAsymmetric, jobs);
    CHECK(seq.statements == par.statements);
    CHECK(seq.agree == par.agree);
    CHECK(seq.profiles_enumerated == par.profiles_enumerated);
    CHECK(seq.core_computations == par.core_computations);
    REQUIRE(seq.counterexample.has_value());
    REQUIRE(par.counterexample.has_value());
    CHECK(seq.counterexample->profile_index == par.counterexample->profile_index);
    CHECK(seq.counterexample->statement == par.counterexample->statement);
    for (unsigned i = 0; i < 3; ++i)
      CHECK(seq.counterexample->profile.of(i) == par.counterexample->profile.of(i));
  }
}

TEST_CASE("theorem statements agree for a sample of three-player games") {
  // A deterministic stride through the 127 games; the full sweep is the
  // acceptance suite's job.
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  Algebra full3 = Algebra::full(3);
  for (std::uint32_t mask = 1; mask < 128; mask += 3) {
    std::vector<Coalition> sets;
    for (std::uint32_t c = 1; c < 8; ++c)
      if ((mask >> (c - 1)) & 1) sets.push_back(Coalition::from_mask(c));
    SimpleGame game = SimpleGame::create(full3, sets);
    for (unsigned size = 1; size <= 3; ++size) {
      Agenda agenda = Agenda::from_mask(3, (AltMask{1} << size) - 1);
      CHECK(check_nakamura_equivalence(game, agenda).agree);
    }
  }
}

TEST_CASE("sweep statements match a direct evaluation of the quantifiers") {
  // Independent route: build every profile object explicitly and call the
  // cores module, then compare the universal statements with the report.
  AlternativeSet x = AlternativeSet::of({"a", "b", "c"});
  Agenda all = Agenda::all(x);
  Algebra full3 = Algebra::full(3);
  std::vector<Preference> rels = enumerate_preferences_for(
      3, ProfileEnumerationMode::kFullAsymmetric, /*require_maximal=*/true);
  REQUIRE(rels.size() == 25);

  for (std::uint32_t mask = 1; mask < 128; mask += 5) {
    std::vector<Coalition> sets;
    for (std::uint32_t c = 1; c < 8; ++c)
      if ((mask >> (c - 1)) & 1) sets.push_back(Coalition::from_mask(c));
    SimpleGame game = SimpleGame::create(full3, sets);
    WinningSets w = WinningSets::from_game(game);

    bool all_core = true;
    bool all_coreplus = true;
    for (const Preference& p0 : rels)
      for (const Preference& p1 : rels)
        for (const Preference& p2 : rels) {
          Profile p;
          p.preferences = {p0, p1, p2};
          if (core(w, all, p) == 0) all_core = false;
          if (core_plus(w, all, p) == 0) all_coreplus = false;
        }

    TheoremReport r = check_nakamura_equivalence(game, all);
    CHECK(r.statement("iii") == all_core);
    CHECK(r.statement("ii") == all_coreplus);
  }
}

TEST_CASE("divergence search finds all three phenomena") {
  DivergenceReport report = search_divergence_instance(3, 3);

  REQUIRE(report.nu_prime_below_kappa.has_value());
  {
    const DivergenceInstance& inst = *report.nu_prime_below_kappa;
    Algebra algebra = Algebra::from_partition(PlayerSet(inst.players), inst.blocks);
    WinningFamily family = WinningFamily::create(
        algebra, GroundCollection::all_subsets(), inst.sets);
    CHECK(nu_prime(family) < kappa_number(family).number);
  }

  REQUIRE(report.family_vs_induced.has_value());
  {
    const DivergenceInstance& inst = *report.family_vs_induced;
    REQUIRE(inst.profile.has_value());
    Algebra algebra = Algebra::from_partition(PlayerSet(inst.players), inst.blocks);
    WinningFamily family = WinningFamily::create(
        algebra, GroundCollection::all_subsets(), inst.sets);
    Agenda agenda = Agenda::from_mask(inst.alternative_count, inst.agenda_mask);
    WinningSets family_sets = WinningSets::of(
        inst.players, {family.sets().begin(), family.sets().end()});
    CHECK(core_plus(family_sets, agenda, *inst.profile) !=
          core_plus(induced_game(family), agenda, *inst.profile));
    CHECK(is_profile_for(*inst.profile, agenda, algebra));
  }

  REQUIRE(report.coreplus_strict.has_value());
  {
    const DivergenceInstance& inst = *report.coreplus_strict;
    REQUIRE(inst.profile.has_value());
    Algebra algebra = Algebra::from_partition(PlayerSet(inst.players), inst.blocks);
    SimpleGame game = SimpleGame::create(algebra, inst.sets);
    Agenda agenda = Agenda::from_mask(inst.alternative_count, inst.agenda_mask);
    WinningSets w = WinningSets::from_game(game);
    AltMask cp = core_plus(w, agenda, *inst.profile);
    AltMask union_max = 0;
    for (const Preference& pref : inst.profile->preferences)
      union_max |= maximal_set(pref, agenda);
    AltMask cap = core(w, agenda, *inst.profile) & union_max;
    CHECK(cp != cap);
    CHECK((cp & ~cap) == 0);
    CHECK(is_profile_for(*inst.profile, agenda, algebra));
  }

  CHECK_THROWS_AS(search_divergence_instance(7, 3), ScaleError);
  CHECK_THROWS_AS(search_divergence_instance(3, 5), ScaleError);
}

TEST_CASE("the specified nu-kappa separation instance is verified by both routes") {
  WinningFamily family = closure_family_n6();
  CHECK(nu_prime(family) == ExtendedCardinal::finite(2));
  CHECK(kappa_number(family).number == ExtendedCardinal::finite(3));
  CHECK(kappa_number_bruteforce(family, 2).number ==
        ExtendedCardinal::finite(3));
}
