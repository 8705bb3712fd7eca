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

#include "coregames/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <thread>

#include "coregames/cores.hpp"

namespace coregames {

namespace {

// A relation on agenda positions 0..m-1, packed for the sweep: bit x*m+y set
// iff x is preferred to y.  `maximal` holds the positions with no incoming
// edge.  m <= 5 keeps the edge word within 25 bits.
struct PackedRelation {
  std::uint32_t edges = 0;
  AltMask maximal = 0;
};

constexpr unsigned kMaxBlocks = 4;
constexpr unsigned kMaxAgendaRelations = 4;
constexpr unsigned kMaxAgendaMaxSets = 5;

AltMask maximal_of_edges(std::uint32_t edges, unsigned m) {
  AltMask beaten = 0;
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y)
      if ((edges >> (x * m + y)) & 1) beaten |= AltMask{1} << y;
  return ((AltMask{1} << m) - 1) & ~beaten;
}

bool edges_acyclic(std::uint32_t edges, unsigned m) {
  AltMask alive = (AltMask{1} << m) - 1;
  for (;;) {
    AltMask beaten = 0;
    for (unsigned x = 0; x < m; ++x) {
      if (!((alive >> x) & 1)) continue;
      for (unsigned y = 0; y < m; ++y)
        if (((alive >> y) & 1) && ((edges >> (x * m + y)) & 1))
          beaten |= AltMask{1} << y;
    }
    AltMask sources = alive & ~beaten;
    if (sources == 0) return alive == 0;
    alive &= ~sources;
  }
}

bool edges_linear(std::uint32_t edges, unsigned m) {
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y) {
      if (x == y) continue;
      bool xy = (edges >> (x * m + y)) & 1;
      if (x < y && !xy && !((edges >> (y * m + x)) & 1)) return false;
      if (!xy) continue;
      for (unsigned z = 0; z < m; ++z)
        if (((edges >> (y * m + z)) & 1) && !((edges >> (x * m + z)) & 1))
          return false;
    }
  return true;
}

// All relations of the requested kind, in a fixed deterministic order (an
// odometer over the unordered pairs; MaximalSetsOnly walks the nonempty
// subsets and emits one canonical representative each).
std::vector<PackedRelation> make_relations(unsigned m,
                                           ProfileEnumerationMode mode,
                                           bool require_maximal) {
  std::vector<PackedRelation> out;
  if (mode == ProfileEnumerationMode::kMaximalSetsOnly) {
    for (AltMask mask = 1; mask < (AltMask{1} << m); ++mask) {
      unsigned top = static_cast<unsigned>(std::countr_zero(mask));
      PackedRelation rel;
      for (unsigned x = 0; x < m; ++x)
        if (!((mask >> x) & 1)) rel.edges |= std::uint32_t{1} << (top * m + x);
      rel.maximal = mask;
      out.push_back(rel);
    }
    return out;
  }

  unsigned np = m * (m - 1) / 2;
  std::vector<std::pair<unsigned, unsigned>> pair_list;
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = x + 1; y < m; ++y) pair_list.emplace_back(x, y);

  std::uint64_t total = 1;
  for (unsigned i = 0; i < np; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint32_t edges = 0;
    std::uint64_t c = code;
    for (unsigned i = 0; i < np; ++i) {
      unsigned digit = static_cast<unsigned>(c % 3);
      c /= 3;
      auto [x, y] = pair_list[i];
      if (digit == 1) edges |= std::uint32_t{1} << (x * m + y);
      if (digit == 2) edges |= std::uint32_t{1} << (y * m + x);
    }
    if (mode == ProfileEnumerationMode::kAcyclicOnly && !edges_acyclic(edges, m))
      continue;
    if (mode == ProfileEnumerationMode::kLinearOnly && !edges_linear(edges, m))
      continue;
    PackedRelation rel;
    rel.edges = edges;
    rel.maximal = maximal_of_edges(edges, m);
    if (require_maximal && rel.maximal == 0) continue;
    out.push_back(rel);
  }
  return out;
}

// A compiled check instance: the agenda embedding, the algebra blocks, and a
// lookup from block masks to "contains a winning set" over the family.
struct Instance {
  unsigned m = 0;
  std::vector<unsigned> agenda_members;
  unsigned x_size = 0;
  unsigned player_count = 0;
  std::vector<Coalition> blocks;
  std::vector<char> contains_winning;  // indexed by block mask
};

Instance make_instance(const Algebra& algebra, std::span<const Coalition> family,
                       const Agenda& agenda) {
  Instance inst;
  inst.m = agenda.size();
  inst.agenda_members = agenda.members();
  inst.x_size = agenda.x_size();
  inst.player_count = algebra.player_count();
  inst.blocks.assign(algebra.blocks().begin(), algebra.blocks().end());

  std::size_t b = inst.blocks.size();
  inst.contains_winning.assign(std::size_t{1} << b, 0);
  for (std::size_t bmask = 0; bmask < (std::size_t{1} << b); ++bmask) {
    Coalition expanded;
    for (std::size_t j = 0; j < b; ++j)
      if ((bmask >> j) & 1) expanded = expanded | inst.blocks[j];
    for (const Coalition& s : family) {
      if (s.is_subset_of(expanded)) {
        inst.contains_winning[bmask] = 1;
        break;
      }
    }
  }
  return inst;
}

struct SweepRequest {
  bool core = false;
  bool core_plus = false;
  bool dominance_acyclic = false;
};

struct SweepResult {
  bool all_core_nonempty = true;
  bool all_coreplus_nonempty = true;
  bool all_dominance_acyclic = true;
  std::uint64_t first_core_empty = 0;
  std::uint64_t first_coreplus_empty = 0;
  std::uint64_t first_cycle = 0;
  std::vector<unsigned> digits_core, digits_coreplus, digits_cycle;
  std::uint64_t profiles = 0;
  std::uint64_t cores = 0;
};

void merge_first(bool& all_flag, std::uint64_t& first, std::vector<unsigned>& digits,
                 bool shard_all, std::uint64_t shard_first,
                 const std::vector<unsigned>& shard_digits) {
  if (shard_all) return;
  if (all_flag || shard_first < first) {
    first = shard_first;
    digits = shard_digits;
  }
  all_flag = false;
}

// Exhaustive scan of all block-relation assignments.  Profiles are totally
// ordered with block 0 as the most significant digit; shards split the block-0
// range, and merging keeps the earliest counterexample per statement, so the
// report is identical however many workers run.
SweepResult sweep_profiles(const Instance& inst,
                           const std::vector<PackedRelation>& rels,
                           const SweepRequest& req, unsigned jobs) {
  unsigned b = static_cast<unsigned>(inst.blocks.size());
  unsigned m = inst.m;
  std::size_t r = rels.size();

  auto run_range = [&](std::size_t d0_lo, std::size_t d0_hi) {
    SweepResult res;
    std::vector<unsigned> digits(b, 0);
    std::vector<std::uint32_t> supp(m * m, 0);
    std::vector<std::uint32_t> dissat(m, 0);
    if (d0_lo >= d0_hi) return res;
    digits[0] = static_cast<unsigned>(d0_lo);
    std::uint64_t weight = 1;
    for (unsigned j = 1; j < b; ++j) weight *= r;
    std::uint64_t index = d0_lo * weight;

    for (;;) {
      // Supporter block-masks per ordered pair of agenda positions.
      for (unsigned p = 0; p < m * m; ++p) {
        std::uint32_t mask = 0;
        for (unsigned j = 0; j < b; ++j)
          mask |= ((rels[digits[j]].edges >> p) & 1u) << j;
        supp[p] = mask;
      }
      ++res.profiles;

      if (req.core_plus) {
        ++res.cores;
        bool nonempty = false;
        for (unsigned x = 0; x < m; ++x) {
          std::uint32_t d = 0;
          for (unsigned y = 0; y < m; ++y)
            if (y != x) d |= supp[y * m + x];
          dissat[x] = d;
          if (!inst.contains_winning[d]) nonempty = true;
        }
        if (!nonempty && res.all_coreplus_nonempty) {
          res.all_coreplus_nonempty = false;
          res.first_coreplus_empty = index;
          res.digits_coreplus = digits;
        }
      }
      if (req.core) {
        ++res.cores;
        bool nonempty = false;
        for (unsigned x = 0; x < m && !nonempty; ++x) {
          bool dominated = false;
          for (unsigned y = 0; y < m; ++y) {
            if (y == x) continue;
            if (inst.contains_winning[supp[y * m + x]]) {
              dominated = true;
              break;
            }
          }
          if (!dominated) nonempty = true;
        }
        if (!nonempty && res.all_core_nonempty) {
          res.all_core_nonempty = false;
          res.first_core_empty = index;
          res.digits_core = digits;
        }
      }
      if (req.dominance_acyclic) {
        ++res.cores;
        AltMask alive = (AltMask{1} << m) - 1;
        for (;;) {
          AltMask beaten = 0;
          for (unsigned x = 0; x < m; ++x) {
            if (!((alive >> x) & 1)) continue;
            for (unsigned y = 0; y < m; ++y)
              if (((alive >> y) & 1) && y != x &&
                  inst.contains_winning[supp[x * m + y]])
                beaten |= AltMask{1} << y;
          }
          AltMask sources = alive & ~beaten;
          if (sources == 0) break;
          alive &= ~sources;
        }
        if (alive != 0 && res.all_dominance_acyclic) {
          res.all_dominance_acyclic = false;
          res.first_cycle = index;
          res.digits_cycle = digits;
        }
      }

      // Odometer step, last digit fastest.
      ++index;
      unsigned j = b;
      while (j-- > 0) {
        if (++digits[j] < r) break;
        if (j == 0) return res;
        digits[j] = 0;
      }
      if (digits[0] >= d0_hi) return res;
    }
  };

  unsigned workers = std::max(1u, jobs);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, r));
  if (workers <= 1) return run_range(0, r);

  std::vector<SweepResult> partial(workers);
  std::vector<std::thread> threads;
  std::size_t chunk = (r + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(r, lo + chunk);
    threads.emplace_back([&, w, lo, hi] { partial[w] = run_range(lo, hi); });
  }
  for (std::thread& t : threads) t.join();

  SweepResult merged;
  for (const SweepResult& p : partial) {
    merged.profiles += p.profiles;
    merged.cores += p.cores;
    merge_first(merged.all_core_nonempty, merged.first_core_empty,
                merged.digits_core, p.all_core_nonempty, p.first_core_empty,
                p.digits_core);
    merge_first(merged.all_coreplus_nonempty, merged.first_coreplus_empty,
                merged.digits_coreplus, p.all_coreplus_nonempty,
                p.first_coreplus_empty, p.digits_coreplus);
    merge_first(merged.all_dominance_acyclic, merged.first_cycle,
                merged.digits_cycle, p.all_dominance_acyclic, p.first_cycle,
                p.digits_cycle);
  }
  return merged;
}

// Reconstructs the profile of a digit assignment on the ambient X: all
// players of a block share the block's relation, embedded through the agenda.
Profile profile_from_digits(const Instance& inst,
                            const std::vector<PackedRelation>& rels,
                            const std::vector<unsigned>& digits) {
  unsigned b = static_cast<unsigned>(inst.blocks.size());
  std::vector<Preference> block_prefs;
  block_prefs.reserve(b);
  for (unsigned j = 0; j < b; ++j) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    std::uint32_t edges = rels[digits[j]].edges;
    for (unsigned x = 0; x < inst.m; ++x)
      for (unsigned y = 0; y < inst.m; ++y)
        if ((edges >> (x * inst.m + y)) & 1)
          pairs.emplace_back(inst.agenda_members[x], inst.agenda_members[y]);
    block_prefs.push_back(Preference::from_pairs(inst.x_size, pairs));
  }

  Profile profile;
  profile.preferences.reserve(inst.player_count);
  for (unsigned i = 0; i < inst.player_count; ++i) {
    unsigned j = 0;
    while (!inst.blocks[j].contains(i)) ++j;
    profile.preferences.push_back(block_prefs[j]);
  }
  return profile;
}

bool relations_guard_ok(unsigned m, unsigned blocks,
                        ProfileEnumerationMode mode) {
  if (blocks > kMaxBlocks) return false;
  if (mode == ProfileEnumerationMode::kMaximalSetsOnly)
    return m <= kMaxAgendaMaxSets;
  return m <= kMaxAgendaRelations;
}

void set_statement(TheoremReport& report, const std::string& name, bool value) {
  report.statements.emplace_back(name, value);
}

}  // namespace

bool TheoremReport::statement(const std::string& name) const {
  for (const auto& [key, value] : statements)
    if (key == name) return value;
  throw ValidationError("statement not evaluated: " + name);
}

std::vector<Preference> enumerate_preferences_for(unsigned agenda_size,
                                                  ProfileEnumerationMode mode,
                                                  bool require_maximal) {
  if (agenda_size == 0)
    throw ValidationError("agenda size must be positive");
  if (mode == ProfileEnumerationMode::kMaximalSetsOnly) {
    if (agenda_size > 16)
      throw ScaleError("maximal-set enumeration guarded at 16 alternatives");
  } else if (agenda_size > 5) {
    throw ScaleError("relation enumeration guarded at 5 alternatives");
  }

  std::vector<Preference> out;
  for (const PackedRelation& rel :
       make_relations(agenda_size, mode, require_maximal)) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned x = 0; x < agenda_size; ++x)
      for (unsigned y = 0; y < agenda_size; ++y)
        if ((rel.edges >> (x * agenda_size + y)) & 1) pairs.emplace_back(x, y);
    out.push_back(Preference::from_pairs(agenda_size, pairs));
  }
  return out;
}

TheoremReport check_nakamura_equivalence(const SimpleGame& game,
                                         const Agenda& agenda,
                                         ProfileEnumerationMode mode,
                                         unsigned jobs) {
  TheoremReport report;
  NakamuraResult nak = nakamura_number(game);
  bool below = ExtendedCardinal::finite(agenda.size()) < nak.number;
  set_statement(report, "i", below);

  unsigned blocks = static_cast<unsigned>(game.algebra().block_count());
  if (relations_guard_ok(agenda.size(), blocks, mode)) {
    Instance inst = make_instance(game.algebra(), game.winning(), agenda);
    std::vector<PackedRelation> rels =
        make_relations(agenda.size(), mode, /*require_maximal=*/true);
    SweepRequest req;
    req.core_plus = true;
    req.core = mode != ProfileEnumerationMode::kMaximalSetsOnly;
    SweepResult swept = sweep_profiles(inst, rels, req, jobs);

    set_statement(report, "ii", swept.all_coreplus_nonempty);
    if (req.core) set_statement(report, "iii", swept.all_core_nonempty);
    report.profiles_enumerated = swept.profiles;
    report.core_computations = swept.cores;
    report.evidence = "enumeration";
    if (mode == ProfileEnumerationMode::kMaximalSetsOnly)
      report.notes.push_back("maximal-sets mode: (iii) not evaluated");
    if (mode == ProfileEnumerationMode::kLinearOnly)
      report.notes.push_back("linear-only quantifier");

    report.agree = below == swept.all_coreplus_nonempty &&
                   (!req.core || below == swept.all_core_nonempty);
    if (!swept.all_coreplus_nonempty) {
      report.counterexample = ProfileCounterexample{
          "ii", swept.first_coreplus_empty,
          profile_from_digits(inst, rels, swept.digits_coreplus)};
    } else if (req.core && !swept.all_core_nonempty) {
      report.counterexample = ProfileCounterexample{
          "iii", swept.first_core_empty,
          profile_from_digits(inst, rels, swept.digits_core)};
    }
    return report;
  }

  if (!below) {
    // Out of enumeration range but the agenda reaches the Nakamura number:
    // the constructive witness settles (ii) and (iii).
    WitnessProfile witness = empty_core_witness(game, agenda);
    WinningSets w = WinningSets::from_game(game);
    AltMask c = core(w, agenda, witness.profile);
    AltMask cp = core_plus(w, agenda, witness.profile);
    report.core_computations = 2;
    if (c != 0 || cp != 0)
      throw PreconditionError("witness recomputation failed");
    set_statement(report, "ii", false);
    set_statement(report, "iii", false);
    report.evidence = "witness";
    report.agree = true;
    report.counterexample =
        ProfileCounterexample{"iii", 0, std::move(witness.profile)};
    report.notes.push_back("counterexample from constructive witness");
    return report;
  }
  throw ScaleError("profile enumeration guard exceeded");
}

TheoremReport check_acyclic_theorem(const SimpleGame& game,
                                    const Agenda& agenda, unsigned jobs) {
  TheoremReport report;
  NakamuraResult nak = nakamura_number(game);
  unsigned blocks = static_cast<unsigned>(game.algebra().block_count());
  if (!relations_guard_ok(agenda.size(), blocks,
                          ProfileEnumerationMode::kAcyclicOnly))
    throw ScaleError("profile enumeration guard exceeded");

  bool agenda_below = ExtendedCardinal::finite(agenda.size()) < nak.number;
  set_statement(report, "agenda_below_nakamura", agenda_below);

  Instance inst = make_instance(game.algebra(), game.winning(), agenda);
  std::vector<PackedRelation> rels = make_relations(
      agenda.size(), ProfileEnumerationMode::kAcyclicOnly, false);
  SweepRequest req;
  req.core = true;
  SweepResult swept = sweep_profiles(inst, rels, req, jobs);
  set_statement(report, "core_always_nonempty", swept.all_core_nonempty);
  report.profiles_enumerated = swept.profiles;
  report.core_computations = swept.cores;
  report.evidence = "enumeration";
  report.agree = agenda_below == swept.all_core_nonempty;
  if (!swept.all_core_nonempty)
    report.counterexample = ProfileCounterexample{
        "core_always_nonempty", swept.first_core_empty,
        profile_from_digits(inst, rels, swept.digits_core)};

  // The acyclicity corollary quantifies over all of X.
  Agenda whole_x = Agenda::from_mask(
      agenda.x_size(), agenda.x_size() == 64
                           ? ~AltMask{0}
                           : (AltMask{1} << agenda.x_size()) - 1);
  if (relations_guard_ok(whole_x.size(), blocks,
                         ProfileEnumerationMode::kAcyclicOnly)) {
    bool x_below = ExtendedCardinal::finite(whole_x.size()) < nak.number;
    set_statement(report, "alternatives_below_nakamura", x_below);
    Instance xinst = make_instance(game.algebra(), game.winning(), whole_x);
    std::vector<PackedRelation> xrels = make_relations(
        whole_x.size(), ProfileEnumerationMode::kAcyclicOnly, false);
    SweepRequest xreq;
    xreq.dominance_acyclic = true;
    SweepResult xswept = sweep_profiles(xinst, xrels, xreq, jobs);
    set_statement(report, "dominance_always_acyclic",
                  xswept.all_dominance_acyclic);
    report.profiles_enumerated += xswept.profiles;
    report.core_computations += xswept.cores;
    report.agree = report.agree && x_below == xswept.all_dominance_acyclic;
    if (!xswept.all_dominance_acyclic && !report.counterexample)
      report.counterexample = ProfileCounterexample{
          "dominance_always_acyclic", xswept.first_cycle,
          profile_from_digits(xinst, xrels, xswept.digits_cycle)};
  } else {
    report.notes.push_back("corollary skipped: X beyond enumeration guard");
  }
  return report;
}

TheoremReport check_extended_equivalence(const WinningFamily& family,
                                         const Agenda& agenda,
                                         ProfileEnumerationMode mode,
                                         unsigned jobs) {
  TheoremReport report;
  KappaResult kappa = kappa_number(family);
  bool below = ExtendedCardinal::finite(agenda.size()) < kappa.number;
  set_statement(report, "i", below);
  if (induced_game(family).empty())
    report.notes.push_back("induced game empty");

  unsigned blocks = static_cast<unsigned>(family.algebra().block_count());
  if (relations_guard_ok(agenda.size(), blocks, mode)) {
    Instance inst = make_instance(family.algebra(), family.sets(), agenda);
    std::vector<PackedRelation> rels =
        make_relations(agenda.size(), mode, /*require_maximal=*/true);
    SweepRequest req;
    req.core_plus = true;
    req.core = mode != ProfileEnumerationMode::kMaximalSetsOnly;
    SweepResult swept = sweep_profiles(inst, rels, req, jobs);

    set_statement(report, "ii", swept.all_coreplus_nonempty);
    if (req.core) set_statement(report, "iii", swept.all_core_nonempty);
    report.profiles_enumerated = swept.profiles;
    report.core_computations = swept.cores;
    report.evidence = "enumeration";
    report.notes.push_back("(iii) does not imply (i): converse not asserted");

    report.agree = below == swept.all_coreplus_nonempty;
    if (req.core && swept.all_coreplus_nonempty)
      report.agree = report.agree && swept.all_core_nonempty;
    if (!swept.all_coreplus_nonempty) {
      report.counterexample = ProfileCounterexample{
          "ii", swept.first_coreplus_empty,
          profile_from_digits(inst, rels, swept.digits_coreplus)};
    } else if (req.core && !swept.all_core_nonempty) {
      report.counterexample = ProfileCounterexample{
          "iii", swept.first_core_empty,
          profile_from_digits(inst, rels, swept.digits_core)};
    }
    return report;
  }

  if (!below) {
    WitnessProfile witness = empty_coreplus_witness_extended(family, agenda);
    WinningSets w =
        WinningSets::of(family.player_count(),
                        {family.sets().begin(), family.sets().end()});
    AltMask cp = core_plus(w, agenda, witness.profile);
    report.core_computations = 1;
    if (cp != 0) throw PreconditionError("witness recomputation failed");
    set_statement(report, "ii", false);
    report.evidence = "witness";
    report.agree = true;
    report.counterexample =
        ProfileCounterexample{"ii", 0, std::move(witness.profile)};
    report.notes.push_back("counterexample from constructive witness");
    report.notes.push_back("(iii) not evaluated on the witness path");
    return report;
  }
  throw ScaleError("profile enumeration guard exceeded");
}

namespace {

// Divergence search helpers: enumerate nonempty player subsets in canonical
// order and sweep measurable profiles via the same block odometer.

std::vector<Coalition> nonempty_subsets(unsigned n) {
  std::vector<Coalition> subsets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    subsets.push_back(Coalition::from_mask(mask));
  std::sort(subsets.begin(), subsets.end(), coalition_less);
  return subsets;
}

// Calls fn for each family of the given size, in lexicographic order over
// the pool's canonical order.  fn returns true to stop.
bool for_each_family(const std::vector<Coalition>& pool, std::size_t size,
                     std::vector<Coalition>& family, std::size_t start,
                     const std::function<bool(const std::vector<Coalition>&)>& fn) {
  if (family.size() == size) return fn(family);
  for (std::size_t i = start; i + (size - family.size()) <= pool.size(); ++i) {
    family.push_back(pool[i]);
    if (for_each_family(pool, size, family, i + 1, fn)) {
      family.pop_back();
      return true;
    }
    family.pop_back();
  }
  return false;
}

}  // namespace

DivergenceReport search_divergence_instance(unsigned n_max, unsigned m_max) {
  if (n_max < 1 || n_max > 6 || m_max < 2 || m_max > 4)
    throw ScaleError("divergence search guarded at n <= 6, m <= 4");

  DivergenceReport report;

  // (a) nu' strictly below kappa: no profiles involved.
  for (unsigned n = 1; n <= n_max && !report.nu_prime_below_kappa; ++n) {
    std::vector<Coalition> pool = nonempty_subsets(n);
    for (const std::vector<Coalition>& blocks : all_partitions(n)) {
      Algebra algebra = Algebra::from_partition(PlayerSet(n), blocks);
      for (std::size_t size = 2; size <= 3 && size <= pool.size(); ++size) {
        std::vector<Coalition> family;
        bool found = for_each_family(
            pool, size, family, 0, [&](const std::vector<Coalition>& sets) {
              ++report.instances_examined;
              WinningFamily wf = WinningFamily::create(
                  algebra, GroundCollection::all_subsets(),
                  {sets.begin(), sets.end()});
              ExtendedCardinal np = nu_prime(wf);
              KappaResult k = kappa_number(wf);
              if (np < k.number) {
                DivergenceInstance inst;
                inst.players = n;
                inst.blocks = {algebra.blocks().begin(), algebra.blocks().end()};
                inst.sets = sets;
                inst.detail = "nu'=" + np.to_string() +
                              " < kappa=" + k.number.to_string();
                report.nu_prime_below_kappa = std::move(inst);
                return true;
              }
              return false;
            });
        if (found) break;
      }
      if (report.nu_prime_below_kappa) break;
    }
  }

  // (b) and (c) sweep measurable profiles; partitions are capped at three
  // blocks to bound the odometer.
  auto sweep_for = [&](const Algebra& algebra,
                       std::span<const Coalition> sets, unsigned m,
                       const auto& hit) -> std::optional<Profile> {
    Agenda agenda = Agenda::from_mask(m, (AltMask{1} << m) - 1);
    Instance inst = make_instance(algebra, sets, agenda);
    std::vector<PackedRelation> rels = make_relations(
        m, ProfileEnumerationMode::kFullAsymmetric, /*require_maximal=*/true);
    unsigned b = static_cast<unsigned>(algebra.block_count());
    std::vector<unsigned> digits(b, 0);
    for (;;) {
      ++report.instances_examined;
      if (hit(inst, rels, digits))
        return profile_from_digits(inst, rels, digits);
      unsigned j = b;
      bool done = false;
      while (j-- > 0) {
        if (++digits[j] < rels.size()) break;
        digits[j] = 0;
        if (j == 0) done = true;
      }
      if (done) return std::nullopt;
    }
  };

  auto family_coreplus = [](const Instance& inst,
                            const std::vector<PackedRelation>& rels,
                            const std::vector<unsigned>& digits,
                            const std::vector<char>& cw) {
    unsigned m = inst.m;
    unsigned b = static_cast<unsigned>(inst.blocks.size());
    AltMask out = 0;
    for (unsigned x = 0; x < m; ++x) {
      std::uint32_t d = 0;
      for (unsigned j = 0; j < b; ++j) {
        AltMask max = rels[digits[j]].maximal;
        if (!((max >> x) & 1)) d |= std::uint32_t{1} << j;
      }
      if (!cw[d]) out |= AltMask{1} << x;
    }
    return out;
  };

  for (unsigned n = 1; n <= n_max && !report.family_vs_induced; ++n) {
    std::vector<Coalition> pool = nonempty_subsets(n);
    for (const std::vector<Coalition>& blocks : all_partitions(n)) {
      if (blocks.size() > 3) continue;
      Algebra algebra = Algebra::from_partition(PlayerSet(n), blocks);
      for (std::size_t size = 1; size <= 2 && size <= pool.size(); ++size) {
        std::vector<Coalition> family;
        bool found = for_each_family(
            pool, size, family, 0, [&](const std::vector<Coalition>& sets) {
              WinningFamily wf = WinningFamily::create(
                  algebra, GroundCollection::all_subsets(),
                  {sets.begin(), sets.end()});
              WinningSets induced = induced_game(wf);
              for (unsigned m = 2; m <= m_max; ++m) {
                Agenda agenda = Agenda::from_mask(m, (AltMask{1} << m) - 1);
                Instance family_inst = make_instance(algebra, wf.sets(), agenda);
                Instance induced_inst =
                    make_instance(algebra, induced.family(), agenda);
                std::optional<Profile> profile = sweep_for(
                    algebra, wf.sets(), m,
                    [&](const Instance& inst,
                        const std::vector<PackedRelation>& rels,
                        const std::vector<unsigned>& digits) {
                      AltMask a = family_coreplus(inst, rels, digits,
                                                  family_inst.contains_winning);
                      AltMask b2 = family_coreplus(inst, rels, digits,
                                                   induced_inst.contains_winning);
                      return a != b2;
                    });
                if (profile) {
                  DivergenceInstance di;
                  di.players = n;
                  di.blocks = {algebra.blocks().begin(), algebra.blocks().end()};
                  di.sets = sets;
                  di.alternative_count = m;
                  di.agenda_mask = agenda.mask();
                  di.profile = std::move(*profile);
                  di.detail = "core-plus of family differs from core-plus of "
                              "induced game";
                  report.family_vs_induced = std::move(di);
                  return true;
                }
              }
              return false;
            });
        if (found) break;
      }
      if (report.family_vs_induced) break;
    }
  }

  for (unsigned n = 1; n <= n_max && !report.coreplus_strict; ++n) {
    for (const std::vector<Coalition>& blocks : all_partitions(n)) {
      if (blocks.size() > 3) continue;
      Algebra algebra = Algebra::from_partition(PlayerSet(n), blocks);
      std::vector<Coalition> pool;
      for (const Coalition& member : algebra.members())
        if (!member.empty()) pool.push_back(member);
      for (std::size_t size = 1; size <= 3 && size <= pool.size(); ++size) {
        std::vector<Coalition> family;
        bool found = for_each_family(
            pool, size, family, 0, [&](const std::vector<Coalition>& sets) {
              SimpleGame game =
                  SimpleGame::create(algebra, {sets.begin(), sets.end()});
              for (unsigned m = 2; m <= m_max; ++m) {
                Agenda agenda = Agenda::from_mask(m, (AltMask{1} << m) - 1);
                std::optional<Profile> profile = sweep_for(
                    algebra, game.winning(), m,
                    [&](const Instance& inst,
                        const std::vector<PackedRelation>& rels,
                        const std::vector<unsigned>& digits) {
                      unsigned b = static_cast<unsigned>(inst.blocks.size());
                      AltMask cp = family_coreplus(inst, rels, digits,
                                                   inst.contains_winning);
                      // Core and union of maximal sets from the same digits.
                      AltMask union_max = 0;
                      for (unsigned j = 0; j < b; ++j)
                        union_max |= rels[digits[j]].maximal;
                      AltMask c = 0;
                      for (unsigned x = 0; x < inst.m; ++x) {
                        bool dominated = false;
                        for (unsigned y = 0; y < inst.m && !dominated; ++y) {
                          if (y == x) continue;
                          std::uint32_t s = 0;
                          for (unsigned j = 0; j < b; ++j)
                            s |= ((rels[digits[j]].edges >>
                                   (y * inst.m + x)) &
                                  1u)
                                 << j;
                          dominated = inst.contains_winning[s];
                        }
                        if (!dominated) c |= AltMask{1} << x;
                      }
                      AltMask cap = c & union_max;
                      return cp != cap && (cp & ~cap) == 0;
                    });
                if (profile) {
                  DivergenceInstance di;
                  di.players = n;
                  di.blocks = {algebra.blocks().begin(), algebra.blocks().end()};
                  di.sets = sets;
                  di.alternative_count = m;
                  di.agenda_mask = agenda.mask();
                  di.profile = std::move(*profile);
                  di.detail =
                      "core-plus strictly inside core ∩ union of maximal sets";
                  report.coreplus_strict = std::move(di);
                  return true;
                }
              }
              return false;
            });
        if (found) break;
      }
      if (report.coreplus_strict) break;
    }
  }

  return report;
}

}  // namespace coregames
