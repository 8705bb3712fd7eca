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

#include "coregames/json_io.hpp"

#include <algorithm>

namespace coregames {

namespace {

std::vector<std::vector<unsigned>> parse_index_lists(const Json& j,
                                                     const std::string& path) {
  if (!j.is_array()) throw ValidationError("expected an array", path);
  std::vector<std::vector<unsigned>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& inner = j[i];
    std::string inner_path = path + "/" + std::to_string(i);
    if (!inner.is_array())
      throw ValidationError("expected an array of player indices", inner_path);
    std::vector<unsigned> indices;
    for (std::size_t k = 0; k < inner.size(); ++k) {
      const Json& v = inner[k];
      if (!v.is_number_unsigned())
        throw ValidationError("expected a nonnegative player index",
                              inner_path + "/" + std::to_string(k));
      indices.push_back(v.get<unsigned>());
    }
    out.push_back(std::move(indices));
  }
  return out;
}

Coalition coalition_from_indices(const std::vector<unsigned>& indices) {
  return Coalition::from_indices(indices);
}

std::vector<Coalition> coalitions_from_lists(
    const std::vector<std::vector<unsigned>>& lists) {
  std::vector<Coalition> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(coalition_from_indices(l));
  return out;
}

}  // namespace

InstanceDocument parse_instance(const Json& j) {
  if (!j.is_object()) throw ValidationError("document must be an object", "");
  InstanceDocument doc;

  if (!j.contains("players") || !j["players"].is_number_unsigned())
    throw ValidationError("players must be a positive integer", "/players");
  doc.players = j["players"].get<unsigned>();

  if (j.contains("algebra"))
    doc.algebra_blocks = parse_index_lists(j["algebra"], "/algebra");

  if (j.contains("ground")) {
    doc.ground_given = true;
    const Json& g = j["ground"];
    if (g.is_string()) {
      if (g.get<std::string>() != "all")
        throw ValidationError("ground must be \"all\" or a list of sets",
                              "/ground");
      doc.ground_all = true;
    } else {
      doc.ground_all = false;
      doc.ground_sets = parse_index_lists(g, "/ground");
    }
  }

  if (!j.contains("winning"))
    throw ValidationError("winning is required", "/winning");
  doc.winning = parse_index_lists(j["winning"], "/winning");

  if (!j.contains("alternatives") || !j["alternatives"].is_array())
    throw ValidationError("alternatives must be a list of labels",
                          "/alternatives");
  for (std::size_t i = 0; i < j["alternatives"].size(); ++i) {
    const Json& v = j["alternatives"][i];
    if (!v.is_string())
      throw ValidationError("alternative label must be a string",
                            "/alternatives/" + std::to_string(i));
    doc.alternatives.push_back(v.get<std::string>());
  }

  if (j.contains("agenda")) {
    if (!j["agenda"].is_array())
      throw ValidationError("agenda must be a list of labels", "/agenda");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["agenda"].size(); ++i) {
      const Json& v = j["agenda"][i];
      if (!v.is_string())
        throw ValidationError("agenda label must be a string",
                              "/agenda/" + std::to_string(i));
      labels.push_back(v.get<std::string>());
    }
    doc.agenda = std::move(labels);
  }

  if (j.contains("profile")) {
    if (!j["profile"].is_object())
      throw ValidationError("profile must map player indices to pair lists",
                            "/profile");
    std::map<unsigned, std::vector<std::pair<std::string, std::string>>> prof;
    for (const auto& [key, value] : j["profile"].items()) {
      std::string path = "/profile/" + key;
      unsigned player = 0;
      try {
        std::size_t used = 0;
        player = static_cast<unsigned>(std::stoul(key, &used));
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ValidationError("profile key must be a player index", path);
      }
      if (!value.is_array())
        throw ValidationError("profile entry must be a list of pairs", path);
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const Json& pair = value[i];
        std::string pair_path = path + "/" + std::to_string(i);
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
          throw ValidationError("preference pair must be [better, worse]",
                                pair_path);
        pairs.emplace_back(pair[0].get<std::string>(),
                           pair[1].get<std::string>());
      }
      prof[player] = std::move(pairs);
    }
    doc.profile = std::move(prof);
  }
  return doc;
}

InstanceDocument parse_instance_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON", "");
  return parse_instance(j);
}

Json instance_to_json(const InstanceDocument& doc) {
  Json j = Json::object();
  j["players"] = doc.players;
  if (doc.algebra_blocks) j["algebra"] = *doc.algebra_blocks;
  if (doc.ground_given) {
    if (doc.ground_all)
      j["ground"] = "all";
    else
      j["ground"] = doc.ground_sets;
  }
  j["winning"] = doc.winning;
  j["alternatives"] = doc.alternatives;
  if (doc.agenda) j["agenda"] = *doc.agenda;
  if (doc.profile) {
    Json prof = Json::object();
    for (const auto& [player, pairs] : *doc.profile) {
      Json list = Json::array();
      for (const auto& [better, worse] : pairs)
        list.push_back(Json::array({better, worse}));
      prof[std::to_string(player)] = std::move(list);
    }
    j["profile"] = std::move(prof);
  }
  return j;
}

Algebra build_algebra(const InstanceDocument& doc) {
  if (!doc.algebra_blocks) return Algebra::full(doc.players);
  return Algebra::from_partition(PlayerSet(doc.players),
                                 coalitions_from_lists(*doc.algebra_blocks));
}

AlternativeSet build_alternatives(const InstanceDocument& doc) {
  return AlternativeSet::of(doc.alternatives);
}

SimpleGame build_game(const InstanceDocument& doc) {
  return SimpleGame::create(build_algebra(doc),
                            coalitions_from_lists(doc.winning));
}

WinningFamily build_family(const InstanceDocument& doc) {
  GroundCollection ground =
      doc.ground_given && !doc.ground_all
          ? GroundCollection::explicit_sets(coalitions_from_lists(doc.ground_sets))
          : GroundCollection::all_subsets();
  return WinningFamily::create(build_algebra(doc), std::move(ground),
                               coalitions_from_lists(doc.winning));
}

WinningSets build_winning_sets(const InstanceDocument& doc) {
  return WinningSets::of(doc.players, coalitions_from_lists(doc.winning));
}

Agenda build_agenda(const InstanceDocument& doc, const AlternativeSet& x,
                    const std::optional<std::vector<std::string>>& override_labels) {
  if (override_labels) return Agenda::of(x, *override_labels);
  if (doc.agenda) return Agenda::of(x, *doc.agenda);
  return Agenda::all(x);
}

Profile build_profile(const InstanceDocument& doc, const AlternativeSet& x) {
  if (!doc.profile)
    throw ValidationError("a profile is required for this command", "/profile");
  Profile profile;
  profile.preferences.reserve(doc.players);
  for (unsigned i = 0; i < doc.players; ++i) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    auto it = doc.profile->find(i);
    if (it != doc.profile->end()) {
      for (const auto& [better, worse] : it->second)
        pairs.emplace_back(x.index_of(better), x.index_of(worse));
    }
    profile.preferences.push_back(Preference::from_pairs(x.size(), pairs));
  }
  for (const auto& [player, pairs] : *doc.profile) {
    if (player >= doc.players)
      throw ValidationError("profile mentions an unknown player",
                            "/profile/" + std::to_string(player));
  }
  return profile;
}

Json coalition_to_json(const Coalition& c) {
  Json arr = Json::array();
  for (unsigned p : c.members()) arr.push_back(p);
  return arr;
}

Json coalitions_to_json(std::span<const Coalition> sets) {
  Json arr = Json::array();
  for (const Coalition& s : sets) arr.push_back(coalition_to_json(s));
  return arr;
}

Json profile_to_json(const Profile& profile, const AlternativeSet& x) {
  Json prof = Json::object();
  for (unsigned i = 0; i < profile.player_count(); ++i) {
    Json list = Json::array();
    for (auto [better, worse] : profile.of(i).pairs())
      list.push_back(Json::array({x.label(better), x.label(worse)}));
    prof[std::to_string(i)] = std::move(list);
  }
  return prof;
}

Json report_to_json(const TheoremReport& report, const AlternativeSet& x) {
  Json j = Json::object();
  Json statements = Json::object();
  for (const auto& [name, value] : report.statements) statements[name] = value;
  j["statements"] = std::move(statements);
  j["agree"] = report.agree;
  if (report.counterexample) {
    Json ce = Json::object();
    ce["statement"] = report.counterexample->statement;
    ce["profile_index"] = report.counterexample->profile_index;
    ce["profile"] = profile_to_json(report.counterexample->profile, x);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  j["profiles_enumerated"] = report.profiles_enumerated;
  j["core_computations"] = report.core_computations;
  j["evidence"] = report.evidence;
  j["notes"] = report.notes;
  return j;
}

namespace {

Json divergence_instance_to_json(const DivergenceInstance& inst) {
  Json j = Json::object();
  j["players"] = inst.players;
  j["algebra"] = coalitions_to_json(inst.blocks);
  j["sets"] = coalitions_to_json(inst.sets);
  j["detail"] = inst.detail;
  if (inst.alternative_count > 0) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < inst.alternative_count; ++i)
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    AlternativeSet x = AlternativeSet::of(labels);
    j["alternatives"] = labels;
    if (inst.profile) j["profile"] = profile_to_json(*inst.profile, x);
  }
  return j;
}

}  // namespace

Json divergence_to_json(const DivergenceReport& report) {
  Json j = Json::object();
  j["nu_prime_below_kappa"] =
      report.nu_prime_below_kappa
          ? divergence_instance_to_json(*report.nu_prime_below_kappa)
          : Json("none in range");
  j["family_vs_induced"] =
      report.family_vs_induced
          ? divergence_instance_to_json(*report.family_vs_induced)
          : Json("none in range");
  j["coreplus_strict"] =
      report.coreplus_strict
          ? divergence_instance_to_json(*report.coreplus_strict)
          : Json("none in range");
  j["instances_examined"] = report.instances_examined;
  return j;
}

InstanceDocument witness_document(const InstanceDocument& base,
                                  const AlternativeSet& x, const Agenda& agenda,
                                  const WitnessProfile& witness) {
  InstanceDocument doc = base;
  doc.agenda = x.labels_of(agenda.mask());
  std::map<unsigned, std::vector<std::pair<std::string, std::string>>> prof;
  for (unsigned i = 0; i < witness.profile.player_count(); ++i) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto [better, worse] : witness.profile.of(i).pairs())
      pairs.emplace_back(x.label(better), x.label(worse));
    prof[i] = std::move(pairs);
  }
  doc.profile = std::move(prof);
  return doc;
}

}  // namespace coregames
