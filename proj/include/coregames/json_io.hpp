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

#ifndef COREGAMES_JSON_IO_HPP
#define COREGAMES_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coregames/extended.hpp"
#include "coregames/verify.hpp"
#include "coregames/witness.hpp"

namespace coregames {

using Json = nlohmann::ordered_json;

// The CLI's JSON instance format.  Player indices are 0-based; alternatives
// are referenced by label.
//
//   players:       number of players (required)
//   algebra:       partition as a list of player-index lists; absent = 2^N
//   ground:        "all" or an explicit list of player sets; absent = "all"
//   winning:       list of player sets (required)
//   alternatives:  list of labels (required)
//   agenda:        list of labels; absent = all alternatives
//   profile:       map player-index -> list of [better, worse] label pairs
struct InstanceDocument {
  unsigned players = 0;
  std::optional<std::vector<std::vector<unsigned>>> algebra_blocks;
  bool ground_given = false;
  bool ground_all = true;
  std::vector<std::vector<unsigned>> ground_sets;
  std::vector<std::vector<unsigned>> winning;
  std::vector<std::string> alternatives;
  std::optional<std::vector<std::string>> agenda;
  std::optional<std::map<unsigned, std::vector<std::pair<std::string, std::string>>>>
      profile;
};

// Parsing and serialization; parse errors carry the offending JSON path.
InstanceDocument parse_instance(const Json& j);
InstanceDocument parse_instance_text(const std::string& text);
Json instance_to_json(const InstanceDocument& doc);

// Domain object builders; all validation errors come from the constructing
// operations of the respective modules.
Algebra build_algebra(const InstanceDocument& doc);
AlternativeSet build_alternatives(const InstanceDocument& doc);
SimpleGame build_game(const InstanceDocument& doc);
WinningFamily build_family(const InstanceDocument& doc);
WinningSets build_winning_sets(const InstanceDocument& doc);
Agenda build_agenda(const InstanceDocument& doc, const AlternativeSet& x,
                    const std::optional<std::vector<std::string>>& override_labels);
Profile build_profile(const InstanceDocument& doc, const AlternativeSet& x);

// Serialization of results.
Json coalition_to_json(const Coalition& c);
Json coalitions_to_json(std::span<const Coalition> sets);
Json profile_to_json(const Profile& profile, const AlternativeSet& x);
Json report_to_json(const TheoremReport& report, const AlternativeSet& x);
Json divergence_to_json(const DivergenceReport& report);

// A full instance document embedding a generated witness profile, suitable
// for feeding back into the CLI.
InstanceDocument witness_document(const InstanceDocument& base,
                                  const AlternativeSet& x, const Agenda& agenda,
                                  const WitnessProfile& witness);

}  // namespace coregames

#endif  // COREGAMES_JSON_IO_HPP
