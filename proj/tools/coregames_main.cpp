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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coregames/cores.hpp"
#include "coregames/json_io.hpp"
#include "coregames/verify.hpp"
#include "coregames/witness.hpp"

namespace {

using coregames::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw coregames::ValidationError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::vector<std::string>> split_agenda(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  std::vector<std::string> labels;
  std::string current;
  for (char c : spec) {
    if (c == ',') {
      labels.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  labels.push_back(current);
  return labels;
}

coregames::ProfileEnumerationMode parse_mode(const std::string& mode) {
  if (mode == "full") return coregames::ProfileEnumerationMode::kFullAsymmetric;
  if (mode == "acyclic") return coregames::ProfileEnumerationMode::kAcyclicOnly;
  if (mode == "linear") return coregames::ProfileEnumerationMode::kLinearOnly;
  if (mode == "maxsets")
    return coregames::ProfileEnumerationMode::kMaximalSetsOnly;
  throw coregames::ValidationError("unknown mode: " + mode);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json cardinal_json(coregames::ExtendedCardinal value) {
  if (value.is_finite()) return Json(value.finite_value());
  return Json("inf");
}

struct Options {
  std::string command;
  std::string input;
  std::string agenda_spec;
  std::string mode = "full";
  unsigned jobs = 1;
  unsigned guard = 4;
  unsigned mmax = 3;
  std::size_t cover_limit = 2;
  bool oracle = false;
};

int run(const Options& opt) {
  using namespace coregames;

  if (opt.command == "search") {
    print_json(divergence_to_json(search_divergence_instance(opt.guard, opt.mmax)));
    return 0;
  }

  InstanceDocument doc = parse_instance_text(read_file(opt.input));
  AlternativeSet x = build_alternatives(doc);
  std::optional<std::vector<std::string>> agenda_override =
      split_agenda(opt.agenda_spec);
  Agenda agenda = build_agenda(doc, x, agenda_override);

  if (opt.command == "core" || opt.command == "coreplus") {
    WinningSets w = build_winning_sets(doc);
    Profile profile = build_profile(doc, x);
    if (profile.player_count() != w.player_count())
      throw ValidationError("profile and player counts disagree", "/profile");
    AltMask chosen = opt.command == "core" ? core(w, agenda, profile)
                                           : core_plus(w, agenda, profile);
    Json out = Json::object();
    out[opt.command == "core" ? "core" : "core_plus"] = x.labels_of(chosen);
    Json maximal = Json::object();
    for (unsigned i = 0; i < profile.player_count(); ++i)
      maximal[std::to_string(i)] =
          x.labels_of(maximal_set(profile.of(i), agenda));
    out["maximal_sets"] = std::move(maximal);
    print_json(out);
    return 0;
  }

  if (opt.command == "nakamura") {
    NakamuraResult nak = nakamura_number(build_game(doc));
    Json out = Json::object();
    out["nakamura"] = cardinal_json(nak.number);
    if (nak.number.is_finite())
      out["witness"] = coalitions_to_json(nak.witness);
    print_json(out);
    return 0;
  }

  if (opt.command == "kappa") {
    WinningFamily family = build_family(doc);
    KappaResult kappa = kappa_number(family);
    Json out = Json::object();
    out["kappa"] = cardinal_json(kappa.number);
    if (kappa.number.is_finite()) {
      out["witness"] = coalitions_to_json(kappa.witness_sets);
      out["closures"] = coalitions_to_json(kappa.witness_closures);
    }
    if (opt.oracle) {
      BruteforceKappaResult oracle =
          kappa_number_bruteforce(family, opt.cover_limit);
      out["oracle"] = cardinal_json(oracle.number);
      out["oracle_matches"] = oracle.number == kappa.number;
    }
    print_json(out);
    return 0;
  }

  if (opt.command == "witness" || opt.command == "witness-linear") {
    SimpleGame game = build_game(doc);
    WitnessProfile witness =
        opt.command == "witness"
            ? empty_core_witness(game, agenda)
            : empty_core_linear_witness(game, agenda, x);
    print_json(instance_to_json(witness_document(doc, x, agenda, witness)));
    return 0;
  }

  if (opt.command == "witness-extended") {
    WinningFamily family = build_family(doc);
    WitnessProfile witness = empty_coreplus_witness_extended(family, agenda);
    print_json(instance_to_json(witness_document(doc, x, agenda, witness)));
    return 0;
  }

  if (opt.command == "verify") {
    SimpleGame game = build_game(doc);
    TheoremReport report =
        opt.mode == "acyclic"
            ? check_acyclic_theorem(game, agenda, opt.jobs)
            : check_nakamura_equivalence(game, agenda, parse_mode(opt.mode),
                                         opt.jobs);
    print_json(report_to_json(report, x));
    return 0;
  }

  if (opt.command == "verify-extended") {
    WinningFamily family = build_family(doc);
    TheoremReport report = check_extended_equivalence(
        family, agenda, parse_mode(opt.mode), opt.jobs);
    print_json(report_to_json(report, x));
    return 0;
  }

  throw ValidationError("unknown command: " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coregames: cores, Nakamura and kappa numbers of simple games, "
               "empty-core witness profiles, and exhaustive theorem checks"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", opt.input, "JSON instance file")->required();
    cmd->add_option("--agenda", opt.agenda_spec,
                    "comma-separated agenda labels (overrides the document)");
  };

  add_common(app.add_subcommand("core", "core of the instance"), true);
  add_common(app.add_subcommand("coreplus",
                                "core without majority dissatisfaction"),
             true);
  add_common(app.add_subcommand("nakamura", "Nakamura number and witness"),
             true);
  CLI::App* kappa =
      app.add_subcommand("kappa", "kappa number, witness, and closures");
  add_common(kappa, true);
  kappa->add_flag("--oracle", opt.oracle, "also run the brute-force oracle");
  kappa->add_option("--cover-limit", opt.cover_limit,
                    "oracle cover size limit (default 2)");
  add_common(app.add_subcommand("witness", "empty-core witness profile"), true);
  add_common(app.add_subcommand("witness-linear",
                                "empty-core witness with linear orders"),
             true);
  add_common(app.add_subcommand("witness-extended",
                                "empty core-plus witness for a family"),
             true);
  CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem check");
  add_common(verify, true);
  verify->add_option("--mode", opt.mode, "full|acyclic|linear|maxsets");
  verify->add_option("--jobs", opt.jobs, "worker count for the sweep");
  CLI::App* verify_ext = app.add_subcommand(
      "verify-extended", "exhaustive extended-framework check");
  add_common(verify_ext, true);
  verify_ext->add_option("--mode", opt.mode, "full|acyclic|linear|maxsets");
  verify_ext->add_option("--jobs", opt.jobs, "worker count for the sweep");
  CLI::App* search =
      app.add_subcommand("search", "search for separating instances");
  search->add_option("--guard", opt.guard, "player-count bound (default 4)");
  search->add_option("--mmax", opt.mmax, "alternative-count bound (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err = Json::object();
    err["error"] = {{"code", "usage"}, {"message", e.what()}, {"path", ""}};
    print_json(err);
    return 2;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    return run(opt);
  } catch (const coregames::ScaleError& e) {
    Json err = Json::object();
    err["error"] = {{"code", e.code()}, {"message", e.what()}, {"path", ""}};
    print_json(err);
    return 3;
  } catch (const coregames::PreconditionError& e) {
    Json err = Json::object();
    err["error"] = {{"code", e.code()}, {"message", e.what()}, {"path", ""}};
    print_json(err);
    return 3;
  } catch (const coregames::ValidationError& e) {
    Json err = Json::object();
    err["error"] = {{"code", e.code()}, {"message", e.what()}, {"path", e.path()}};
    print_json(err);
    return 2;
  } catch (const coregames::Error& e) {
    Json err = Json::object();
    err["error"] = {{"code", e.code()}, {"message", e.what()}, {"path", ""}};
    print_json(err);
    return 2;
  }
}
