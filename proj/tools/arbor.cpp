/*
 * Copyright 2026 The Arbor Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arbor/adjunction.hpp"
#include "arbor/back_and_forth.hpp"
#include "arbor/canonical.hpp"
#include "arbor/characteristic.hpp"
#include "arbor/decide.hpp"
#include "arbor/ef_comonad.hpp"
#include "arbor/environment.hpp"
#include "arbor/errors.hpp"
#include "arbor/eval.hpp"
#include "arbor/extension.hpp"
#include "arbor/games.hpp"
#include "arbor/harness.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/io.hpp"
#include "arbor/modal_comonad.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace arbor;

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitSizeCap = 2;
constexpr int kExitInternal = 3;

constexpr const char* kCachePrefix = ".arbor-cache-";

StructureFile load(const std::string& path, bool allow_parent = false) {
  return load_structure(path, ParseOptions{false, allow_parent});
}

PointedStructure load_pointed(const std::string& path) { return load(path).pointed(); }

json tree_to_json(const LabeledTree& t) {
  json children = json::array();
  for (const auto& c : t.children) children.push_back(tree_to_json(c));
  return {{"label", t.label}, {"children", std::move(children)}};
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

// Structure files of a directory in file-name order, skipping the cache.
std::vector<fs::path> structure_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw MalformedInput("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" && !name.starts_with(kCachePrefix)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

json counterexample_json(const std::optional<std::pair<std::size_t, std::size_t>>& pair,
                         const Universe& u) {
  if (!pair) return nullptr;
  return {{"member", u.name(pair->first)}, {"non_member", u.name(pair->second)}};
}

json hp_report_json(const HPReport& r, const Universe& u) {
  json members = json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (r.members[i]) members.push_back(u.name(i));
  }
  json j{{"logic", std::string(logic_name(r.logic))},
         {"k", r.k},
         {"variant", r.counting ? "HP#" : "HP"},
         {"scope", "relative to the supplied universe of " + std::to_string(u.size()) + " structures"},
         {"members", members},
         {"saturated_under_equiv", r.saturated_equiv},
         {"saturated_under_iso", r.saturated_iso},
         {"closed_under_morphisms", r.closed_under_morphisms},
         {"upward_closed_under_arrow", r.upward_closed},
         {"applicable", r.applicable},
         {"equiv_counterexample", counterexample_json(r.equiv_counterexample, u)},
         {"iso_counterexample", counterexample_json(r.iso_counterexample, u)},
         {"arrow_counterexample", counterexample_json(r.arrow_counterexample, u)}};
  if (r.morphism_counterexample) {
    const auto& m = *r.morphism_counterexample;
    j["morphism_counterexample"] = {
        {"from", u.name(m.from)},
        {"to", u.name(m.to)},
        {"map", map_to_json(m.map, u.member(m.from).base, u.member(m.to).base)}};
  } else {
    j["morphism_counterexample"] = nullptr;
  }
  json minimal = json::array();
  for (std::size_t i : r.minimal_members) minimal.push_back(u.name(i));
  j["minimal_members"] = minimal;
  if (r.fo_witness) {
    j["witness"] = {{"formula", to_string(r.fo_witness)},
                    {"quantifier_rank", quantifier_rank(r.fo_witness)},
                    {"existential_positive", is_existential_positive(r.fo_witness)},
                    {"verified", r.witness_verified}};
  } else if (r.modal_witness) {
    j["witness"] = {{"formula", to_string(r.modal_witness)},
                    {"modal_depth", modal_depth(r.modal_witness)},
                    {"existential_positive", is_existential_positive(r.modal_witness)},
                    {"verified", r.witness_verified}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json sequence_json(const Tuple& seq, const Structure& s) {
  json out = json::array();
  for (Element x : seq) out.push_back(s.name(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game comonads, resource-indexed relations and preservation checks"};
  app.require_subcommand(1);
  std::function<json()> action;

  int k = 1;
  std::string logic_text = "ef";
  std::string kind;
  std::string file_a;
  std::string file_b;

  // structure validate F
  auto* structure = app.add_subcommand("structure", "Structure files");
  structure->require_subcommand(1);
  auto* validate = structure->add_subcommand("validate", "Parse and check a structure or forest file");
  validate->add_option("file", file_a)->required();
  validate->callback([&] {
    action = [&] {
      const StructureFile f = load_structure(file_a, ParseOptions{true, true});
      json vocab = json::object();
      const Vocabulary& v = f.structure.vocabulary();
      for (std::size_t r = 0; r < v.size(); ++r) vocab[v.name(r)] = v.arity(r);
      json out{{"result", true},
               {"elements", f.structure.size()},
               {"vocabulary", vocab},
               {"pointed", f.point.has_value()},
               {"forest", f.parent.has_value()}};
      if (f.parent) {
        const ForestStructure x = f.forest();
        out["height"] = x.height();
        out["condition_E"] = check_condition_E(x);
        if (v.is_modal()) out["condition_M"] = check_condition_M(x);
      }
      return out;
    };
  });

  // comonad ef|modal --k K F
  auto* comonad = app.add_subcommand("comonad", "Build the carrier of E_k or M_k as a forest file");
  comonad->add_option("kind", kind)->required()->check(CLI::IsMember({"ef", "modal"}));
  comonad->add_option("--k", k)->required();
  comonad->add_option("file", file_a)->required();
  comonad->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      if (kind == "ef") return to_json(ef_build(load(file_a).structure, k, limits).carrier);
      const ModalCoalgebra c = modal_build(load_pointed(file_a), k, limits);
      return to_json(c.carrier, c.point);
    };
  });

  // decide hom|arrow|equiv|iso --logic L --k K A B
  auto* decide = app.add_subcommand("decide", "Decide a relation between two structures");
  decide->add_option("relation", kind)->required()->check(CLI::IsMember({"hom", "arrow", "equiv", "iso"}));
  decide->add_option("--logic", logic_text)->check(CLI::IsMember({"ef", "modal"}));
  decide->add_option("--k", k);
  decide->add_option("a", file_a)->required();
  decide->add_option("b", file_b)->required();
  decide->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      const Logic logic = parse_logic(logic_text);
      json out{{"relation", kind}, {"logic", logic_text}, {"k", k}};
      if (logic == Logic::EF) {
        const Structure a = load(file_a).structure;
        const Structure b = load(file_b).structure;
        require_same_vocabulary(a, b);
        if (kind == "hom") {
          auto h = find_homomorphism(a, b);
          out["result"] = h.has_value();
          out["map"] = h ? map_to_json(*h, a, b) : json(nullptr);
        } else if (kind == "arrow") {
          auto w = arrow_witness(a, b, k, limits);
          out["result"] = w.has_value();
          out["map"] = w ? map_to_json(w->map, w->source, b) : json(nullptr);
        } else if (kind == "equiv") {
          out["result"] = decide_equiv(a, b, k, limits);
        } else {
          out["result"] = decide_iso(a, b, k, limits);
        }
      } else {
        const PointedStructure a = load_pointed(file_a);
        const PointedStructure b = load_pointed(file_b);
        require_same_vocabulary(a.base, b.base);
        if (kind == "hom") {
          PartialMap fixed(a.base.size());
          fixed[a.point] = b.point;
          auto h = find_homomorphism(a.base, b.base, fixed);
          out["result"] = h.has_value();
          out["map"] = h ? map_to_json(*h, a.base, b.base) : json(nullptr);
        } else if (kind == "arrow") {
          auto w = arrow_witness(a, b, k, limits);
          out["result"] = w.has_value();
          out["map"] = w ? map_to_json(w->map, w->source, b.base) : json(nullptr);
        } else if (kind == "equiv") {
          out["result"] = decide_equiv(a, b, k, limits);
        } else {
          out["result"] = decide_iso(a, b, k, limits);
        }
      }
      return out;
    };
  });

  // oracle efgame|epgame|bisim|graded --k K A B
  auto* oracle = app.add_subcommand("oracle", "Game-based reference decisions");
  oracle->add_option("game", kind)->required()->check(CLI::IsMember({"efgame", "epgame", "bisim", "graded"}));
  oracle->add_option("--k", k)->required();
  oracle->add_option("a", file_a)->required();
  oracle->add_option("b", file_b)->required();
  oracle->callback([&] {
    action = [&] {
      bool result = false;
      if (kind == "efgame" || kind == "epgame") {
        const Structure a = load(file_a).structure;
        const Structure b = load(file_b).structure;
        require_same_vocabulary(a, b);
        result = kind == "efgame" ? oracle_ef_game(a, b, k) : oracle_ep_game(a, b, k);
      } else {
        const PointedStructure a = load_pointed(file_a);
        const PointedStructure b = load_pointed(file_b);
        require_same_vocabulary(a.base, b.base);
        result = kind == "bisim" ? oracle_bisim_game(a, b, k) : oracle_graded_bisim(a, b, k);
      }
      return json{{"game", kind}, {"k", k}, {"result", result}};
    };
  });

  // formula eval F S
  std::string formula_text;
  std::vector<std::string> assignments;
  auto* formula = app.add_subcommand("formula", "Formula tools");
  formula->require_subcommand(1);
  auto* eval = formula->add_subcommand("eval", "Evaluate a formula on a structure");
  eval->add_option("formula", formula_text)->required();
  eval->add_option("structure", file_a)->required();
  eval->add_option("--assign", assignments, "Variable assignment var=element");
  eval->callback([&] {
    action = [&] {
      if (looks_modal(formula_text)) {
        const ModalPtr f = parse_modal(formula_text);
        return json{{"result", eval_modal(f, load_pointed(file_a))},
                    {"modal_depth", modal_depth(f)},
                    {"existential_positive", is_existential_positive(f)}};
      }
      const FOPtr f = parse_fo(formula_text);
      const Structure s = load(file_a).structure;
      Assignment assignment;
      for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw MalformedInput("assignment must look like var=element");
        assignment[a.substr(0, eq)] = s.element(a.substr(eq + 1));
      }
      return json{{"result", eval_fo(f, s, assignment)},
                  {"quantifier_rank", quantifier_rank(f)},
                  {"existential_positive", is_existential_positive(f)}};
    };
  });

  // witness ep-fo|ep-modal --k K A
  auto* witness = app.add_subcommand("witness", "Existential positive characteristic formula");
  witness->add_option("kind", kind)->required()->check(CLI::IsMember({"ep-fo", "ep-modal"}));
  witness->add_option("--k", k)->required();
  witness->add_option("file", file_a)->required();
  witness->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      if (kind == "ep-fo") {
        const FOPtr f = ep_characteristic_fo(load(file_a).structure, k, limits);
        return json{{"formula", to_string(f)},
                    {"quantifier_rank", quantifier_rank(f)},
                    {"size", tree_size(f, limits.formula_cap)}};
      }
      const ModalPtr f = ep_characteristic_modal(load_pointed(file_a), k, limits);
      return json{{"formula", to_string(f)},
                  {"modal_depth", modal_depth(f)},
                  {"size", tree_size(f, limits.formula_cap)}};
    };
  });

  // typetree --k K A
  auto* typetree = app.add_subcommand("typetree", "Reduced type tree of R_k(A) from its root");
  typetree->add_option("--k", k)->required();
  typetree->add_option("--logic", logic_text)->check(CLI::IsMember({"ef", "modal"}));
  typetree->add_option("file", file_a)->required();
  typetree->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      if (parse_logic(logic_text) == Logic::EF) {
        const EFCoalgebra r = ef_adjoint_R(load(file_a).structure, k, limits);
        return tree_to_json(type_tree(r.carrier, PathEmbedding{}));
      }
      const ModalCoalgebra c = modal_build(load_pointed(file_a), k, limits);
      return tree_to_json(type_tree(c.carrier, PathEmbedding{}));
    };
  });

  // extend --k K --steps N --env-nodes M A
  int steps = 1;
  std::size_t env_nodes = 3;
  std::string out_dir;
  bool skip_check = false;
  auto* extend = app.add_subcommand("extend", "Iterated one-step extensions with section certificates");
  extend->add_option("--k", k)->required();
  extend->add_option("--steps", steps);
  extend->add_option("--env-nodes", env_nodes);
  extend->add_option("--out", out_dir, "Write the chain and certificates into this directory");
  extend->add_flag("--no-check", skip_check, "Skip the relative extendability check");
  extend->add_option("file", file_a)->required();
  extend->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      const Structure a = load(file_a).structure;
      const EnvironmentFamily env = default_environment(a.vocabulary(), k, env_nodes, limits);
      const std::vector<ExtensionStep> chain = extend_iterated(a, k, env, steps, limits);
      json structures = json::array({to_json(a)});
      json certificates = json::array();
      json summary = json::array();
      const Structure* previous = &a;
      bool all_relative = true;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const Extension& step = chain[i].step;
        structures.push_back(to_json(step.b));
        const bool verified = verify_section(step.section, step.retraction, *previous, step.b);
        certificates.push_back({{"step", i + 1},
                                {"section", map_to_json(step.section, *previous, step.b)},
                                {"retraction", map_to_json(step.retraction, step.b, *previous)},
                                {"verified", verified}});
        json entry{{"step", i + 1}, {"size", step.b.size()}, {"legs", step.legs}, {"section_verified", verified}};
        if (!skip_check) {
          const RelativeReport rep = check_relative_extendability(step.section, *previous, step.b, k, env);
          all_relative = all_relative && rep.holds;
          json check{{"holds", rep.holds},
                     {"matched_pairs", rep.matched_pairs},
                     {"extensions_checked", rep.extensions_checked}};
          if (rep.counterexample) {
            const auto& c = *rep.counterexample;
            const Structure& e = env.members[c.env_index].structure;
            check["counterexample"] = {{"environment_member", to_json(e)},
                                       {"m", sequence_json(c.m, *previous)},
                                       {"n", sequence_json(c.n, e)},
                                       {"n_prime", sequence_json(c.n_prime, e)}};
          }
          entry["relative_check"] = check;
        }
        summary.push_back(std::move(entry));
        previous = &step.b;
      }
      json out{{"k", k},
               {"environment_size", env.size()},
               {"environment_nodes", env_nodes},
               {"steps", summary}};
      if (!skip_check && !chain.empty()) {
        out["scope"] = all_relative
                           ? "each step is k-extendable relative to its section, the supplied environment "
                             "and step budget"
                           : "some step failed the relative check";
      }
      if (out_dir.empty()) {
        out["chain"] = structures;
        out["certificates"] = certificates;
      } else {
        fs::create_directories(out_dir);
        json files = json::array();
        for (std::size_t i = 0; i < structures.size(); ++i) {
          const fs::path p = fs::path(out_dir) / ("b" + std::to_string(i) + ".json");
          write_json(p, structures[i]);
          files.push_back(p.string());
        }
        const fs::path cert = fs::path(out_dir) / "certificates.json";
        write_json(cert, certificates);
        out["files"] = files;
        out["certificate_file"] = cert.string();
      }
      return out;
    };
  });

  // hpt check|bcp|idempotent|negative-restriction
  auto* hpt = app.add_subcommand("hpt", "Preservation harness");
  hpt->require_subcommand(1);
  std::string universe_dir;
  std::string members_text;
  bool counting = false;
  bool no_cache = false;
  auto* check = hpt->add_subcommand("check", "Preservation property for a class within a universe");
  check->add_option("--k", k)->required();
  check->add_option("--universe", universe_dir)->required();
  check->add_option("--logic", logic_text)->check(CLI::IsMember({"ef", "modal"}));
  auto* by_formula = check->add_option("--formula", formula_text);
  auto* by_members = check->add_option("--members", members_text, "Comma separated file stems");
  by_formula->excludes(by_members);
  check->add_flag("--counting", counting, "Saturation under the isomorphism relation");
  check->add_flag("--no-cache", no_cache);
  check->callback([&] {
    action = [&] {
      if (formula_text.empty() == members_text.empty()) {
        throw MalformedInput("give exactly one of --formula and --members");
      }
      const Logic logic = parse_logic(logic_text);
      std::vector<std::string> names;
      std::vector<PointedStructure> members;
      for (const auto& path : structure_files(universe_dir)) {
        names.push_back(path.stem().string());
        const StructureFile f = load(path.string());
        PointedStructure p;
        p.base = f.structure;
        if (logic == Logic::Modal) p = f.pointed();
        members.push_back(std::move(p));
      }
      Universe u(logic, k, names, std::move(members), Limits::from_environment());
      const fs::path cache = fs::path(universe_dir) / (kCachePrefix + u.content_hash() + ".json");
      if (!no_cache && fs::exists(cache)) {
        try {
          u.load_matrices(json::parse(read_text(cache)));
        } catch (const json::exception&) {
          // Unreadable caches are recomputed.
        }
      }
      std::vector<bool> in_class;
      if (!formula_text.empty()) {
        in_class = logic == Logic::Modal ? members_satisfying(u, parse_modal(formula_text))
                                         : members_satisfying(u, parse_fo(formula_text));
      } else {
        in_class.assign(u.size(), false);
        std::stringstream list(members_text);
        std::string item;
        while (std::getline(list, item, ',')) {
          const auto it = std::find(names.begin(), names.end(), item);
          if (it == names.end()) throw MalformedInput("unknown universe member '" + item + "'");
          in_class[it - names.begin()] = true;
        }
      }
      u.check_coherence();
      const HPReport report = check_hp(u, in_class, counting);
      if (!no_cache) write_json(cache, u.matrices_to_json());
      json out = hp_report_json(report, u);
      if (!formula_text.empty()) out["class_formula"] = formula_text;
      return out;
    };
  });

  auto* bcp = hpt->add_subcommand("bcp", "Bisimilar companion property for one structure");
  bcp->add_option("--k", k)->required();
  bcp->add_option("--logic", logic_text)->check(CLI::IsMember({"ef", "modal"}));
  bcp->add_option("file", file_a)->required();
  bcp->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      const bool result = parse_logic(logic_text) == Logic::EF
                              ? check_bcp(load(file_a).structure, k, limits)
                              : check_bcp(load_pointed(file_a), k, limits);
      return json{{"result", result}, {"logic", logic_text}, {"k", k}};
    };
  });

  std::string idempotent_logic = "modal";
  auto* idempotent = hpt->add_subcommand("idempotent", "R_k P isomorphic to R_k G_k P");
  idempotent->add_option("--k", k)->required();
  idempotent->add_option("--logic", idempotent_logic)->check(CLI::IsMember({"ef", "modal"}));
  idempotent->add_option("file", file_a)->required();
  idempotent->callback([&] {
    action = [&] {
      const Limits limits = Limits::from_environment();
      const bool result = idempotent_logic == "ef" ? check_idempotent(load(file_a).structure, k, limits)
                                                   : check_idempotent(load_pointed(file_a), k, limits);
      return json{{"result", result}, {"logic", idempotent_logic}, {"k", k}};
    };
  });

  std::string theory_file;
  std::string samples_dir;
  auto* negative = hpt->add_subcommand("negative-restriction", "G_k preserves models of a negative theory");
  negative->add_option("--k", k)->required();
  negative->add_option("--theory", theory_file, "One sentence per line; '#' starts a comment")->required();
  negative->add_option("--samples", samples_dir)->required();
  negative->callback([&] {
    action = [&] {
      std::vector<FOPtr> theory;
      std::stringstream lines(read_text(theory_file));
      std::string line;
      while (std::getline(lines, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        theory.push_back(parse_fo(line));
      }
      std::vector<std::string> names;
      std::vector<Structure> samples;
      for (const auto& path : structure_files(samples_dir)) {
        names.push_back(path.stem().string());
        samples.push_back(load(path.string()).structure);
      }
      const NegativeRestrictionReport r =
          check_negative_restriction(theory, k, samples, Limits::from_environment());
      return json{{"result", r.holds},
                  {"theory_size", theory.size()},
                  {"samples", samples.size()},
                  {"models", r.models},
                  {"counit_surjective", r.counit_surjective},
                  {"failing_sample", r.failing_sample ? json(names[*r.failing_sample]) : json(nullptr)}};
    };
  });

  auto fail = [](const char* kind, const std::string& message, int code) {
    std::cout << json{{"error", kind}, {"message", message}}.dump(2) << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kExitMalformed);
  }

  try {
    std::cout << action().dump(2) << "\n";
    return 0;
  } catch (const SizeCapExceeded& e) {
    return fail("size_cap", e.what(), kExitSizeCap);
  } catch (const MalformedInput& e) {
    return fail("malformed_input", e.what(), kExitMalformed);
  } catch (const UnsupportedInput& e) {
    return fail("unsupported_input", e.what(), kExitMalformed);
  } catch (const json::exception& e) {
    return fail("malformed_input", e.what(), kExitMalformed);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitInternal);
  }
}
