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

#include "arbor/io.hpp"

#include <fstream>
#include <map>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

using nlohmann::json;

PointedStructure StructureFile::pointed() const {
  if (!point) throw MalformedInput("structure file has no \"point\"");
  return PointedStructure(structure, *point);
}

ForestStructure StructureFile::forest() const {
  if (!parent) return ForestStructure(structure, std::vector<Element>(structure.size(), kNoParent));
  return ForestStructure(structure, *parent);
}

StructureFile structure_from_json(const json& j, const ParseOptions& options) {
  if (!j.is_object()) throw MalformedInput("structure must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vocabulary" && key != "universe" && key != "relations" && key != "point" &&
        !(options.allow_parent && key == "parent")) {
      throw MalformedInput("unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("vocabulary") || !j.at("vocabulary").is_object()) {
    throw MalformedInput("missing \"vocabulary\" object");
  }
  if (!j.contains("universe") || !j.at("universe").is_array()) {
    throw MalformedInput("missing \"universe\" array");
  }
  std::vector<std::pair<std::string, int>> symbols;
  for (const auto& [name, arity] : j.at("vocabulary").items()) {
    if (!arity.is_number_integer()) throw MalformedInput("arity of \"" + name + "\" is not an integer");
    if (name == kEqualitySymbol && !options.allow_equality) {
      throw MalformedInput("the symbol I is reserved for the equality expansion");
    }
    symbols.emplace_back(name, arity.get<int>());
  }
  Vocabulary vocab(std::move(symbols));
  StructureBuilder builder(vocab);
  std::map<std::string, Element, std::less<>> ids;
  for (const auto& name : j.at("universe")) {
    if (!name.is_string()) throw MalformedInput("universe entries must be strings");
    const std::string s = name.get<std::string>();
    if (ids.contains(s)) throw MalformedInput("duplicate element \"" + s + "\"");
    ids[s] = builder.add(s);
  }
  auto lookup = [&](const json& name) -> Element {
    if (!name.is_string()) throw MalformedInput("element references must be strings");
    auto it = ids.find(name.get<std::string>());
    if (it == ids.end()) throw MalformedInput("unknown element \"" + name.get<std::string>() + "\"");
    return it->second;
  };
  if (j.contains("relations")) {
    if (!j.at("relations").is_object()) throw MalformedInput("\"relations\" must be an object");
    for (const auto& [symbol, tuples] : j.at("relations").items()) {
      const std::size_t r = vocab.index_of(symbol);
      if (!tuples.is_array()) throw MalformedInput("tuples of \"" + symbol + "\" must be an array");
      for (const auto& t : tuples) {
        if (!t.is_array()) throw MalformedInput("each tuple must be an array");
        Tuple tuple;
        for (const auto& name : t) tuple.push_back(lookup(name));
        builder.relate(r, tuple);
      }
    }
  }
  std::optional<Element> point;
  if (j.contains("point")) point = lookup(j.at("point"));
  std::optional<std::vector<Element>> parent;
  if (j.contains("parent")) {
    if (!j.at("parent").is_object()) throw MalformedInput("\"parent\" must be an object");
    parent.emplace(builder.size(), kNoParent);
    for (const auto& [child, up] : j.at("parent").items()) {
      (*parent)[lookup(json(child))] = lookup(up);
    }
  }
  auto [structure, final_id] = std::move(builder).build_with_ids();
  StructureFile out{std::move(structure), std::nullopt, std::nullopt};
  if (point) out.point = final_id[*point];
  if (parent) {
    out.parent.emplace(parent->size(), kNoParent);
    for (std::size_t i = 0; i < parent->size(); ++i) {
      if ((*parent)[i] != kNoParent) (*out.parent)[final_id[i]] = final_id[(*parent)[i]];
    }
    out.forest();  // validates acyclicity
  }
  return out;
}

StructureFile load_structure(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
  return structure_from_json(j, options);
}

json to_json(const Structure& s, std::optional<Element> point) {
  json j;
  j["vocabulary"] = json::object();
  j["relations"] = json::object();
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const std::string& name = s.vocabulary().name(r);
    j["vocabulary"][name] = s.vocabulary().arity(r);
    json tuples = json::array();
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      json t = json::array();
      for (Element e : rel.tuple(i)) t.push_back(s.name(e));
      tuples.push_back(std::move(t));
    }
    j["relations"][name] = std::move(tuples);
  }
  j["universe"] = s.names();
  if (point) j["point"] = s.name(*point);
  return j;
}

json to_json(const ForestStructure& x, std::optional<Element> point) {
  json j = to_json(x.base(), point);
  j["parent"] = json::object();
  for (Element e = 0; e < x.size(); ++e) {
    if (!x.is_root(e)) j["parent"][x.base().name(e)] = x.base().name(x.parent(e));
  }
  return j;
}

json map_to_json(const ElementMap& f, const Structure& source, const Structure& target) {
  json j = json::object();
  for (Element e = 0; e < f.size(); ++e) j[source.name(e)] = target.name(f[e]);
  return j;
}

}  // namespace arbor
