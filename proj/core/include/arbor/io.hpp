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

#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "arbor/forest.hpp"
#include "arbor/structure.hpp"

namespace arbor {

struct ParseOptions {
  /// Accept the reserved equality symbol I in the vocabulary.
  bool allow_equality = false;
  /// Accept a "parent" object describing a forest order.
  bool allow_parent = false;
};

/// Contents of a structure or forest file.
struct StructureFile {
  Structure structure;
  std::optional<Element> point;
  std::optional<std::vector<Element>> parent;

  PointedStructure pointed() const;
  ForestStructure forest() const;
};

/// Throws MalformedInput on unknown keys, bad arities or unknown names.
StructureFile structure_from_json(const nlohmann::json& j, const ParseOptions& options = {});
StructureFile load_structure(const std::filesystem::path& path, const ParseOptions& options = {});

nlohmann::json to_json(const Structure& s, std::optional<Element> point = std::nullopt);
nlohmann::json to_json(const ForestStructure& x, std::optional<Element> point = std::nullopt);
/// Element map as an object from source names to target names.
nlohmann::json map_to_json(const ElementMap& f, const Structure& source, const Structure& target);

}  // namespace arbor
