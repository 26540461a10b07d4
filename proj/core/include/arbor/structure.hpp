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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbor {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;
/// Total function between universes, indexed by source element.
using ElementMap = std::vector<Element>;

/// Designated binary symbol used by the equality expansion.
inline constexpr std::string_view kEqualitySymbol = "I";

/// Relation symbols with their arities, kept sorted by name.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::initializer_list<std::pair<std::string, int>> symbols);
  explicit Vocabulary(std::vector<std::pair<std::string, int>> symbols);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int arity(std::size_t i) const { return arities_[i]; }

  std::optional<std::size_t> find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol).has_value(); }
  /// Throws MalformedInput for unknown symbols.
  std::size_t index_of(std::string_view symbol) const;

  /// Every arity is at most two.
  bool is_modal() const;

  Vocabulary with(std::string symbol, int arity) const;
  Vocabulary without(std::string_view symbol) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> arities_;
};

/// Sorted, duplicate-free set of tuples of one arity, stored flat.
class Relation {
 public:
  Relation() = default;
  Relation(int arity, std::vector<Element> flat);

  int arity() const { return arity_; }
  std::size_t size() const { return arity_ == 0 ? 0 : flat_.size() / arity_; }
  bool empty() const { return flat_.empty(); }
  std::span<const Element> tuple(std::size_t i) const {
    return {flat_.data() + i * arity_, static_cast<std::size_t>(arity_)};
  }
  bool contains(std::span<const Element> t) const;
  const std::vector<Element>& flat() const { return flat_; }

  bool operator==(const Relation&) const = default;

 private:
  int arity_ = 0;
  std::vector<Element> flat_;
};

/// Finite relational structure. Elements are indices into a universe of
/// names sorted lexicographically, so index order is name order.
class Structure {
 public:
  Structure() = default;

  const Vocabulary& vocabulary() const { return vocab_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws MalformedInput for unknown names.
  Element element(std::string_view name) const;

  const Relation& relation(std::size_t symbol) const { return relations_[symbol]; }
  const Relation& relation(std::string_view symbol) const;
  bool holds(std::size_t symbol, std::span<const Element> t) const {
    return relations_[symbol].contains(t);
  }
  bool holds(std::size_t symbol, std::initializer_list<Element> t) const {
    return relations_[symbol].contains(std::span<const Element>(t.begin(), t.size()));
  }

  bool operator==(const Structure&) const = default;

 private:
  friend class StructureBuilder;
  Vocabulary vocab_;
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

using StructurePtr = std::shared_ptr<const Structure>;

/// Accumulates elements and tuples under provisional ids; build() sorts the
/// universe by name and renumbers.
class StructureBuilder {
 public:
  explicit StructureBuilder(Vocabulary vocab);

  /// Returns the provisional id; names must be unique.
  Element add(std::string name);
  std::size_t size() const { return names_.size(); }
  void relate(std::size_t symbol, std::span<const Element> provisional);
  void relate(std::size_t symbol, std::initializer_list<Element> provisional) {
    relate(symbol, std::span<const Element>(provisional.begin(), provisional.size()));
  }
  void relate(std::string_view symbol, std::initializer_list<Element> provisional) {
    relate(vocab_.index_of(symbol), provisional);
  }

  Structure build() &&;
  /// Also reports where each provisional id ended up.
  std::pair<Structure, ElementMap> build_with_ids() &&;

 private:
  Vocabulary vocab_;
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> flat_;
};

/// Convenience constructor from names; throws MalformedInput on bad input.
Structure make_structure(const Vocabulary& vocab, const std::vector<std::string>& universe,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& tuples);

struct PointedStructure {
  Structure base;
  Element point = 0;

  PointedStructure() = default;
  PointedStructure(Structure s, Element p);
};

/// Structure-preserving map; `map[x]` is the image of source element x.
struct Homomorphism {
  StructurePtr source;
  StructurePtr target;
  ElementMap map;

  Element operator()(Element x) const { return map[x]; }
};

/// Induced substructure on `keep` (any order, duplicates ignored); the
/// returned map sends new elements to their original ids.
std::pair<Structure, ElementMap> induced_substructure(const Structure& s, std::vector<Element> keep);

/// Same structure over a reduced vocabulary.
Structure reduct(const Structure& s, const Vocabulary& smaller);

}  // namespace arbor
