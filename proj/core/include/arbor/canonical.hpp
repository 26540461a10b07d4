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

#include <map>
#include <string>
#include <vector>

#include "arbor/forest.hpp"

namespace arbor {

/// Position tuples of a chain that lie in each relation: entries are
/// {relation index, position...} with positions counted from 0 at the root.
using Profile = std::vector<std::vector<std::uint32_t>>;

/// Interning table for canonical codes. Codes from one table are
/// comparable across structures; codes from different tables are not.
class CodeTable {
 public:
  static constexpr int kEmptyPath = 0;

  /// Id of a top profile (tuples containing the top position).
  int label(const Profile& top);
  const Profile& profile(int label) const { return profiles_[label]; }

  /// Code of a path given the code of its parent path and its top label.
  int path(int parent_path, int top_label);
  std::size_t path_length(int path_code) const { return path_length_[path_code]; }

  /// AHU code: label plus multiset of child codes.
  int tree(int label, std::vector<int> children);
  /// Bisimulation code: label plus set of child codes.
  int reduced(int label, std::vector<int> children);
  int reduced_label(int code) const { return reduced_nodes_[code].first; }
  const std::vector<int>& reduced_children(int code) const { return reduced_nodes_[code].second; }

  /// A forest morphism from the subtree coded `from` to the one coded `to`
  /// exists, mapping the top of one onto the top of the other.
  bool simulates(int from, int to);

 private:
  std::map<Profile, int> profile_ids_;
  std::vector<Profile> profiles_;
  std::map<std::pair<int, int>, int> path_ids_{{{-1, -1}, 0}};
  std::vector<std::size_t> path_length_{0};
  std::map<std::vector<int>, int> tree_ids_;
  std::map<std::vector<int>, int> reduced_ids_;
  std::vector<std::pair<int, std::vector<int>>> reduced_nodes_;
  std::map<std::pair<int, int>, bool> simulation_;
};

/// True iff every tuple of `small` is in `large`.
bool profile_included(const Profile& small, const Profile& large);

/// Top profile of each element: tuples among its down-set containing it.
std::vector<Profile> top_profiles(const ForestStructure& x);

/// Path code of each element's down-set chain.
std::vector<int> path_codes(const ForestStructure& x, CodeTable& table);

/// AHU code of Path(X); equal codes mean isomorphic forests whenever the
/// relations only relate comparable elements.
int forest_code(const ForestStructure& x, CodeTable& table);

/// Same, with the nodes of `marked` distinguished (coslice isomorphism).
int marked_forest_code(const ForestStructure& x, const PathEmbedding& marked, CodeTable& table);

/// Bisimulation code of every node of Path(X); index 0 is the root.
std::vector<int> reduced_codes(const ForestStructure& x, CodeTable& table);

/// An explicit forest isomorphism when the AHU codes agree.
std::optional<ElementMap> forest_isomorphism(const ForestStructure& x, const ForestStructure& y);

/// Labeled tree with ordered children.
struct LabeledTree {
  std::string label;
  std::vector<LabeledTree> children;

  bool operator==(const LabeledTree&) const = default;
};

bool operator<(const LabeledTree& a, const LabeledTree& b);

/// Readable canonical form of a chain profile, for example "2|I(0,0)(1,1)|R(0,1)".
std::string profile_text(const Structure& s, const std::vector<Element>& chain);

/// The tree above `from` in Path(X), each node labeled by its chain's
/// profile, with equal sibling subtrees merged.
LabeledTree type_tree(const ForestStructure& x, const PathEmbedding& from);

/// Sorts children and merges equal siblings, bottom-up.
LabeledTree reduce(const LabeledTree& t);

/// Isomorphism-invariant key by exhaustive relabelling (at most 8 elements).
std::string canonical_key(const Structure& s);

}  // namespace arbor
