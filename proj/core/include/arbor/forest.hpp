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

#include <optional>
#include <vector>

#include "arbor/structure.hpp"

namespace arbor {

inline constexpr Element kNoParent = ~Element{0};

/// A structure with a forest order given by a parent map.
class ForestStructure {
 public:
  ForestStructure() = default;
  /// `parent[x]` is the parent of x or kNoParent for roots.
  /// Throws MalformedInput on size mismatch, out-of-range ids or cycles.
  ForestStructure(Structure base, std::vector<Element> parent);

  const Structure& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Element parent(Element x) const { return parent_[x]; }
  const std::vector<Element>& parents() const { return parent_; }
  bool is_root(Element x) const { return parent_[x] == kNoParent; }
  const std::vector<Element>& children(Element x) const { return children_[x]; }
  const std::vector<Element>& roots() const { return roots_; }
  /// Number of elements in the down-set of x (roots have depth 1).
  std::size_t depth(Element x) const { return depth_[x]; }
  /// Maximum chain cardinality.
  std::size_t height() const;
  bool leq(Element x, Element y) const;
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  /// Down-set of x listed from the root up to x.
  std::vector<Element> down_set(Element x) const;

 private:
  Structure base_;
  std::vector<Element> parent_;
  std::vector<std::vector<Element>> children_;
  std::vector<Element> roots_;
  std::vector<std::size_t> depth_;
};

/// Down-set chain of a host element, listed root first; empty for the
/// initial path.
struct PathEmbedding {
  std::vector<Element> chain;

  bool empty() const { return chain.empty(); }
  std::size_t length() const { return chain.size(); }
  Element last() const { return chain.back(); }
  bool operator==(const PathEmbedding&) const = default;
  auto operator<=>(const PathEmbedding&) const = default;
};

PathEmbedding path_to(const ForestStructure& x, Element top);

/// Path(X): node 0 is the empty chain; node e + 1 is the chain of element e.
struct PathTree {
  std::vector<PathEmbedding> nodes;
  std::vector<std::size_t> parent;  // parent[0] is unused
  std::vector<std::vector<std::size_t>> children;

  std::size_t size() const { return nodes.size(); }
};

PathTree paths_of(const ForestStructure& x);

/// Distinct elements of a common tuple are comparable.
bool check_condition_E(const ForestStructure& x);

/// Tree order with covers exactly the pairs lying in a unique binary
/// relation. Throws UnsupportedInput for non-modal vocabularies.
bool check_condition_M(const ForestStructure& x);

/// Base homomorphism mapping roots to roots and covers to covers.
bool is_forest_morphism(const ElementMap& f, const ForestStructure& x, const ForestStructure& y);

/// Forest morphism search, optionally with fixed values.
std::optional<ElementMap> find_forest_morphism(const ForestStructure& x, const ForestStructure& y,
                                               const std::vector<std::optional<Element>>& fixed = {});

struct Corestriction {
  ForestStructure structure;
  ElementMap inclusion;  // structure -> host
  PathEmbedding co;      // m inside the corestriction
};

/// Induced forest on the chain of m and every element above its top.
Corestriction corestriction(const ForestStructure& host, const PathEmbedding& m);

/// Chain of images of m under a forest morphism.
PathEmbedding push_path(const ElementMap& f, const ForestStructure& x, const ForestStructure& y,
                        const PathEmbedding& m);

/// Induced forest substructure on a down-closed or arbitrary subset; the
/// parent of a kept element is its nearest kept ancestor.
std::pair<ForestStructure, ElementMap> induced_forest(const ForestStructure& x,
                                                      std::vector<Element> keep);

}  // namespace arbor
