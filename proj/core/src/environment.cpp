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

#include "arbor/environment.hpp"

#include <map>

#include "arbor/canonical.hpp"
#include "arbor/equality.hpp"
#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

namespace {

// Parent arrays with parent[i] < i; node 0 is the root.
void tree_shapes(std::size_t n, int k, std::vector<Element>& parent, std::vector<int>& depth,
                 std::vector<std::vector<Element>>& out) {
  if (parent.size() == n) {
    out.push_back(parent);
    return;
  }
  const Element next = static_cast<Element>(parent.size());
  for (Element p = 0; p < next; ++p) {
    if (depth[p] + 1 > k) continue;
    parent.push_back(p);
    depth.push_back(depth[p] + 1);
    tree_shapes(n, k, parent, depth, out);
    parent.pop_back();
    depth.pop_back();
  }
}

std::string node_name(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  return "t" + std::string(width - digits.size(), '0') + digits;
}

// Tuples of pairwise comparable nodes, per relation symbol.
std::vector<std::pair<std::size_t, Tuple>> comparable_tuples(const Vocabulary& v,
                                                             const ForestStructure& shape) {
  std::vector<std::pair<std::size_t, Tuple>> out;
  const std::size_t n = shape.size();
  for (std::size_t r = 0; r < v.size(); ++r) {
    const int arity = v.arity(r);
    Tuple t(arity, 0);
    while (true) {
      bool ok = true;
      for (int p = 0; p < arity && ok; ++p) {
        for (int q = p + 1; q < arity && ok; ++q) ok = shape.comparable(t[p], t[q]);
      }
      if (ok) out.emplace_back(r, t);
      int p = arity - 1;
      while (p >= 0 && t[p] + 1 == n) t[p--] = 0;
      if (p < 0) break;
      ++t[p];
    }
  }
  return out;
}

std::vector<std::size_t> invariant(const Structure& s) {
  std::vector<std::size_t> key{s.size()};
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) key.push_back(s.relation(r).size());
  return key;
}

}  // namespace

EnvironmentFamily default_environment(const Vocabulary& vocab, int k, std::size_t max_nodes,
                                      const Limits& limits) {
  if (vocab.contains(kEqualitySymbol)) {
    throw MalformedInput("environment vocabulary must not contain the symbol I");
  }
  if (k < 1) throw MalformedInput("resource parameter k must be at least 1");
  EnvironmentFamily family;
  family.k = k;
  family.max_nodes = max_nodes;
  const Vocabulary jv = vocab.with(std::string(kEqualitySymbol), 2);

  std::size_t visited = 0;
  CodeTable table;
  std::map<int, bool> seen_trees;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;

  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::vector<Element>> shapes;
    std::vector<Element> parent{kNoParent};
    std::vector<int> depth{1};
    tree_shapes(n, k, parent, depth, shapes);
    for (const auto& shape_parent : shapes) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i, max_nodes));
      const ForestStructure shape(make_structure(Vocabulary{}, names, {}), shape_parent);
      const auto tuples = comparable_tuples(jv, shape);
      if (tuples.size() >= 63 || (std::size_t{1} << tuples.size()) > limits.enumeration_cap - visited) {
        throw SizeCapExceeded("environment enumeration exceeds the cap of " +
                              std::to_string(limits.enumeration_cap) + " candidates");
      }
      const std::uint64_t subsets = std::uint64_t{1} << tuples.size();
      visited += subsets;
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        StructureBuilder b(jv);
        for (const auto& name : names) b.add(name);
        for (std::size_t i = 0; i < tuples.size(); ++i) {
          if (mask >> i & 1) b.relate(tuples[i].first, tuples[i].second);
        }
        ForestStructure tree(std::move(b).build(), shape_parent);
        if (!seen_trees.emplace(forest_code(tree, table), true).second) continue;
        Structure collapsed = collapse_I(tree.base()).structure;
        auto& bucket = buckets[invariant(collapsed)];
        bool duplicate = false;
        for (std::size_t idx : bucket) {
          if (find_isomorphism(family.members[idx].structure, collapsed)) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        bucket.push_back(family.members.size());
        family.members.push_back({std::move(collapsed), std::move(tree)});
      }
    }
  }
  return family;
}

EnvironmentFamily explicit_environment(std::vector<Structure> members, int k) {
  EnvironmentFamily family;
  family.k = k;
  for (auto& s : members) {
    family.max_nodes = std::max(family.max_nodes, s.size());
    family.members.push_back({std::move(s), ForestStructure()});
  }
  return family;
}

}  // namespace arbor
