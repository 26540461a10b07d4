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

#include "arbor/forest.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

ForestStructure::ForestStructure(Structure base, std::vector<Element> parent)
    : base_(std::move(base)), parent_(std::move(parent)) {
  const std::size_t n = base_.size();
  if (parent_.size() != n) throw MalformedInput("parent map size differs from universe size");
  children_.resize(n);
  depth_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (parent_[x] == kNoParent) {
      roots_.push_back(x);
    } else {
      if (parent_[x] >= n) throw MalformedInput("parent outside the universe");
      children_[parent_[x]].push_back(x);
    }
  }
  // Depths by walking up; a walk longer than n means a cycle.
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> walk;
    Element y = x;
    while (y != kNoParent && depth_[y] == 0) {
      walk.push_back(y);
      if (walk.size() > n) throw MalformedInput("parent map is cyclic");
      y = parent_[y];
    }
    std::size_t d = (y == kNoParent) ? 0 : depth_[y];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) depth_[*it] = ++d;
  }
}

std::size_t ForestStructure::height() const {
  std::size_t h = 0;
  for (std::size_t d : depth_) h = std::max(h, d);
  return h;
}

bool ForestStructure::leq(Element x, Element y) const {
  if (depth_[x] > depth_[y]) return false;
  while (depth_[y] > depth_[x]) y = parent_[y];
  return x == y;
}

std::vector<Element> ForestStructure::down_set(Element x) const {
  std::vector<Element> chain(depth_[x]);
  for (std::size_t i = chain.size(); i-- > 0;) {
    chain[i] = x;
    x = parent_[x];
  }
  return chain;
}

PathEmbedding path_to(const ForestStructure& x, Element top) { return {x.down_set(top)}; }

PathTree paths_of(const ForestStructure& x) {
  PathTree tree;
  const std::size_t n = x.size();
  tree.nodes.resize(n + 1);
  tree.parent.assign(n + 1, 0);
  tree.children.resize(n + 1);
  for (Element e = 0; e < n; ++e) {
    tree.nodes[e + 1] = path_to(x, e);
    tree.parent[e + 1] = x.is_root(e) ? 0 : x.parent(e) + 1;
    tree.children[tree.parent[e + 1]].push_back(e + 1);
  }
  return tree;
}

bool check_condition_E(const ForestStructure& x) {
  const Structure& s = x.base();
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      auto t = rel.tuple(i);
      for (std::size_t p = 0; p < t.size(); ++p) {
        for (std::size_t q = p + 1; q < t.size(); ++q) {
          if (t[p] != t[q] && !x.comparable(t[p], t[q])) return false;
        }
      }
    }
  }
  return true;
}

bool check_condition_M(const ForestStructure& x) {
  const Structure& s = x.base();
  if (!s.vocabulary().is_modal()) {
    throw UnsupportedInput("condition (M) needs a vocabulary of arity at most 2");
  }
  if (s.size() > 0 && x.roots().size() != 1) return false;
  std::map<std::pair<Element, Element>, int> count;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    if (s.vocabulary().arity(r) != 2) continue;
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) ++count[{rel.tuple(i)[0], rel.tuple(i)[1]}];
  }
  for (const auto& [pair, c] : count) {
    if (c != 1 || x.parent(pair.second) != pair.first) return false;
  }
  for (Element y = 0; y < s.size(); ++y) {
    if (!x.is_root(y) && !count.contains({x.parent(y), y})) return false;
  }
  return true;
}

bool is_forest_morphism(const ElementMap& f, const ForestStructure& x, const ForestStructure& y) {
  if (!is_homomorphism(f, x.base(), y.base())) return false;
  for (Element e = 0; e < x.size(); ++e) {
    if (x.is_root(e)) {
      if (!y.is_root(f[e])) return false;
    } else if (y.parent(f[e]) != f[x.parent(e)]) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr const char* kRootSymbol = "#root";
constexpr const char* kCoverSymbol = "#cover";

// Adds the root predicate and cover relation so that plain homomorphisms
// of the result are exactly forest morphisms.
Structure with_order(const ForestStructure& x) {
  const Vocabulary& v = x.base().vocabulary();
  if (v.contains(kRootSymbol) || v.contains(kCoverSymbol)) {
    throw MalformedInput("vocabulary uses a symbol reserved for forest order");
  }
  const Vocabulary extended = v.with(kRootSymbol, 1).with(kCoverSymbol, 2);
  StructureBuilder b(extended);
  for (const auto& name : x.base().names()) b.add(name);
  for (std::size_t r = 0; r < v.size(); ++r) {
    const Relation& rel = x.base().relation(r);
    const std::size_t target = extended.index_of(v.name(r));
    for (std::size_t i = 0; i < rel.size(); ++i) b.relate(target, rel.tuple(i));
  }
  const std::size_t root = extended.index_of(kRootSymbol);
  const std::size_t cover = extended.index_of(kCoverSymbol);
  for (Element e = 0; e < x.size(); ++e) {
    if (x.is_root(e)) {
      b.relate(root, {e});
    } else {
      b.relate(cover, {x.parent(e), e});
    }
  }
  return std::move(b).build();
}

}  // namespace

std::optional<ElementMap> find_forest_morphism(const ForestStructure& x, const ForestStructure& y,
                                               const std::vector<std::optional<Element>>& fixed) {
  return find_homomorphism(with_order(x), with_order(y), fixed);
}

std::pair<ForestStructure, ElementMap> induced_forest(const ForestStructure& x,
                                                      std::vector<Element> keep) {
  auto [sub, to_host] = induced_substructure(x.base(), std::move(keep));
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> position(x.size(), kAbsent);
  for (Element i = 0; i < to_host.size(); ++i) position[to_host[i]] = i;
  std::vector<Element> parent(to_host.size(), kNoParent);
  for (Element i = 0; i < to_host.size(); ++i) {
    Element up = x.parent(to_host[i]);
    while (up != kNoParent && position[up] == kAbsent) up = x.parent(up);
    parent[i] = (up == kNoParent) ? kNoParent : position[up];
  }
  return {ForestStructure(std::move(sub), std::move(parent)), std::move(to_host)};
}

Corestriction corestriction(const ForestStructure& host, const PathEmbedding& m) {
  std::vector<Element> keep;
  if (m.empty()) {
    keep.resize(host.size());
    for (Element e = 0; e < host.size(); ++e) keep[e] = e;
  } else {
    keep = m.chain;
    const Element top = m.last();
    for (Element e = 0; e < host.size(); ++e) {
      if (e != top && host.leq(top, e)) keep.push_back(e);
    }
  }
  auto [forest, inclusion] = induced_forest(host, keep);
  PathEmbedding co;
  for (Element e : m.chain) {
    co.chain.push_back(static_cast<Element>(
        std::lower_bound(inclusion.begin(), inclusion.end(), e) - inclusion.begin()));
  }
  return {std::move(forest), std::move(inclusion), std::move(co)};
}

PathEmbedding push_path(const ElementMap& f, const ForestStructure& x, const ForestStructure& y,
                        const PathEmbedding& m) {
  if (f.size() != x.size()) throw MalformedInput("map does not match the source forest");
  PathEmbedding out;
  for (Element e : m.chain) {
    if (f[e] >= y.size()) throw MalformedInput("map image outside the target forest");
    out.chain.push_back(f[e]);
  }
  return out;
}

}  // namespace arbor
