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

#include "arbor/back_and_forth.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arbor/canonical.hpp"

namespace arbor {

namespace {

// Node keys of Path(X): (path code, bisimulation code). Two nodes are
// matched in the greatest system exactly when their keys agree.
std::vector<std::pair<int, int>> node_keys(const ForestStructure& x, CodeTable& table) {
  const std::vector<int> paths = path_codes(x, table);
  const std::vector<int> reduced = reduced_codes(x, table);
  std::vector<std::pair<int, int>> keys(x.size() + 1);
  keys[0] = {CodeTable::kEmptyPath, reduced[0]};
  for (Element e = 0; e < x.size(); ++e) keys[e + 1] = {paths[e], reduced[e + 1]};
  return keys;
}

}  // namespace

std::optional<BackAndForthSystem> back_and_forth(const ForestStructure& x, const ForestStructure& y) {
  if (!(x.base().vocabulary() == y.base().vocabulary())) return std::nullopt;
  CodeTable table;
  const auto kx = node_keys(x, table);
  const auto ky = node_keys(y, table);
  if (kx[0] != ky[0]) return std::nullopt;
  const PathTree tx = paths_of(x);
  const PathTree ty = paths_of(y);
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_key;
  for (std::size_t v = 0; v < ky.size(); ++v) by_key[ky[v]].push_back(v);
  BackAndForthSystem system;
  for (std::size_t u = 0; u < kx.size(); ++u) {
    auto it = by_key.find(kx[u]);
    if (it == by_key.end()) continue;
    for (std::size_t v : it->second) system.pairs.push_back({tx.nodes[u], ty.nodes[v]});
  }
  return system;
}

bool bisimilar(const ForestStructure& x, const ForestStructure& y) {
  if (!(x.base().vocabulary() == y.base().vocabulary())) return false;
  CodeTable table;
  return reduced_codes(x, table)[0] == reduced_codes(y, table)[0];
}

bool is_chain_isomorphism(const ForestStructure& x, const PathEmbedding& m, const ForestStructure& y,
                          const PathEmbedding& n) {
  if (m.length() != n.length()) return false;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (x.depth(m.chain[i]) != i + 1 || y.depth(n.chain[i]) != i + 1) return false;
    if (i > 0 && (x.parent(m.chain[i]) != m.chain[i - 1] || y.parent(n.chain[i]) != n.chain[i - 1])) {
      return false;
    }
  }
  const Structure& a = x.base();
  const Structure& b = y.base();
  auto position = [](const PathEmbedding& p, Element e) -> std::ptrdiff_t {
    auto it = std::find(p.chain.begin(), p.chain.end(), e);
    return it == p.chain.end() ? -1 : it - p.chain.begin();
  };
  // Compare the sets of position tuples inside each chain.
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    std::set<std::vector<std::ptrdiff_t>> in_x;
    std::set<std::vector<std::ptrdiff_t>> in_y;
    auto collect = [&](const Structure& s, const PathEmbedding& p, auto& out) {
      const Relation& rel = s.relation(r);
      for (std::size_t i = 0; i < rel.size(); ++i) {
        std::vector<std::ptrdiff_t> row;
        for (Element e : rel.tuple(i)) {
          const std::ptrdiff_t pos = position(p, e);
          if (pos < 0) break;
          row.push_back(pos);
        }
        if (row.size() == static_cast<std::size_t>(rel.arity())) out.insert(row);
      }
    };
    collect(a, m, in_x);
    collect(b, n, in_y);
    if (in_x != in_y) return false;
  }
  return true;
}

bool is_back_and_forth_system(const BackAndForthSystem& system, const ForestStructure& x,
                              const ForestStructure& y) {
  std::set<std::pair<std::vector<Element>, std::vector<Element>>> present;
  for (const auto& p : system.pairs) present.insert({p.x.chain, p.y.chain});
  if (!present.contains({{}, {}})) return false;
  auto above = [](const ForestStructure& f, const PathEmbedding& m) {
    std::vector<PathEmbedding> out;
    const std::vector<Element>& next = m.empty() ? f.roots() : f.children(m.last());
    for (Element c : next) {
      PathEmbedding ext = m;
      ext.chain.push_back(c);
      out.push_back(std::move(ext));
    }
    return out;
  };
  for (const auto& p : system.pairs) {
    if (!is_chain_isomorphism(x, p.x, y, p.y)) return false;
    const auto ux = above(x, p.x);
    const auto uy = above(y, p.y);
    for (const auto& mx : ux) {
      bool found = false;
      for (const auto& my : uy) found = found || present.contains({mx.chain, my.chain});
      if (!found) return false;
    }
    for (const auto& my : uy) {
      bool found = false;
      for (const auto& mx : ux) found = found || present.contains({mx.chain, my.chain});
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace arbor
