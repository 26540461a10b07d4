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

#include "arbor/path_restriction.hpp"

#include "arbor/equality.hpp"
#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

bool is_chain(const ForestStructure& q) {
  if (q.size() == 0) return true;
  if (q.roots().size() != 1) return false;
  for (Element x = 0; x < q.size(); ++x) {
    if (q.children(x).size() > 1) return false;
  }
  return true;
}

bool is_smooth(const ForestStructure& q) {
  const Structure& s = q.base();
  const auto eq = s.vocabulary().find(kEqualitySymbol);
  if (!eq || s.vocabulary().arity(*eq) != 2) return false;
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n, false));
  const Relation& rel = s.relation(*eq);
  for (std::size_t i = 0; i < rel.size(); ++i) same[rel.tuple(i)[0]][rel.tuple(i)[1]] = true;
  for (Element x = 0; x < n; ++x) {
    if (!same[x][x]) return false;
    for (Element y = 0; y < n; ++y) {
      if (same[x][y] != same[y][x]) return false;
      for (Element z = 0; z < n; ++z) {
        if (same[x][y] && same[y][z] && !same[x][z]) return false;
      }
    }
  }
  // Transport: changing one entry within its class keeps the tuple.
  Tuple moved;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& other = s.relation(r);
    for (std::size_t i = 0; i < other.size(); ++i) {
      auto t = other.tuple(i);
      for (std::size_t p = 0; p < t.size(); ++p) {
        for (Element y = 0; y < n; ++y) {
          if (!same[t[p]][y]) continue;
          moved.assign(t.begin(), t.end());
          moved[p] = y;
          if (!s.holds(r, moved)) return false;
        }
      }
    }
  }
  return true;
}

PathRestriction path_restrict(const ForestStructure& q, const Structure& a, const ElementMap& j) {
  if (!is_chain(q)) throw MalformedInput("path restriction needs a chain");
  if (!is_smooth(q)) {
    throw UnsupportedInput("chain is not smooth: I must be an equivalence respected by every relation");
  }
  const Quotient lq = collapse_I(q.base());
  if (!is_embedding(j, a, lq.structure)) throw MalformedInput("j is not an embedding into L(Q)");
  constexpr Element kAbsent = ~Element{0};
  ElementMap preimage(lq.structure.size(), kAbsent);
  for (Element x = 0; x < a.size(); ++x) preimage[j[x]] = x;
  std::vector<Element> keep;
  for (Element x = 0; x < q.size(); ++x) {
    if (preimage[lq.map[x]] != kAbsent) keep.push_back(x);
  }
  auto [path, inclusion] = induced_forest(q, keep);
  const Quotient lp = collapse_I(path.base());
  ElementMap iso(lp.structure.size(), kAbsent);
  for (Element x = 0; x < path.size(); ++x) iso[lp.map[x]] = preimage[lq.map[inclusion[x]]];
  if (iso.size() != a.size() || !is_embedding(iso, lp.structure, a)) {
    throw Error("restricted chain does not collapse onto the given structure");
  }
  return {std::move(path), std::move(inclusion), std::move(iso)};
}

}  // namespace arbor
