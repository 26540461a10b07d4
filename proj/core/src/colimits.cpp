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

#include "arbor/colimits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

namespace {

void require_vocabulary(const Structure& a, const Structure& b) {
  if (!(a.vocabulary() == b.vocabulary())) throw MalformedInput("vocabularies differ");
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Product product(const Structure& a, const Structure& b) {
  require_vocabulary(a, b);
  StructureBuilder builder(a.vocabulary());
  const std::size_t nb = b.size();
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < nb; ++y) builder.add("(" + a.name(x) + "," + b.name(y) + ")");
  }
  Tuple t;
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    const Relation& ra = a.relation(r);
    const Relation& rb = b.relation(r);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      for (std::size_t j = 0; j < rb.size(); ++j) {
        auto ta = ra.tuple(i);
        auto tb = rb.tuple(j);
        t.clear();
        for (std::size_t p = 0; p < ta.size(); ++p) {
          t.push_back(static_cast<Element>(ta[p] * nb + tb[p]));
        }
        builder.relate(r, t);
      }
    }
  }
  auto [s, ids] = std::move(builder).build_with_ids();
  Product out{std::move(s), ElementMap(ids.size()), ElementMap(ids.size())};
  for (std::size_t provisional = 0; provisional < ids.size(); ++provisional) {
    out.first[ids[provisional]] = static_cast<Element>(provisional / nb);
    out.second[ids[provisional]] = static_cast<Element>(provisional % nb);
  }
  return out;
}

Coproduct coproduct(const std::vector<const Structure*>& summands) {
  if (summands.empty()) return {};
  for (const Structure* s : summands) require_vocabulary(*summands.front(), *s);
  StructureBuilder builder(summands.front()->vocabulary());
  std::vector<Element> offset;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    offset.push_back(static_cast<Element>(builder.size()));
    for (const auto& name : summands[i]->names()) builder.add(std::to_string(i) + ":" + name);
  }
  Tuple t;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const Structure& s = *summands[i];
    for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
      const Relation& rel = s.relation(r);
      for (std::size_t j = 0; j < rel.size(); ++j) {
        t.clear();
        for (Element x : rel.tuple(j)) t.push_back(offset[i] + x);
        builder.relate(r, t);
      }
    }
  }
  auto [s, ids] = std::move(builder).build_with_ids();
  Coproduct out{std::move(s), {}};
  for (std::size_t i = 0; i < summands.size(); ++i) {
    ElementMap inj(summands[i]->size());
    for (Element x = 0; x < inj.size(); ++x) inj[x] = ids[offset[i] + x];
    out.injections.push_back(std::move(inj));
  }
  return out;
}

Coproduct coproduct(const Structure& a, const Structure& b) { return coproduct({&a, &b}); }

Quotient quotient(const Structure& s, const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(s.size());
  for (auto [x, y] : pairs) {
    if (x >= s.size() || y >= s.size()) throw MalformedInput("quotient pair outside universe");
    uf.unite(x, y);
  }
  // Element ids follow name order, so the root (least id) is the least name.
  StructureBuilder builder(s.vocabulary());
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> provisional(s.size(), kAbsent);
  for (Element x = 0; x < s.size(); ++x) {
    if (uf.find(x) == x) provisional[x] = builder.add(s.name(x));
  }
  ElementMap to_provisional(s.size());
  for (Element x = 0; x < s.size(); ++x) to_provisional[x] = provisional[uf.find(x)];
  Tuple t;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      t.clear();
      for (Element x : rel.tuple(i)) t.push_back(to_provisional[x]);
      builder.relate(r, t);
    }
  }
  auto [q, ids] = std::move(builder).build_with_ids();
  ElementMap map(s.size());
  for (Element x = 0; x < s.size(); ++x) map[x] = ids[to_provisional[x]];
  return {std::move(q), std::move(map)};
}

WidePushout wide_pushout(const Structure& source, const std::vector<Leg>& legs) {
  if (legs.empty()) return {source, identity_map(source.size()), {}};
  std::vector<const Structure*> targets;
  for (const Leg& leg : legs) {
    require_vocabulary(source, *leg.target);
    if (!is_embedding(leg.map, source, *leg.target)) {
      throw UnsupportedInput("wide pushout legs must be embeddings");
    }
    targets.push_back(leg.target);
  }
  Coproduct sum = coproduct(targets);
  std::vector<std::pair<Element, Element>> glue;
  for (std::size_t i = 1; i < legs.size(); ++i) {
    for (Element x = 0; x < source.size(); ++x) {
      glue.emplace_back(sum.injections[0][legs[0].map[x]], sum.injections[i][legs[i].map[x]]);
    }
  }
  Quotient q = quotient(sum.structure, glue);
  WidePushout out;
  out.colimit = std::move(q.structure);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    out.from_legs.push_back(compose(sum.injections[i], q.map));
  }
  out.from_source = compose(legs[0].map, out.from_legs[0]);
  return out;
}

Pushout pushout(const Structure& c, const Structure& a, const ElementMap& f, const Structure& b,
                const ElementMap& g) {
  WidePushout w = wide_pushout(c, {Leg{&a, f}, Leg{&b, g}});
  return {std::move(w.colimit), std::move(w.from_legs[0]), std::move(w.from_legs[1])};
}

}  // namespace arbor
