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

#include "arbor/modal_comonad.hpp"

#include <map>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

std::string path_name(const Structure& s, const ModalPath& p) {
  std::string name = "<" + s.name(p.nodes[0]);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    name += "," + s.vocabulary().name(p.steps[i]) + "," + s.name(p.nodes[i + 1]);
  }
  return name + ">";
}

std::vector<std::size_t> binary_symbols(const Vocabulary& v) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v.arity(r) == 2) out.push_back(r);
  }
  return out;
}

}  // namespace

ModalCoalgebra modal_build(const PointedStructure& p, int k, const Limits& limits) {
  const Structure& a = p.base;
  if (!a.vocabulary().is_modal()) {
    throw UnsupportedInput("the modal comonad needs a vocabulary of arity at most 2");
  }
  if (k < 1) throw MalformedInput("resource parameter k must be at least 1");
  const std::vector<std::size_t> binary = binary_symbols(a.vocabulary());
  // Successor lists per binary relation; tuples are sorted by source.
  std::vector<std::vector<std::vector<Element>>> succ(a.vocabulary().size(),
                                                      std::vector<std::vector<Element>>(a.size()));
  for (std::size_t r : binary) {
    const Relation& rel = a.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) succ[r][rel.tuple(i)[0]].push_back(rel.tuple(i)[1]);
  }
  std::vector<ModalPath> paths{ModalPath{{p.point}, {}}};
  std::vector<Element> parent{kNoParent};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].length() == static_cast<std::size_t>(k)) continue;
    for (std::size_t r : binary) {
      for (Element next : succ[r][paths[i].nodes.back()]) {
        if (paths.size() >= limits.carrier_cap) {
          throw SizeCapExceeded("M_k carrier exceeds the cap of " + std::to_string(limits.carrier_cap));
        }
        ModalPath extended = paths[i];
        extended.nodes.push_back(next);
        extended.steps.push_back(r);
        paths.push_back(std::move(extended));
        parent.push_back(static_cast<Element>(i));
      }
    }
  }
  StructureBuilder builder(a.vocabulary());
  for (const ModalPath& path : paths) builder.add(path_name(a, path));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Element last = paths[i].nodes.back();
    for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
      if (a.vocabulary().arity(r) == 1 && a.holds(r, {last})) builder.relate(r, {static_cast<Element>(i)});
    }
    if (parent[i] != kNoParent) builder.relate(paths[i].steps.back(), {parent[i], static_cast<Element>(i)});
  }
  auto [structure, ids] = std::move(builder).build_with_ids();
  ModalCoalgebra c;
  c.base = p;
  c.k = k;
  c.paths.resize(paths.size());
  std::vector<Element> final_parent(paths.size(), kNoParent);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (parent[i] != kNoParent) final_parent[ids[i]] = ids[parent[i]];
    c.paths[ids[i]] = std::move(paths[i]);
  }
  c.point = ids[0];
  c.carrier = ForestStructure(std::move(structure), std::move(final_parent));
  return c;
}

ElementMap modal_counit(const ModalCoalgebra& c) {
  ElementMap out(c.size());
  for (Element e = 0; e < c.size(); ++e) out[e] = c.paths[e].nodes.back();
  return out;
}

Element modal_element_of(const ModalCoalgebra& c, const ModalPath& path) {
  if (path.nodes.empty() || path.nodes[0] != c.base.point) {
    throw MalformedInput("path does not start at the distinguished point");
  }
  Element e = c.point;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    bool found = false;
    for (Element child : c.carrier.children(e)) {
      const ModalPath& q = c.paths[child];
      if (q.steps.back() == path.steps[i] && q.nodes.back() == path.nodes[i + 1]) {
        e = child;
        found = true;
        break;
      }
    }
    if (!found) throw MalformedInput("path is not in the carrier");
  }
  return e;
}

ModalComultiplication modal_comult(const ModalCoalgebra& c, const Limits& limits) {
  ModalComultiplication out{modal_build(c.pointed(), c.k, limits), ElementMap(c.size())};
  for (Element e = 0; e < c.size(); ++e) {
    const std::vector<Element> chain = c.carrier.down_set(e);
    ModalPath lifted{chain, c.paths[e].steps};
    out.map[e] = modal_element_of(out.doubled, lifted);
  }
  return out;
}

ElementMap modal_map(const ElementMap& f, const ModalCoalgebra& from, const ModalCoalgebra& to) {
  if (f.size() != from.base.base.size()) throw MalformedInput("map does not match the source base");
  if (f[from.base.point] != to.base.point) throw MalformedInput("map does not preserve the point");
  ElementMap out(from.size());
  for (Element e = 0; e < from.size(); ++e) {
    ModalPath image = from.paths[e];
    for (Element& x : image.nodes) x = f[x];
    out[e] = modal_element_of(to, image);
  }
  return out;
}

}  // namespace arbor
