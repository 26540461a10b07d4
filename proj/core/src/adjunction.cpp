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

#include "arbor/adjunction.hpp"

#include "arbor/equality.hpp"
#include "arbor/errors.hpp"

namespace arbor {

EFCoalgebra ef_adjoint_R(const Structure& a, int k, const Limits& limits) {
  return ef_build(expand_I(a), k, limits);
}

EFAdjointG ef_adjoint_G(const Structure& a, int k, const Limits& limits) {
  EFAdjointG out;
  out.r = ef_adjoint_R(a, k, limits);
  Quotient q = collapse_I(out.r.carrier.base());
  out.g = std::move(q.structure);
  out.classes = std::move(q.map);
  return out;
}

PointedStructure modal_G(const PointedStructure& p, int k, const Limits& limits) {
  return modal_build(p, k, limits).pointed();
}

ElementMap transpose_flat(const ElementMap& f, const ForestStructure& path, const EFCoalgebra& r) {
  const Quotient l = collapse_I(path.base());
  if (f.size() != l.structure.size()) throw MalformedInput("map does not match L(P)");
  ElementMap out(path.size());
  Tuple seq;
  for (Element x = 0; x < path.size(); ++x) {
    seq.clear();
    for (Element y : path.down_set(x)) seq.push_back(f[l.map[y]]);
    out[x] = r.element_of(seq);
  }
  return out;
}

ElementMap transpose_sharp(const ElementMap& m, const ForestStructure& path, const EFCoalgebra& r) {
  const Quotient l = collapse_I(path.base());
  if (m.size() != path.size()) throw MalformedInput("map does not match the path");
  constexpr Element kUnset = ~Element{0};
  ElementMap out(l.structure.size(), kUnset);
  for (Element x = 0; x < path.size(); ++x) {
    const Element last = r.sequences.at(m[x]).back();
    Element& slot = out[l.map[x]];
    if (slot != kUnset && slot != last) {
      throw MalformedInput("members of one I-class have different images");
    }
    slot = last;
  }
  return out;
}

}  // namespace arbor
