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

#include <vector>

#include "arbor/structure.hpp"

namespace arbor {

struct Product {
  Structure structure;  // elements named "(x,y)"
  ElementMap first;
  ElementMap second;
};

/// Cartesian product with componentwise relations.
Product product(const Structure& a, const Structure& b);

struct Coproduct {
  Structure structure;  // elements of summand i named "<i>:<name>"
  std::vector<ElementMap> injections;
};

Coproduct coproduct(const std::vector<const Structure*>& summands);
Coproduct coproduct(const Structure& a, const Structure& b);

struct Quotient {
  Structure structure;
  ElementMap map;  // element -> class
};

/// Quotient by the equivalence generated by `pairs`. Each class is named by
/// its least member; relations are the images of the original tuples.
Quotient quotient(const Structure& s, const std::vector<std::pair<Element, Element>>& pairs);

/// One leg of a star diagram: an embedding from the common source.
struct Leg {
  const Structure* target;
  ElementMap map;
};

struct WidePushout {
  Structure colimit;
  ElementMap from_source;
  std::vector<ElementMap> from_legs;
};

/// Colimit of a star of embeddings out of `source`, as the quotient of the
/// coproduct of the leg targets. With no legs the colimit is `source`.
/// Throws UnsupportedInput if a leg is not an embedding.
WidePushout wide_pushout(const Structure& source, const std::vector<Leg>& legs);

struct Pushout {
  Structure structure;
  ElementMap from_a;
  ElementMap from_b;
};

/// Amalgam of `a` and `b` along embeddings f: c -> a and g: c -> b.
Pushout pushout(const Structure& c, const Structure& a, const ElementMap& f, const Structure& b,
                const ElementMap& g);

}  // namespace arbor
