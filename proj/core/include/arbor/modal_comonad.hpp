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

#include "arbor/forest.hpp"
#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// A path a_0 R_1 a_1 ... R_n a_n from the distinguished point.
struct ModalPath {
  std::vector<Element> nodes;
  std::vector<std::size_t> steps;  // relation index of each step

  std::size_t length() const { return steps.size(); }
};

/// M_k(A, a): paths of at most k steps from a, ordered by extension.
struct ModalCoalgebra {
  PointedStructure base;
  int k = 0;
  ForestStructure carrier;
  std::vector<ModalPath> paths;  // by carrier element
  Element point = 0;             // the trivial path

  std::size_t size() const { return carrier.size(); }
  PointedStructure pointed() const { return PointedStructure(carrier.base(), point); }
};

/// Throws UnsupportedInput for non-modal vocabularies, MalformedInput for
/// k < 1 and SizeCapExceeded beyond the carrier cap.
ModalCoalgebra modal_build(const PointedStructure& p, int k, const Limits& limits = {});

ElementMap modal_counit(const ModalCoalgebra& c);

struct ModalComultiplication {
  ModalCoalgebra doubled;  // M_k applied to the pointed carrier
  ElementMap map;
};

ModalComultiplication modal_comult(const ModalCoalgebra& c, const Limits& limits = {});

/// M_k(f) for a point-preserving homomorphism f.
ElementMap modal_map(const ElementMap& f, const ModalCoalgebra& from, const ModalCoalgebra& to);

/// Carrier element of a path, or throws MalformedInput if absent.
Element modal_element_of(const ModalCoalgebra& c, const ModalPath& path);

}  // namespace arbor
