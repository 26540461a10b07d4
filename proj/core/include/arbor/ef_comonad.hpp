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

#include <span>
#include <vector>

#include "arbor/forest.hpp"
#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// E_k(A): non-empty sequences over A of length at most k, prefix-ordered.
struct EFCoalgebra {
  Structure base;
  int k = 0;
  ForestStructure carrier;
  /// The sequence of each carrier element, as base elements.
  std::vector<Tuple> sequences;
  /// Carrier element of each canonical index (by length, then lexicographic).
  std::vector<Element> by_index;

  std::size_t canonical_index(std::span<const Element> seq) const;
  Element element_of(std::span<const Element> seq) const;
  std::size_t size() const { return carrier.size(); }
};

/// Sum of n^i for i = 1..k, saturating at SIZE_MAX.
std::size_t ef_carrier_size(std::size_t n, int k);

/// Throws MalformedInput for k < 1 and SizeCapExceeded beyond the cap.
EFCoalgebra ef_build(const Structure& a, int k, const Limits& limits = {});

/// Last element of each sequence.
ElementMap ef_counit(const EFCoalgebra& c);

/// For each carrier element, the carrier elements of its prefixes.
std::vector<Tuple> ef_prefix_sequences(const EFCoalgebra& c);

struct EFComultiplication {
  EFCoalgebra doubled;  // E_k applied to the carrier's base
  ElementMap map;       // carrier -> doubled carrier
};

EFComultiplication ef_comult(const EFCoalgebra& c, const Limits& limits = {});

/// E_k(f): pointwise image between two coalgebras with the same k.
ElementMap ef_map(const ElementMap& f, const EFCoalgebra& from, const EFCoalgebra& to);

}  // namespace arbor
