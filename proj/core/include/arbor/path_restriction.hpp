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

#include "arbor/forest.hpp"

namespace arbor {

/// A forest that is a single chain.
bool is_chain(const ForestStructure& q);

/// The vocabulary has a binary I interpreted as an equivalence relation and
/// every relation is closed under replacing entries by I-equivalent ones.
bool is_smooth(const ForestStructure& q);

struct PathRestriction {
  ForestStructure path;  // Q_a
  ElementMap inclusion;  // Q_a -> Q
  ElementMap iso;        // L(Q_a) -> a
};

/// Restriction of a chain Q to the elements whose I-class lies in the image
/// of the embedding j: a -> L(Q). Throws MalformedInput if Q is not a chain
/// or j is not an embedding, UnsupportedInput if Q is not smooth.
PathRestriction path_restrict(const ForestStructure& q, const Structure& a, const ElementMap& j);

}  // namespace arbor
