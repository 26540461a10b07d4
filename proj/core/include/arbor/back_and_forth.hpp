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

#include <optional>
#include <vector>

#include "arbor/forest.hpp"

namespace arbor {

/// Matched path embeddings; the witness partial isomorphism sends the i-th
/// element of one chain to the i-th element of the other.
struct BackAndForthPair {
  PathEmbedding x;
  PathEmbedding y;
};

struct BackAndForthSystem {
  std::vector<BackAndForthPair> pairs;
};

/// Greatest back-and-forth system between two forests whose relations only
/// relate comparable elements, or nullopt when it misses the root pair.
std::optional<BackAndForthSystem> back_and_forth(const ForestStructure& x, const ForestStructure& y);

/// Root pair survives; cheaper than materialising the system.
bool bisimilar(const ForestStructure& x, const ForestStructure& y);

/// Positional map between two chains is an order-preserving bijection that
/// preserves and reflects every relation.
bool is_chain_isomorphism(const ForestStructure& x, const PathEmbedding& m, const ForestStructure& y,
                          const PathEmbedding& n);

/// Independent check of the defining conditions: root pair present, every
/// witness a chain isomorphism, and forth/back over covers.
bool is_back_and_forth_system(const BackAndForthSystem& system, const ForestStructure& x,
                              const ForestStructure& y);

}  // namespace arbor
