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

#include "arbor/structure.hpp"

namespace arbor {

/// Duplicator wins the k-round Ehrenfeucht-Fraisse game on (A, B).
bool oracle_ef_game(const Structure& a, const Structure& b, int k);

/// Duplicator wins the k-round game where Spoiler only plays in A and the
/// position must preserve relations and equality from A to B.
bool oracle_ep_game(const Structure& a, const Structure& b, int k);

/// Duplicator wins the k-round bisimulation game. Throws UnsupportedInput
/// for non-modal vocabularies.
bool oracle_bisim_game(const PointedStructure& p, const PointedStructure& q, int k);

/// Points agree on depth-k graded types, computed by counting successor
/// classes level by level over the disjoint union.
bool oracle_graded_bisim(const PointedStructure& p, const PointedStructure& q, int k);

}  // namespace arbor
