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

/// One codomain e together with the tree it was collapsed from.
struct EnvironmentMember {
  Structure structure;
  ForestStructure origin;  // tree over the vocabulary with I
};

/// Bounded stand-in for the codomains ranged over by extendability checks.
struct EnvironmentFamily {
  int k = 0;
  std::size_t max_nodes = 0;
  std::vector<EnvironmentMember> members;

  std::size_t size() const { return members.size(); }
};

/// Every tree over vocab + I with 1..max_nodes nodes and height at most k
/// whose tuples only relate comparable nodes, collapsed along I and kept
/// once per isomorphism class of the collapse. Throws MalformedInput if
/// the vocabulary already uses I or k < 1, SizeCapExceeded when the number
/// of candidates exceeds the enumeration cap.
EnvironmentFamily default_environment(const Vocabulary& vocab, int k, std::size_t max_nodes,
                                      const Limits& limits = {});

/// Family built from explicit structures (no origin tree is recorded).
EnvironmentFamily explicit_environment(std::vector<Structure> members, int k);

}  // namespace arbor
