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

#include "arbor/colimits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// J: adds the symbol I interpreted as the identity relation.
/// Throws MalformedInput if the vocabulary already has I.
Structure expand_I(const Structure& a);

/// H: quotient of the reduct without I by the equivalence generated by I.
/// Throws MalformedInput if I is missing or not binary.
Quotient collapse_I(const Structure& a);

}  // namespace arbor
