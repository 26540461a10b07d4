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

#include <map>
#include <string>
#include <vector>

#include "arbor/formula.hpp"
#include "arbor/structure.hpp"

namespace arbor {

using Assignment = std::map<std::string, Element, std::less<>>;

/// Tarskian truth. Throws MalformedInput for unassigned free variables,
/// unknown relation symbols or arity mismatches.
bool eval_fo(const FOPtr& f, const Structure& a, const Assignment& assignment = {});

/// Kripke truth at the point with graded counting. Throws MalformedInput
/// for unknown or wrongly typed symbols.
bool eval_modal(const ModalPtr& f, const PointedStructure& p);

/// Truth value at every element.
std::vector<bool> eval_modal_everywhere(const ModalPtr& f, const Structure& s);

}  // namespace arbor
