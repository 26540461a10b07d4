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

#include "arbor/formula.hpp"
#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// Existential positive sentence of quantifier rank at most k that holds
/// in B exactly when Duplicator wins the k-round positive game from A to B.
/// Throws SizeCapExceeded when the expanded sentence exceeds the formula cap.
FOPtr ep_characteristic_fo(const Structure& a, int k, const Limits& limits = {});

/// Existential positive modal formula of depth at most k that holds at a
/// point q exactly when the depth-k unravelling of P maps to (Q, q).
ModalPtr ep_characteristic_modal(const PointedStructure& p, int k, const Limits& limits = {});

}  // namespace arbor
