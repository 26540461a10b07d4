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
#include <string_view>

#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

enum class Logic { EF, Modal };

/// "ef" or "modal"; throws MalformedInput otherwise.
Logic parse_logic(std::string_view text);
std::string_view logic_name(Logic logic);

/// A homomorphism out of G_k(a) (EF) or out of the pointed carrier of
/// M_k(a) (modal, point to point).
struct ArrowWitness {
  Structure source;
  ElementMap map;
};

std::optional<ArrowWitness> arrow_witness(const Structure& a, const Structure& b, int k,
                                          const Limits& limits = {});
std::optional<ArrowWitness> arrow_witness(const PointedStructure& a, const PointedStructure& b,
                                          int k, const Limits& limits = {});

/// a ->_k b.
bool decide_arrow(const Structure& a, const Structure& b, int k, const Limits& limits = {});
bool decide_arrow(const PointedStructure& a, const PointedStructure& b, int k,
                  const Limits& limits = {});

/// R_k a and R_k b are bisimilar.
bool decide_equiv(const Structure& a, const Structure& b, int k, const Limits& limits = {});
bool decide_equiv(const PointedStructure& a, const PointedStructure& b, int k,
                  const Limits& limits = {});

/// R_k a and R_k b are isomorphic.
bool decide_iso(const Structure& a, const Structure& b, int k, const Limits& limits = {});
bool decide_iso(const PointedStructure& a, const PointedStructure& b, int k,
                const Limits& limits = {});

/// Throws MalformedInput unless both sides share a vocabulary.
void require_same_vocabulary(const Structure& a, const Structure& b);

}  // namespace arbor
