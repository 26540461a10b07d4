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

#include "arbor/decide.hpp"

#include <string>

#include "arbor/adjunction.hpp"
#include "arbor/back_and_forth.hpp"
#include "arbor/canonical.hpp"
#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

Logic parse_logic(std::string_view text) {
  if (text == "ef") return Logic::EF;
  if (text == "modal") return Logic::Modal;
  throw MalformedInput("unknown logic \"" + std::string(text) + "\" (expected ef or modal)");
}

std::string_view logic_name(Logic logic) { return logic == Logic::EF ? "ef" : "modal"; }

void require_same_vocabulary(const Structure& a, const Structure& b) {
  if (!(a.vocabulary() == b.vocabulary())) throw MalformedInput("structures have different vocabularies");
}

std::optional<ArrowWitness> arrow_witness(const Structure& a, const Structure& b, int k,
                                          const Limits& limits) {
  require_same_vocabulary(a, b);
  EFAdjointG g = ef_adjoint_G(a, k, limits);
  auto map = find_homomorphism(g.g, b);
  if (!map) return std::nullopt;
  return ArrowWitness{std::move(g.g), std::move(*map)};
}

std::optional<ArrowWitness> arrow_witness(const PointedStructure& a, const PointedStructure& b,
                                          int k, const Limits& limits) {
  require_same_vocabulary(a.base, b.base);
  const ModalCoalgebra m = modal_build(a, k, limits);
  PartialMap fixed(m.size());
  fixed[m.point] = b.point;
  auto map = find_homomorphism(m.carrier.base(), b.base, fixed);
  if (!map) return std::nullopt;
  return ArrowWitness{m.carrier.base(), std::move(*map)};
}

bool decide_arrow(const Structure& a, const Structure& b, int k, const Limits& limits) {
  return arrow_witness(a, b, k, limits).has_value();
}

bool decide_arrow(const PointedStructure& a, const PointedStructure& b, int k, const Limits& limits) {
  return arrow_witness(a, b, k, limits).has_value();
}

bool decide_equiv(const Structure& a, const Structure& b, int k, const Limits& limits) {
  require_same_vocabulary(a, b);
  return bisimilar(ef_adjoint_R(a, k, limits).carrier, ef_adjoint_R(b, k, limits).carrier);
}

bool decide_equiv(const PointedStructure& a, const PointedStructure& b, int k, const Limits& limits) {
  require_same_vocabulary(a.base, b.base);
  return bisimilar(modal_build(a, k, limits).carrier, modal_build(b, k, limits).carrier);
}

bool decide_iso(const Structure& a, const Structure& b, int k, const Limits& limits) {
  require_same_vocabulary(a, b);
  CodeTable table;
  return forest_code(ef_adjoint_R(a, k, limits).carrier, table) ==
         forest_code(ef_adjoint_R(b, k, limits).carrier, table);
}

bool decide_iso(const PointedStructure& a, const PointedStructure& b, int k, const Limits& limits) {
  require_same_vocabulary(a.base, b.base);
  CodeTable table;
  return forest_code(modal_build(a, k, limits).carrier, table) ==
         forest_code(modal_build(b, k, limits).carrier, table);
}

}  // namespace arbor
