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
#include "arbor/ef_comonad.hpp"
#include "arbor/forest.hpp"
#include "arbor/modal_comonad.hpp"

namespace arbor {

/// R_k(A) = E_k(J A) with the prefix order. Throws MalformedInput when A
/// already uses the symbol I.
EFCoalgebra ef_adjoint_R(const Structure& a, int k, const Limits& limits = {});

struct EFAdjointG {
  EFCoalgebra r;     // R_k(A)
  Structure g;       // H of the carrier base
  ElementMap classes;  // carrier -> g
};

/// G_k(A) = H(E_k(J A)).
EFAdjointG ef_adjoint_G(const Structure& a, int k, const Limits& limits = {});

/// G_k for the modal adjunction: the carrier of M_k pointed at the trivial path.
PointedStructure modal_G(const PointedStructure& p, int k, const Limits& limits = {});

/// f^flat for f: L(P) -> a, where P is a chain over sigma^I and `r` is R_k(a).
ElementMap transpose_flat(const ElementMap& f, const ForestStructure& path, const EFCoalgebra& r);

/// m^sharp for m: P -> R_k(a): each I-class goes to the last entry of the
/// image sequence of any member. Throws MalformedInput if members disagree.
ElementMap transpose_sharp(const ElementMap& m, const ForestStructure& path, const EFCoalgebra& r);

}  // namespace arbor
