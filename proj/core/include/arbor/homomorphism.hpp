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

#include "arbor/structure.hpp"

namespace arbor {

/// Partial map from source elements; `std::nullopt` leaves an element free.
using PartialMap = std::vector<std::optional<Element>>;

/// True iff `f` preserves every relation tuple of `a` into `b`.
/// Throws MalformedInput if `f` is not total on `a` or leaves `b`.
bool is_homomorphism(const ElementMap& f, const Structure& a, const Structure& b);

/// Injective homomorphism that also reflects every relation.
bool is_embedding(const ElementMap& f, const Structure& a, const Structure& b);

bool is_surjective(const ElementMap& f, const Structure& b);

struct HomSearchOptions {
  /// Either empty or of size |a|; fixed values must be respected.
  PartialMap fixed;
  /// Restrict to injective maps.
  bool injective = false;
};

/// Backtracking search with generalised arc consistency. Variables are
/// tried in element order and values in element order, so the result is
/// deterministic: the lexicographically least homomorphism.
std::optional<ElementMap> find_homomorphism(const Structure& a, const Structure& b,
                                            const HomSearchOptions& options = {});

/// Convenience overload taking only fixed values.
std::optional<ElementMap> find_homomorphism(const Structure& a, const Structure& b,
                                            const PartialMap& fixed);

/// Isomorphism test by bijective search; returns the isomorphism.
std::optional<ElementMap> find_isomorphism(const Structure& a, const Structure& b);

ElementMap compose(const ElementMap& first, const ElementMap& second);
ElementMap identity_map(std::size_t n);

/// Image factorisation f = embedding . surjection through the induced
/// substructure on the image of f.
struct Factorization {
  Structure image;
  ElementMap surjection;  // a -> image
  ElementMap embedding;   // image -> b
};

Factorization factorize(const ElementMap& f, const Structure& a, const Structure& b);

}  // namespace arbor
