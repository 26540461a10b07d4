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

#include <cstdint>
#include <string_view>
#include <vector>

#include "arbor/formula.hpp"
#include "arbor/structure.hpp"

namespace arbor {

enum class Fragment { FO, EPFO, ML, EPML, MLGraded };

/// "fo", "ep-fo", "ml", "ep-ml" or "ml-graded"; throws MalformedInput.
Fragment parse_fragment(std::string_view text);

struct SampleOptions {
  /// Largest grade used by graded modalities.
  int max_grade = 3;
  /// Upper bound on connective nesting below each quantifier level.
  int max_connective_depth = 2;
};

/// Deterministic pseudo-random first-order sentences of quantifier rank at
/// most k. Fragment must be FO or EPFO.
std::vector<FOPtr> sample_fo(const Vocabulary& vocab, int k, Fragment fragment, std::size_t count,
                             std::uint64_t seed, const SampleOptions& options = {});

/// Deterministic pseudo-random modal formulas of depth at most k. Fragment
/// must be ML, EPML or MLGraded.
std::vector<ModalPtr> sample_modal(const Vocabulary& vocab, int k, Fragment fragment,
                                   std::size_t count, std::uint64_t seed,
                                   const SampleOptions& options = {});

/// Largest number of successors of any element along one binary relation.
int max_out_degree(const Structure& s);

}  // namespace arbor
