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

#include <cstddef>

namespace arbor {

/// Size budgets for the constructions that can blow up combinatorially.
struct Limits {
  /// Maximum number of elements in a materialised comonad carrier.
  std::size_t carrier_cap = 200'000;
  /// Maximum number of nodes in an expanded characteristic formula.
  std::size_t formula_cap = 1'000'000;
  /// Maximum number of candidates visited by enumerations (environments).
  std::size_t enumeration_cap = 2'000'000;

  /// Defaults, with `carrier_cap` overridden by FMT_SIZE_CAP when set.
  static Limits from_environment();
};

}  // namespace arbor
