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

#include "arbor/limits.hpp"

#include <cstdlib>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("FMT_SIZE_CAP"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(raw, &used);
      if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
      limits.carrier_cap = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      throw MalformedInput(std::string("FMT_SIZE_CAP is not a non-negative integer: ") + raw);
    }
  }
  return limits;
}

}  // namespace arbor
