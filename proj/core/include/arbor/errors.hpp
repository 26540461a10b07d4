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

#include <stdexcept>
#include <string>

namespace arbor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or file format.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but outside what an operation supports
/// (non-modal vocabulary for a modal operation, non-embedding pushout legs).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed its configured size budget.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace arbor
