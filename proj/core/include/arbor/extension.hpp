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

#include "arbor/environment.hpp"
#include "arbor/forest.hpp"
#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// A pair (u, v) of chains in R_k(a) and R_k(e) with isomorphic domains
/// such that some g: L(S_v) -> a sends the class of the i-th element of v
/// to the last entry of the i-th element of u.
struct MatchedPair {
  Tuple u;  // sequence over a; empty for the initial path
  Tuple v;  // sequence over e of the same length
  ElementMap witness;  // g, indexed by the classes of L(S_v)
};

/// All matched pairs for one codomain e, ordered by (u, v) canonical index.
std::vector<MatchedPair> find_matched_pairs(const Structure& a, const Structure& e, int k,
                                            const Limits& limits = {});

/// One wide-pushout extension step with its section certificate.
struct Extension {
  Structure b;
  ElementMap section;     // a -> b
  ElementMap retraction;  // b -> a, retraction . section = id
  std::size_t legs = 0;   // pushout squares after removing isomorphic duplicates
};

/// Glues a along L(P) to L(S_v) for every matched pair over the
/// environment and takes the wide pushout of the resulting sections.
/// Throws SizeCapExceeded when b would exceed the carrier cap.
Extension extend_once(const Structure& a, int k, const EnvironmentFamily& env,
                      const Limits& limits = {});

struct ExtensionStep {
  Extension step;        // from the previous structure
  ElementMap composite;  // original a -> this b
  ElementMap composite_retraction;
};

/// Finite prefix of the extension chain; steps = 0 gives an empty list.
std::vector<ExtensionStep> extend_iterated(const Structure& a, int k, const EnvironmentFamily& env,
                                           int steps, const Limits& limits = {});

/// True iff section and retraction are homomorphisms composing to the identity.
bool verify_section(const ElementMap& section, const ElementMap& retraction, const Structure& a,
                    const Structure& b);

struct RelativeCounterexample {
  std::size_t env_index = 0;
  Tuple m;        // sequence over a
  Tuple n;        // sequence over e
  Tuple n_prime;  // extension of n with no matching extension over b
};

struct RelativeReport {
  bool holds = true;
  std::optional<RelativeCounterexample> counterexample;
  std::size_t matched_pairs = 0;  // (m, n) with mutually related corestrictions
  std::size_t extensions_checked = 0;
};

/// Checks that b is k-extendable relative to h: a -> b over the
/// environment. For every (m, n) whose corestrictions map into each other
/// under the chains, and every n' >= n, looks for m' >= R_k(h) m with
/// the same profile as n' whose corestriction maps to and from that of n'.
/// Works on sequences and type codes without materialising R_k(b).
RelativeReport check_relative_extendability(const ElementMap& h, const Structure& a,
                                            const Structure& b, int k,
                                            const EnvironmentFamily& env);

}  // namespace arbor
