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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbor/decide.hpp"
#include "arbor/formula.hpp"
#include "arbor/limits.hpp"
#include "arbor/structure.hpp"

namespace arbor {

/// Finite family of structures over one vocabulary with lazily computed
/// relation matrices for a fixed logic and k. For the modal logic every
/// member is pointed.
class Universe {
 public:
  Universe(Logic logic, int k, std::vector<std::string> names, std::vector<PointedStructure> members,
           Limits limits = {});
  /// EF universe of unpointed structures.
  Universe(int k, std::vector<std::string> names, std::vector<Structure> members, Limits limits = {});

  Logic logic() const { return logic_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const PointedStructure& member(std::size_t i) const { return members_[i]; }
  const Vocabulary& vocabulary() const;

  bool arrow(std::size_t i, std::size_t j);
  bool equiv(std::size_t i, std::size_t j);
  bool iso(std::size_t i, std::size_t j);
  /// Plain homomorphism (point to point in the modal case).
  std::optional<ElementMap> homomorphism(std::size_t i, std::size_t j) const;

  /// Fills every matrix and throws Error if iso does not imply equiv or
  /// equiv does not imply arrows both ways.
  void check_coherence();

  /// Content hash of logic, k and members (FNV-1a, hex).
  std::string content_hash() const;
  nlohmann::json matrices_to_json() const;
  /// Ignores caches written for different content.
  void load_matrices(const nlohmann::json& cache);

 private:
  using Matrix = std::vector<std::vector<std::optional<bool>>>;
  bool cell(Matrix& m, std::size_t i, std::size_t j, int which);

  Logic logic_;
  int k_;
  Limits limits_;
  std::vector<std::string> names_;
  std::vector<PointedStructure> members_;
  Matrix arrow_;
  Matrix equiv_;
  Matrix iso_;
};

/// Membership of each universe element in the model class of a sentence.
std::vector<bool> members_satisfying(Universe& u, const FOPtr& sentence);
std::vector<bool> members_satisfying(Universe& u, const ModalPtr& formula);

struct HPReport {
  Logic logic = Logic::EF;
  int k = 0;
  bool counting = false;  // the isomorphism-saturated variant
  std::vector<bool> members;

  bool saturated_equiv = true;
  bool saturated_iso = true;
  bool closed_under_morphisms = true;
  bool upward_closed = true;

  /// Member i and non-member j related by the failing relation.
  std::optional<std::pair<std::size_t, std::size_t>> equiv_counterexample;
  std::optional<std::pair<std::size_t, std::size_t>> iso_counterexample;
  std::optional<std::pair<std::size_t, std::size_t>> arrow_counterexample;
  struct Morphism {
    std::size_t from = 0;
    std::size_t to = 0;
    ElementMap map;
  };
  std::optional<Morphism> morphism_counterexample;

  /// True when the class is saturated (equiv, or iso when counting) and
  /// closed under morphisms, so the preservation property applies.
  bool applicable = false;
  std::vector<std::size_t> minimal_members;
  FOPtr fo_witness;
  ModalPtr modal_witness;
  /// The witness defines exactly the class within the universe.
  bool witness_verified = false;
};

/// Evaluates the preservation property for the class `members` within the
/// universe. All claims are relative to the universe.
HPReport check_hp(Universe& u, const std::vector<bool>& members, bool counting = false);

/// a and G_k a are equivalent in the given logic.
bool check_bcp(const Structure& a, int k, const Limits& limits = {});
bool check_bcp(const PointedStructure& p, int k, const Limits& limits = {});

/// R_k P and R_k G_k P are isomorphic. The pointed version needs a modal
/// vocabulary and throws UnsupportedInput otherwise.
bool check_idempotent(const PointedStructure& p, int k, const Limits& limits = {});
bool check_idempotent(const Structure& a, int k, const Limits& limits = {});

struct NegativeRestrictionReport {
  bool holds = true;
  std::size_t models = 0;  // samples satisfying the theory
  bool counit_surjective = true;
  std::optional<std::size_t> failing_sample;
};

/// For every sample model of T, G_k of it is again a model and its counit
/// is surjective. Throws MalformedInput for formulas outside the negative
/// fragment or with free variables.
NegativeRestrictionReport check_negative_restriction(const std::vector<FOPtr>& theory, int k,
                                                     const std::vector<Structure>& samples,
                                                     const Limits& limits = {});

}  // namespace arbor
