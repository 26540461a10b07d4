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

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

struct FOFormula;
/// Nodes are immutable and may be shared between parents.
using FOPtr = std::shared_ptr<const FOFormula>;

struct FOFormula {
  enum class Kind { True, False, Equal, Atom, Not, And, Or, Implies, Exists, Forall };

  Kind kind;
  std::string symbol;              // relation name for Atom
  std::vector<std::string> vars;   // Atom/Equal arguments, or the bound variable
  std::vector<FOPtr> children;
};

namespace fo {
FOPtr truth();
FOPtr falsity();
FOPtr equal(std::string x, std::string y);
FOPtr atom(std::string relation, std::vector<std::string> args);
FOPtr negate(FOPtr f);
FOPtr conj(std::vector<FOPtr> parts);
FOPtr disj(std::vector<FOPtr> parts);
FOPtr implies(FOPtr lhs, FOPtr rhs);
FOPtr exists(std::string var, FOPtr body);
FOPtr forall(std::string var, FOPtr body);
}  // namespace fo

struct ModalFormula;
using ModalPtr = std::shared_ptr<const ModalFormula>;

struct ModalFormula {
  enum class Kind { Top, Bottom, Prop, Not, And, Or, Diamond, Box };

  Kind kind;
  std::string symbol;        // proposition or relation name
  std::optional<int> grade;  // graded modalities only
  std::vector<ModalPtr> children;
};

namespace ml {
ModalPtr top();
ModalPtr bottom();
ModalPtr prop(std::string p);
ModalPtr negate(ModalPtr f);
ModalPtr conj(std::vector<ModalPtr> parts);
ModalPtr disj(std::vector<ModalPtr> parts);
ModalPtr diamond(std::string relation, ModalPtr body, std::optional<int> grade = std::nullopt);
ModalPtr box(std::string relation, ModalPtr body, std::optional<int> grade = std::nullopt);
}  // namespace ml

/// Reserved words of the s-expression syntax.
bool is_keyword(std::string_view word);

/// Parsing throws MalformedInput. Printing is the inverse of parsing on
/// single-space separated text.
FOPtr parse_fo(std::string_view text);
std::string to_string(const FOPtr& f);
ModalPtr parse_modal(std::string_view text);
std::string to_string(const ModalPtr& f);

/// True if the text uses only modal constructs.
bool looks_modal(std::string_view text);

int quantifier_rank(const FOPtr& f);
int modal_depth(const ModalPtr& f);
std::set<std::string> free_variables(const FOPtr& f);

/// Only atoms, equalities, true/false, conjunction, disjunction, exists.
bool is_existential_positive(const FOPtr& f);
/// Only top/bottom, propositions, conjunction, disjunction and ungraded
/// (or grade-1) diamonds.
bool is_existential_positive(const ModalPtr& f);
/// Built from negated atoms with conjunction, disjunction and quantifiers.
bool is_negative(const FOPtr& f);
/// No graded modalities.
bool is_ungraded(const ModalPtr& f);

/// Number of nodes of the expanded tree, saturating at `cap + 1`.
std::size_t tree_size(const FOPtr& f, std::size_t cap);
std::size_t tree_size(const ModalPtr& f, std::size_t cap);

}  // namespace arbor
