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

#include "arbor/harness.hpp"

#include <cstdio>

#include "arbor/adjunction.hpp"
#include "arbor/characteristic.hpp"
#include "arbor/errors.hpp"
#include "arbor/eval.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/io.hpp"

namespace arbor {

namespace {

enum Which { kArrow, kEquiv, kIso };

std::vector<PointedStructure> unpointed(std::vector<Structure> members) {
  std::vector<PointedStructure> out;
  for (auto& s : members) {
    PointedStructure p;
    p.base = std::move(s);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Universe::Universe(Logic logic, int k, std::vector<std::string> names,
                   std::vector<PointedStructure> members, Limits limits)
    : logic_(logic), k_(k), limits_(limits), names_(std::move(names)), members_(std::move(members)) {
  if (names_.size() != members_.size()) throw MalformedInput("universe names and members differ in number");
  if (k < 1) throw MalformedInput("resource parameter k must be at least 1");
  for (std::size_t i = 1; i < members_.size(); ++i) {
    require_same_vocabulary(members_[0].base, members_[i].base);
  }
  if (logic == Logic::Modal) {
    for (const auto& m : members_) {
      if (!m.base.vocabulary().is_modal()) throw UnsupportedInput("modal universe needs arities at most 2");
      if (m.point >= m.base.size()) throw MalformedInput("modal universe members must be pointed");
    }
  }
  const std::size_t n = members_.size();
  arrow_.assign(n, std::vector<std::optional<bool>>(n));
  equiv_ = arrow_;
  iso_ = arrow_;
}

Universe::Universe(int k, std::vector<std::string> names, std::vector<Structure> members, Limits limits)
    : Universe(Logic::EF, k, std::move(names), unpointed(std::move(members)), limits) {}

const Vocabulary& Universe::vocabulary() const {
  static const Vocabulary empty;
  return members_.empty() ? empty : members_[0].base.vocabulary();
}

bool Universe::cell(Matrix& m, std::size_t i, std::size_t j, int which) {
  if (i >= size() || j >= size()) throw MalformedInput("universe index out of range");
  if (m[i][j]) return *m[i][j];
  bool value = false;
  const bool ef = logic_ == Logic::EF;
  const PointedStructure& a = members_[i];
  const PointedStructure& b = members_[j];
  switch (which) {
    case kArrow:
      value = ef ? decide_arrow(a.base, b.base, k_, limits_) : decide_arrow(a, b, k_, limits_);
      break;
    case kEquiv:
      value = ef ? decide_equiv(a.base, b.base, k_, limits_) : decide_equiv(a, b, k_, limits_);
      if (which == kEquiv) m[j][i] = value;
      break;
    default:
      value = ef ? decide_iso(a.base, b.base, k_, limits_) : decide_iso(a, b, k_, limits_);
      m[j][i] = value;
      break;
  }
  m[i][j] = value;
  return value;
}

bool Universe::arrow(std::size_t i, std::size_t j) { return cell(arrow_, i, j, kArrow); }
bool Universe::equiv(std::size_t i, std::size_t j) { return cell(equiv_, i, j, kEquiv); }
bool Universe::iso(std::size_t i, std::size_t j) { return cell(iso_, i, j, kIso); }

std::optional<ElementMap> Universe::homomorphism(std::size_t i, std::size_t j) const {
  const PointedStructure& a = members_.at(i);
  const PointedStructure& b = members_.at(j);
  if (logic_ == Logic::EF) return find_homomorphism(a.base, b.base);
  PartialMap fixed(a.base.size());
  fixed[a.point] = b.point;
  return find_homomorphism(a.base, b.base, fixed);
}

void Universe::check_coherence() {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const bool is = iso(i, j);
      const bool eq = equiv(i, j);
      const bool both = arrow(i, j) && arrow(j, i);
      if ((is && !eq) || (eq && !both)) {
        throw Error("inconsistent relation matrices at (" + names_[i] + ", " + names_[j] + ")");
      }
    }
  }
}

std::string Universe::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& text) {
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(std::string(logic_name(logic_)) + "/" + std::to_string(k_));
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& m = members_[i];
    feed(names_[i]);
    feed(to_json(m.base, logic_ == Logic::Modal ? std::optional<Element>(m.point) : std::nullopt).dump());
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

nlohmann::json Universe::matrices_to_json() const {
  auto dump = [](const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& c : row) r.push_back(c ? nlohmann::json(*c) : nlohmann::json());
      rows.push_back(std::move(r));
    }
    return rows;
  };
  return {{"hash", content_hash()}, {"arrow", dump(arrow_)}, {"equiv", dump(equiv_)}, {"iso", dump(iso_)}};
}

void Universe::load_matrices(const nlohmann::json& cache) {
  if (!cache.is_object() || cache.value("hash", std::string()) != content_hash()) return;
  auto load = [&](const char* key, Matrix& m) {
    const auto& rows = cache.at(key);
    if (!rows.is_array() || rows.size() != size()) return;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != size()) return;
      for (std::size_t j = 0; j < size(); ++j) {
        if (rows[i][j].is_boolean()) m[i][j] = rows[i][j].get<bool>();
      }
    }
  };
  try {
    load("arrow", arrow_);
    load("equiv", equiv_);
    load("iso", iso_);
  } catch (const nlohmann::json::exception&) {
    // A damaged cache is recomputed.
  }
}

std::vector<bool> members_satisfying(Universe& u, const FOPtr& sentence) {
  if (!free_variables(sentence).empty()) throw MalformedInput("class formula must be a sentence");
  std::vector<bool> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(eval_fo(sentence, u.member(i).base));
  return out;
}

std::vector<bool> members_satisfying(Universe& u, const ModalPtr& formula) {
  if (u.logic() != Logic::Modal) throw MalformedInput("modal class formulas need a modal universe");
  std::vector<bool> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(eval_modal(formula, u.member(i)));
  return out;
}

HPReport check_hp(Universe& u, const std::vector<bool>& members, bool counting) {
  if (members.size() != u.size()) throw MalformedInput("class membership does not match the universe");
  HPReport r;
  r.logic = u.logic();
  r.k = u.k();
  r.counting = counting;
  r.members = members;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!members[i]) continue;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (members[j]) continue;
      if (r.saturated_equiv && u.equiv(i, j)) {
        r.saturated_equiv = false;
        r.equiv_counterexample = {i, j};
      }
      if (r.saturated_iso && u.iso(i, j)) {
        r.saturated_iso = false;
        r.iso_counterexample = {i, j};
      }
      if (r.upward_closed && u.arrow(i, j)) {
        r.upward_closed = false;
        r.arrow_counterexample = {i, j};
      }
      if (r.closed_under_morphisms) {
        if (auto h = u.homomorphism(i, j)) {
          r.closed_under_morphisms = false;
          r.morphism_counterexample = HPReport::Morphism{i, j, std::move(*h)};
        }
      }
    }
  }
  if (r.upward_closed && !r.closed_under_morphisms) {
    throw Error("upward closure without closure under morphisms: inconsistent matrices");
  }
  r.applicable = (counting ? r.saturated_iso : r.saturated_equiv) && r.closed_under_morphisms;
  if (!r.applicable || !r.upward_closed) return r;

  // Minimal members in the arrow preorder, one per equivalence class.
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!members[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < u.size() && minimal; ++j) {
      if (members[j] && j != i && u.arrow(j, i) && !u.arrow(i, j)) minimal = false;
    }
    for (std::size_t j : r.minimal_members) {
      if (u.arrow(j, i) && u.arrow(i, j)) minimal = false;
    }
    if (minimal) r.minimal_members.push_back(i);
  }
  bool verified = true;
  if (u.logic() == Logic::EF) {
    std::vector<FOPtr> parts;
    for (std::size_t i : r.minimal_members) parts.push_back(ep_characteristic_fo(u.member(i).base, u.k()));
    r.fo_witness = parts.empty() ? fo::falsity() : parts.size() == 1 ? parts[0] : fo::disj(parts);
    for (std::size_t i = 0; i < u.size(); ++i) {
      verified = verified && eval_fo(r.fo_witness, u.member(i).base) == members[i];
    }
  } else {
    std::vector<ModalPtr> parts;
    for (std::size_t i : r.minimal_members) parts.push_back(ep_characteristic_modal(u.member(i), u.k()));
    r.modal_witness = parts.empty() ? ml::bottom() : parts.size() == 1 ? parts[0] : ml::disj(parts);
    for (std::size_t i = 0; i < u.size(); ++i) {
      verified = verified && eval_modal(r.modal_witness, u.member(i)) == members[i];
    }
  }
  r.witness_verified = verified;
  return r;
}

bool check_bcp(const Structure& a, int k, const Limits& limits) {
  return decide_equiv(a, ef_adjoint_G(a, k, limits).g, k, limits);
}

bool check_bcp(const PointedStructure& p, int k, const Limits& limits) {
  return decide_equiv(p, modal_G(p, k, limits), k, limits);
}

bool check_idempotent(const PointedStructure& p, int k, const Limits& limits) {
  return decide_iso(p, modal_G(p, k, limits), k, limits);
}

bool check_idempotent(const Structure& a, int k, const Limits& limits) {
  return decide_iso(a, ef_adjoint_G(a, k, limits).g, k, limits);
}

NegativeRestrictionReport check_negative_restriction(const std::vector<FOPtr>& theory, int k,
                                                     const std::vector<Structure>& samples,
                                                     const Limits& limits) {
  for (const auto& f : theory) {
    if (!is_negative(f)) throw MalformedInput("theory formula is not negative: " + to_string(f));
    if (!free_variables(f).empty()) throw MalformedInput("theory formula is not a sentence: " + to_string(f));
  }
  NegativeRestrictionReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Structure& a = samples[i];
    bool model = true;
    for (const auto& f : theory) model = model && eval_fo(f, a);
    if (!model) continue;
    ++report.models;
    const EFAdjointG g = ef_adjoint_G(a, k, limits);
    bool ok = true;
    for (const auto& f : theory) ok = ok && eval_fo(f, g.g);
    // Counit: each class goes to the last entry of its sequences.
    ElementMap counit(g.g.size());
    for (Element x = 0; x < g.r.size(); ++x) counit[g.classes[x]] = g.r.sequences[x].back();
    const bool surjective = is_surjective(counit, a) && is_homomorphism(counit, g.g, a);
    report.counit_surjective = report.counit_surjective && surjective;
    if ((!ok || !surjective) && report.holds) {
      report.holds = false;
      report.failing_sample = i;
    }
  }
  return report;
}

}  // namespace arbor
