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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "arbor/adjunction.hpp"
#include "arbor/characteristic.hpp"
#include "arbor/decide.hpp"
#include "arbor/ef_comonad.hpp"
#include "arbor/environment.hpp"
#include "arbor/eval.hpp"
#include "arbor/extension.hpp"
#include "arbor/formula.hpp"
#include "arbor/games.hpp"
#include "arbor/harness.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/io.hpp"
#include "arbor/modal_comonad.hpp"
#include "arbor/sampling.hpp"
#include "oracles.hpp"

using namespace arbor;
using namespace arbor::testing;

namespace {

constexpr const char* kComplete = "(forall x (forall y (implies (not (= x y)) (R x y))))";

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// One computed pair with the three relations, for the inclusion chain.
struct PairRecord {
  bool iso, equiv, arrow_ab, arrow_ba;
};
std::vector<PairRecord> g_pairs;

void record(bool iso, bool equiv, bool ab, bool ba) { g_pairs.push_back({iso, equiv, ab, ba}); }

int run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  const bool pass = out.pass && in_time;
  std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), seconds, limit_seconds, in_time ? "" : ", exceeded");
  std::fflush(stdout);
  return pass ? 0 : 1;
}

Outcome companion_failure() {
  const Structure a = two_cycle();
  const FOPtr phi = parse_fo(kComplete);
  bool ok = eval_fo(phi, a) && check_bcp(a, 1);
  for (int k : {2, 3}) {
    ok = ok && !eval_fo(phi, ef_adjoint_G(a, k).g) && !check_bcp(a, k);
  }
  return {ok, "phi holds in A, fails in G_2 A and G_3 A; bcp false at k=2,3 and true at k=1"};
}

Outcome carrier_arithmetic() {
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& a : digraphs_up_to_iso(3)) {
    for (int k = 1; k <= 3; ++k) {
      ok = ok && ef_build(a, k).size() == carrier_count(a.size(), k);
      ++checked;
    }
  }
  const std::size_t g2 = ef_adjoint_G(two_cycle(), 2).g.size();
  ok = ok && g2 == 4;
  return {ok, std::to_string(checked) + " carriers match the power sums; |G_2 A| = " + std::to_string(g2)};
}

Outcome oracle_agreement() {
  const auto all = digraphs_up_to_iso(3);
  std::size_t pairs = 0, mismatches = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const auto& a : all) {
      for (const auto& b : all) {
        const bool equiv = decide_equiv(a, b, k);
        const bool ab = decide_arrow(a, b, k);
        const bool ba = decide_arrow(b, a, k);
        mismatches += equiv != oracle_ef_game(a, b, k);
        mismatches += ab != oracle_ep_game(a, b, k);
        record(decide_iso(a, b, k), equiv, ab, ba);
        ++pairs;
      }
    }
  }
  return {mismatches == 0, std::to_string(all.size()) + " structures, " + std::to_string(pairs) +
                               " pairs over k=1..3, " + std::to_string(mismatches) + " mismatches"};
}

Outcome modal_idempotency() {
  Rng rng(4004);
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const PointedStructure p = random_kripke(1 + rng() % 5, 0.3, rng);
    const int k = 1 + i % 4;
    failures += !check_idempotent(p, k);
    const PointedStructure g = modal_G(p, k);
    record(decide_iso(p, g, k), decide_equiv(p, g, k), decide_arrow(p, g, k), decide_arrow(g, p, k));
  }
  return {failures == 0, "200 pointed structures, " + std::to_string(failures) + " failures"};
}

Outcome graded_soundness() {
  Rng rng(5005);
  std::vector<std::pair<PointedStructure, PointedStructure>> pairs;
  std::vector<int> ks;
  for (int i = 0; i < 300; ++i) {
    const int k = 1 + i % 3;
    PointedStructure p = random_kripke(1 + rng() % 3, 0.4, rng);
    // Every third pair compares a structure with its unravelling, which is
    // always isomorphic at k; the rest are independent samples.
    PointedStructure q = i % 3 == 0 ? modal_G(p, k) : random_kripke(1 + rng() % 3, 0.4, rng);
    pairs.emplace_back(std::move(p), std::move(q));
    ks.push_back(k);
  }
  int max_degree = 0;
  for (const auto& [p, q] : pairs) max_degree = std::max({max_degree, max_out_degree(p.base), max_out_degree(q.base)});
  const SampleOptions options{.max_grade = max_degree + 1};
  const Vocabulary v{{"R", 2}, {"p", 1}};
  std::vector<std::vector<ModalPtr>> formulas;
  for (int k = 1; k <= 3; ++k) formulas.push_back(sample_modal(v, k, Fragment::MLGraded, 500, 5000 + k, options));
  std::size_t iso_pairs = 0, violations = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [p, q] = pairs[i];
    const int k = ks[i];
    const bool iso = decide_iso(p, q, k);
    record(iso, decide_equiv(p, q, k), decide_arrow(p, q, k), decide_arrow(q, p, k));
    if (!iso) continue;
    ++iso_pairs;
    for (const auto& f : formulas[k - 1]) violations += eval_modal(f, p) != eval_modal(f, q);
  }
  return {violations == 0 && iso_pairs > 0,
          std::to_string(iso_pairs) + " isomorphic pairs of 300, 500 formulas each, " +
              std::to_string(violations) + " violations"};
}

bool ef_laws(const Structure& a, int k) {
  const EFCoalgebra c = ef_build(a, k);
  const EFComultiplication d = ef_comult(c);
  const ElementMap eps = ef_counit(c);
  const ElementMap id = identity_map(c.size());
  if (compose(d.map, ef_counit(d.doubled)) != id) return false;
  if (compose(d.map, ef_map(eps, d.doubled, c)) != id) return false;
  const std::vector<Tuple> prefixes = ef_prefix_sequences(d.doubled);
  for (Element s = 0; s < c.size(); ++s) {
    const Element t = d.map[s];
    Tuple image;
    for (Element x : d.doubled.sequences[t]) image.push_back(d.map[x]);
    if (prefixes[t] != image) return false;
  }
  return true;
}

bool modal_laws(const PointedStructure& p, int k) {
  const ModalCoalgebra c = modal_build(p, k);
  const ModalComultiplication d = modal_comult(c);
  const ElementMap id = identity_map(c.size());
  if (compose(d.map, modal_counit(d.doubled)) != id) return false;
  if (compose(d.map, modal_map(modal_counit(c), d.doubled, c)) != id) return false;
  for (Element s = 0; s < c.size(); ++s) {
    const ModalPath& path = d.doubled.paths[d.map[s]];
    for (std::size_t i = 0; i <= path.length(); ++i) {
      ModalPath prefix{{path.nodes.begin(), path.nodes.begin() + i + 1}, {path.steps.begin(), path.steps.begin() + i}};
      if (modal_element_of(d.doubled, prefix) != d.map[path.nodes[i]]) return false;
    }
  }
  return true;
}

Outcome comonad_laws() {
  Rng rng(6006);
  std::size_t failures = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + i % 3;
    failures += !ef_laws(random_digraph(1 + rng() % 3, 0.4, rng), k);
    failures += !modal_laws(random_kripke(1 + rng() % 4, 0.4, rng), k);
  }
  return {failures == 0, "100 structures per comonad, " + std::to_string(failures) + " failures"};
}

Outcome characteristic_adequacy() {
  std::vector<Structure> small;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto& s : all_digraphs(n)) small.push_back(std::move(s));
  }
  std::size_t cases = 0, mismatches = 0;
  auto check = [&](const Structure& a, const Structure& b, int k, const FOPtr& chi) {
    const bool by_formula = eval_fo(chi, b);
    const bool by_game = oracle_ep_game(a, b, k);
    const bool by_comonad = decide_arrow(a, b, k);
    mismatches += !(by_formula == by_game && by_game == by_comonad);
    ++cases;
  };
  for (int k = 1; k <= 2; ++k) {
    for (const auto& a : small) {
      const FOPtr chi = ep_characteristic_fo(a, k);
      for (const auto& b : small) check(a, b, k, chi);
    }
  }
  Rng rng(7007);
  for (int i = 0; i < 100; ++i) {
    const Structure a = random_digraph(3, 0.4, rng);
    const Structure b = random_digraph(3, 0.4, rng);
    check(a, b, 2, ep_characteristic_fo(a, 2));
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

Outcome extension_certificates() {
  const EnvironmentFamily env = default_environment(Vocabulary{{"R", 2}}, 2, 3);
  Rng rng(8008);
  std::size_t certified = 0, extendable = 0, largest = 0;
  for (int i = 0; i < 20; ++i) {
    const Structure a = random_digraph(1 + rng() % 3, 0.4, rng);
    const Extension x = extend_once(a, 2, env);
    certified += verify_section(x.section, x.retraction, a, x.b);
    extendable += check_relative_extendability(x.section, a, x.b, 2, env).holds;
    largest = std::max(largest, x.b.size());
  }
  return {certified == 20 && extendable == 20,
          "environment of " + std::to_string(env.size()) + " members; " + std::to_string(certified) +
              "/20 sections verified, " + std::to_string(extendable) + "/20 relatively extendable, largest b has " +
              std::to_string(largest) + " elements"};
}

Universe load_universe(const std::filesystem::path& dir, Logic logic, int k) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() == ".json" && name.rfind(".arbor-cache-", 0) != 0) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> names;
  std::vector<PointedStructure> pointed;
  std::vector<Structure> plain;
  for (const auto& f : files) {
    names.push_back(f.stem().string());
    const StructureFile file = load_structure(f);
    if (logic == Logic::Modal) {
      pointed.push_back(file.pointed());
    } else {
      plain.push_back(file.structure);
    }
  }
  if (logic == Logic::EF) return Universe(k, names, plain);
  return Universe(logic, k, names, pointed);
}

Outcome hpt_instances() {
  const std::filesystem::path data(ARBOR_TEST_DATA);
  Universe u1 = load_universe(data / "universe_ef", Logic::EF, 1);
  const HPReport r1 = check_hp(u1, members_satisfying(u1, parse_fo("(exists x (R x x))")));
  const bool full1 = r1.saturated_equiv && r1.saturated_iso && r1.closed_under_morphisms && r1.upward_closed &&
                     r1.applicable && r1.witness_verified && r1.fo_witness &&
                     quantifier_rank(r1.fo_witness) == 1 && is_existential_positive(r1.fo_witness);

  Universe u2 = load_universe(data / "universe_ef", Logic::EF, 2);
  const HPReport r2 = check_hp(u2, members_satisfying(u2, parse_fo(kComplete)));
  bool counter = false;
  if (!r2.closed_under_morphisms && r2.morphism_counterexample) {
    const auto& m = *r2.morphism_counterexample;
    counter = r2.members[m.from] && !r2.members[m.to] &&
              is_homomorphism(m.map, u2.member(m.from).base, u2.member(m.to).base);
  }

  Universe um = load_universe(data / "universe_modal", Logic::Modal, 2);
  const ModalPtr graded = parse_modal("(not (box R 1 (not (dia R (prop p)))))");
  const HPReport rm = check_hp(um, members_satisfying(um, graded), true);
  const bool fullm = !is_ungraded(graded) && modal_depth(graded) == 2 && rm.saturated_equiv &&
                     rm.saturated_iso && rm.closed_under_morphisms && rm.upward_closed && rm.applicable &&
                     rm.witness_verified && rm.modal_witness && is_existential_positive(rm.modal_witness);
  std::string detail = std::to_string(u1.size()) + "-structure universe: exists-loop " +
                       (full1 ? "full pass with " + to_string(r1.fo_witness) : std::string("incomplete")) +
                       "; completeness " + (counter ? "refuted by a homomorphism" : "not refuted") + "; " +
                       std::to_string(um.size()) + "-structure modal universe " +
                       (fullm ? "full pass with " + to_string(rm.modal_witness) : std::string("incomplete"));
  return {full1 && counter && fullm && u1.size() == 8 && um.size() == 6, detail};
}

Outcome inclusion_chain() {
  std::size_t violations = 0;
  for (const auto& p : g_pairs) {
    if (p.iso && !p.equiv) ++violations;
    if (p.equiv && !(p.arrow_ab && p.arrow_ba)) ++violations;
  }
  return {violations == 0 && !g_pairs.empty(),
          std::to_string(g_pairs.size()) + " pairs, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "bisimilar companion failure", 10, companion_failure);
  failed += run(2, "carrier arithmetic", 5, carrier_arithmetic);
  failed += run(3, "oracle agreement", 600, oracle_agreement);
  failed += run(4, "modal idempotency", 120, modal_idempotency);
  failed += run(5, "graded soundness", 120, graded_soundness);
  failed += run(6, "comonad laws", 60, comonad_laws);
  failed += run(7, "characteristic sentence adequacy", 300, characteristic_adequacy);
  failed += run(8, "extension certificates", 600, extension_certificates);
  failed += run(9, "preservation harness", 300, hpt_instances);
  failed += run(10, "inclusion chain", 60, inclusion_chain);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
