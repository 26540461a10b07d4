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

#include <doctest.h>

#include "arbor/adjunction.hpp"
#include "arbor/canonical.hpp"
#include "arbor/ef_comonad.hpp"
#include "arbor/equality.hpp"
#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/io.hpp"
#include "arbor/modal_comonad.hpp"
#include "arbor/path_restriction.hpp"
#include "oracles.hpp"

using namespace arbor;
using namespace arbor::testing;

namespace {

Tuple image_of(const Tuple& t, const ElementMap& f) {
  Tuple out;
  for (Element x : t) out.push_back(f[x]);
  return out;
}

/// The chain below carrier element s of R_k, as a forest of its own.
ForestStructure chain_below(const EFCoalgebra& r, Element s) {
  return induced_forest(r.carrier, r.carrier.down_set(s)).first;
}

void check_ef_laws(const Structure& a, int k) {
  const EFCoalgebra c = ef_build(a, k);
  const EFComultiplication d = ef_comult(c);
  const ElementMap eps = ef_counit(c);
  const ElementMap eps_doubled = ef_counit(d.doubled);
  CHECK(is_homomorphism(eps, c.carrier.base(), a));
  CHECK(is_homomorphism(d.map, c.carrier.base(), d.doubled.carrier.base()));
  CHECK(compose(d.map, eps_doubled) == identity_map(c.size()));
  CHECK(compose(d.map, ef_map(eps, d.doubled, c)) == identity_map(c.size()));
  // Coassociativity on the image of the comultiplication, without
  // materialising the threefold carrier: the prefixes of delta(s) are the
  // comultiplications of the prefixes of s.
  const std::vector<Tuple> prefixes = ef_prefix_sequences(d.doubled);
  for (Element s = 0; s < c.size(); ++s) {
    const Element t = d.map[s];
    CHECK(prefixes[t] == image_of(d.doubled.sequences[t], d.map));
  }
}

void check_modal_laws(const PointedStructure& p, int k) {
  const ModalCoalgebra c = modal_build(p, k);
  const ModalComultiplication d = modal_comult(c);
  const ElementMap eps = modal_counit(c);
  CHECK(is_homomorphism(eps, c.carrier.base(), p.base));
  CHECK(eps[c.point] == p.point);
  CHECK(compose(d.map, modal_counit(d.doubled)) == identity_map(c.size()));
  CHECK(compose(d.map, modal_map(eps, d.doubled, c)) == identity_map(c.size()));
  for (Element s = 0; s < c.size(); ++s) {
    const ModalPath& path = d.doubled.paths[d.map[s]];
    for (std::size_t i = 0; i <= path.length(); ++i) {
      ModalPath prefix{{path.nodes.begin(), path.nodes.begin() + i + 1},
                       {path.steps.begin(), path.steps.begin() + i}};
      CHECK(modal_element_of(d.doubled, prefix) == d.map[path.nodes[i]]);
    }
  }
}

}  // namespace

TEST_SUITE("game-comonads") {
  TEST_CASE("carrier sizes of E_k") {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) {
        Rng rng(n * 10 + k);
        const EFCoalgebra c = ef_build(random_digraph(n, 0.5, rng), k);
        CHECK(c.size() == carrier_count(n, k));
        CHECK(ef_carrier_size(n, k) == carrier_count(n, k));
        CHECK(c.carrier.height() <= static_cast<std::size_t>(k));
        CHECK(check_condition_E(c.carrier));
      }
    }
    CHECK_THROWS_AS(ef_build(two_cycle(), 0), MalformedInput);
    CHECK_THROWS_AS(ef_build(two_cycle(), 3, Limits{.carrier_cap = 10}), SizeCapExceeded);
  }

  TEST_CASE("lifted relations on the 2-cycle") {
    const EFCoalgebra c = ef_build(two_cycle(), 2);
    const Structure& s = c.carrier.base();
    const Element a = c.element_of(Tuple{0});
    const Element b = c.element_of(Tuple{1});
    const Element ab = c.element_of(Tuple{0, 1});
    CHECK(s.name(ab) == "[a,b]");
    CHECK(s.holds(0, {a, ab}));
    CHECK_FALSE(s.holds(0, {a, b}));
    CHECK(ef_counit(c)[ab] == 1);
    const EFComultiplication d = ef_comult(c);
    CHECK(d.doubled.sequences[d.map[ab]] == Tuple{a, ab});
    CHECK(d.doubled.sequences[d.map[a]] == Tuple{a});
  }

  TEST_CASE("E_k is a functor") {
    Rng rng(31);
    for (int round = 0; round < 30; ++round) {
      const Structure x = random_digraph(1 + rng() % 3, 0.4, rng);
      const Structure y = random_digraph(1 + rng() % 3, 0.5, rng);
      const Structure z = random_digraph(1 + rng() % 3, 0.7, rng);
      const EFCoalgebra ex = ef_build(x, 2), ey = ef_build(y, 2), ez = ef_build(z, 2);
      CHECK(ef_map(identity_map(x.size()), ex, ex) == identity_map(ex.size()));
      const auto f = find_homomorphism(x, y);
      const auto g = find_homomorphism(y, z);
      if (!f || !g) continue;
      CHECK(ef_map(compose(*f, *g), ex, ez) == compose(ef_map(*f, ex, ey), ef_map(*g, ey, ez)));
      CHECK(is_homomorphism(ef_map(*f, ex, ey), ex.carrier.base(), ey.carrier.base()));
    }
  }

  TEST_CASE("comonad laws for E_k") {
    Rng rng(32);
    for (int round = 0; round < 40; ++round) {
      const std::size_t n = 1 + rng() % 4;
      const int k = 1 + static_cast<int>(rng() % (n == 4 ? 2 : 3));
      check_ef_laws(random_digraph(n, 0.4, rng), k);
    }
  }

  TEST_CASE("modal unravelling") {
    const PointedStructure cycle(two_cycle(), 0);
    const ModalCoalgebra c = modal_build(cycle, 3);
    CHECK(c.size() == 4);
    CHECK(c.carrier.height() == 4);
    CHECK(c.carrier.base().name(c.point) == "<a>");
    CHECK(modal_build(PointedStructure(digraph(1, {}), 0), 3).size() == 1);
    const ModalCoalgebra loop = modal_build(PointedStructure(single_loop(), 0), 3);
    CHECK(loop.size() == 4);
    CHECK(loop.carrier.height() == 4);
    const Structure ternary = make_structure(Vocabulary{{"T", 3}}, {"a"}, {});
    CHECK_THROWS_AS(modal_build(PointedStructure(ternary, 0), 2), UnsupportedInput);
  }

  TEST_CASE("comonad laws for M_k") {
    Rng rng(33);
    for (int round = 0; round < 40; ++round) {
      const PointedStructure p = random_kripke(1 + rng() % 4, 0.4, rng);
      const int k = 1 + static_cast<int>(rng() % 3);
      check_modal_laws(p, k);
      const ModalCoalgebra c = modal_build(p, k);
      CHECK(check_condition_M(c.carrier));
      CHECK(c.carrier.height() <= static_cast<std::size_t>(k + 1));
    }
  }

  TEST_CASE("counits are surjective") {
    Rng rng(34);
    for (int round = 0; round < 30; ++round) {
      const Structure a = random_digraph(1 + rng() % 4, 0.3, rng);
      CHECK(is_surjective(ef_counit(ef_build(a, 1 + rng() % 2)), a));
      // The modal counit reaches the points reachable from the root; on the
      // generated part it is onto.
      const PointedStructure p = random_kripke(1 + rng() % 4, 0.5, rng);
      const ModalCoalgebra c = modal_build(p, 3);
      std::set<Element> reach{p.point}, frontier{p.point};
      for (int step = 0; step < 3; ++step) {
        std::set<Element> next;
        const Relation& r = p.base.relation("R");
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (frontier.count(r.tuple(i)[0])) next.insert(r.tuple(i)[1]);
        }
        reach.insert(next.begin(), next.end());
        frontier = next;
      }
      const ElementMap eps = modal_counit(c);
      CHECK(std::set<Element>(eps.begin(), eps.end()) == reach);
    }
  }

  TEST_CASE("modal comonads are idempotent on codes") {
    Rng rng(35);
    for (int round = 0; round < 40; ++round) {
      const PointedStructure p = random_kripke(1 + rng() % 5, 0.35, rng);
      const int k = 1 + static_cast<int>(rng() % 3);
      CodeTable table;
      const int once = forest_code(modal_build(p, k).carrier, table);
      const int twice = forest_code(modal_build(modal_G(p, k), k).carrier, table);
      CHECK(once == twice);
    }
  }

  TEST_CASE("the composite adjunction") {
    const Structure a = two_cycle();
    const EFAdjointG g2 = ef_adjoint_G(a, 2);
    CHECK(g2.g.size() == 4);
    CHECK(g2.r.carrier.base().vocabulary().contains("I"));
    const Element ca = g2.classes[g2.r.element_of(Tuple{0})];
    const Element cb = g2.classes[g2.r.element_of(Tuple{1})];
    CHECK(ca == g2.classes[g2.r.element_of(Tuple{0, 0})]);
    CHECK_FALSE(g2.g.holds(0, {ca, cb}));
    CHECK_FALSE(g2.g.holds(0, {cb, ca}));
    const Structure fixture = load_structure(ARBOR_TEST_DATA "/two_cycle_g2.json").structure;
    CHECK(find_isomorphism(g2.g, fixture).has_value());

    Rng rng(36);
    for (int round = 0; round < 30; ++round) {
      // Distinct one-element sequences are incomparable, so G_1 keeps the
      // universe and only the loops.
      const Structure s = random_digraph(rng() % 4, 0.5, rng);
      std::vector<std::pair<Element, Element>> loops;
      for (Element x = 0; x < s.size(); ++x) {
        if (s.holds(0, {x, x})) loops.emplace_back(x, x);
      }
      CHECK(find_isomorphism(ef_adjoint_G(s, 1).g, digraph(s.size(), loops)).has_value());
    }
    CHECK_THROWS_AS(ef_adjoint_R(expand_I(a), 2), MalformedInput);
  }

  TEST_CASE("transposes are mutually inverse") {
    Rng rng(37);
    int checked = 0;
    for (int round = 0; round < 60; ++round) {
      const Structure a = random_digraph(1 + rng() % 3, 0.5, rng);
      const Structure b = random_digraph(1 + rng() % 3, 0.4, rng);
      const int k = 1 + static_cast<int>(rng() % 3);
      const EFCoalgebra ra = ef_adjoint_R(a, k);
      const EFCoalgebra rb = ef_adjoint_R(b, k);
      for (Element s = 0; s < rb.size(); s += 1 + rng() % 3) {
        const ForestStructure path = chain_below(rb, s);
        CHECK(is_smooth(path));
        const Quotient lp = collapse_I(path.base());
        const auto f = find_homomorphism(lp.structure, a);
        if (!f) continue;
        ++checked;
        const ElementMap m = transpose_flat(*f, path, ra);
        CHECK(is_forest_morphism(m, path, ra.carrier));
        CHECK(transpose_sharp(m, path, ra) == *f);
        CHECK(is_embedding(m, path.base(), ra.carrier.base()) == is_embedding(*f, lp.structure, a));
      }
    }
    CHECK(checked > 30);
  }

  TEST_CASE("the transpose of a path inclusion reads off last entries") {
    const Structure a = digraph(3, {{0, 1}, {1, 2}});
    const EFCoalgebra r = ef_adjoint_R(a, 3);
    const Element s = r.element_of(Tuple{2, 0, 2});
    const auto [path, inclusion] = induced_forest(r.carrier, r.carrier.down_set(s));
    const Quotient lp = collapse_I(path.base());
    const ElementMap sharp = transpose_sharp(inclusion, path, r);
    for (Element x = 0; x < path.size(); ++x) {
      CHECK(sharp[lp.map[x]] == r.sequences[inclusion[x]].back());
    }
    CHECK(lp.structure.size() == 2);
  }

  TEST_CASE("every path of R_k is smooth") {
    Rng rng(38);
    for (int round = 0; round < 20; ++round) {
      const EFCoalgebra r = ef_adjoint_R(random_digraph(1 + rng() % 3, 0.5, rng), 3);
      for (Element s = 0; s < r.size(); ++s) CHECK(is_smooth(chain_below(r, s)));
    }
  }
}
