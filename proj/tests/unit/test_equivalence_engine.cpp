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
#include "arbor/back_and_forth.hpp"
#include "arbor/decide.hpp"
#include "arbor/ef_comonad.hpp"
#include "arbor/errors.hpp"
#include "arbor/games.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/modal_comonad.hpp"
#include "oracles.hpp"

using namespace arbor;
using namespace arbor::testing;

namespace {

const Vocabulary kKripke{{"R", 2}, {"p", 1}};

PointedStructure p_successors(int count) {
  std::vector<std::string> names{"w", "x", "y"};
  names.resize(1 + count);
  std::vector<std::pair<std::string, std::vector<std::string>>> tuples;
  for (int i = 1; i <= count; ++i) {
    tuples.push_back({"R", {"w", names[i]}});
    tuples.push_back({"p", {names[i]}});
  }
  return PointedStructure(make_structure(kKripke, names, tuples), 0);
}

/// Bounded zig-zag recursion straight from the definition.
bool brute_modal_bisim(const PointedStructure& p, const PointedStructure& q, int k) {
  const Structure& a = p.base;
  const Structure& b = q.base;
  std::function<bool(Element, Element, int)> go = [&](Element x, Element y, int rounds) {
    for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
      if (a.vocabulary().arity(r) == 1 && a.holds(r, {x}) != b.holds(r, {y})) return false;
    }
    if (rounds == 0) return true;
    for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
      if (a.vocabulary().arity(r) != 2) continue;
      for (Element x2 = 0; x2 < a.size(); ++x2) {
        if (!a.holds(r, {x, x2})) continue;
        bool found = false;
        for (Element y2 = 0; y2 < b.size() && !found; ++y2) {
          found = b.holds(r, {y, y2}) && go(x2, y2, rounds - 1);
        }
        if (!found) return false;
      }
      for (Element y2 = 0; y2 < b.size(); ++y2) {
        if (!b.holds(r, {y, y2})) continue;
        bool found = false;
        for (Element x2 = 0; x2 < a.size() && !found; ++x2) {
          found = a.holds(r, {x, x2}) && go(x2, y2, rounds - 1);
        }
        if (!found) return false;
      }
    }
    return true;
  };
  return go(p.point, q.point, k);
}

}  // namespace

TEST_SUITE("equivalence-engine") {
  TEST_CASE("back-and-forth systems") {
    const Structure a = two_cycle();
    const EFCoalgebra r = ef_adjoint_R(a, 2);
    SUBCASE("a forest is back-and-forth equivalent to itself") {
      const auto system = back_and_forth(r.carrier, r.carrier);
      REQUIRE(system);
      CHECK(is_back_and_forth_system(*system, r.carrier, r.carrier));
      for (Element e = 0; e < r.size(); ++e) {
        const PathEmbedding m = path_to(r.carrier, e);
        const bool diagonal = std::any_of(system->pairs.begin(), system->pairs.end(),
                                          [&](const auto& pr) { return pr.x == m && pr.y == m; });
        CHECK(diagonal);
      }
    }
    SUBCASE("the 2-cycle and its companion are not equivalent") {
      const EFCoalgebra rg = ef_adjoint_R(ef_adjoint_G(a, 2).g, 2);
      CHECK_FALSE(back_and_forth(r.carrier, rg.carrier).has_value());
    }
    SUBCASE("unravellings of the 2-cycle and the loop agree") {
      const ModalCoalgebra x = modal_build(PointedStructure(a, 0), 3);
      const ModalCoalgebra y = modal_build(PointedStructure(single_loop(), 0), 3);
      const auto system = back_and_forth(x.carrier, y.carrier);
      REQUIRE(system);
      CHECK(is_back_and_forth_system(*system, x.carrier, y.carrier));
    }
  }

  TEST_CASE("bisimilar agrees with brute-force deletion on random forests") {
    Rng rng(41);
    const Vocabulary v{{"R", 2}, {"P", 1}};
    int positive = 0;
    for (int round = 0; round < 400; ++round) {
      const ForestStructure x = random_forest(v, 1 + rng() % 5, 3, 0.35, rng);
      const ForestStructure y = random_forest(v, 1 + rng() % 5, 3, 0.35, rng);
      const bool expected = brute_bisimilar(x, y);
      REQUIRE(bisimilar(x, y) == expected);
      const auto system = back_and_forth(x, y);
      REQUIRE(system.has_value() == expected);
      if (system) {
        ++positive;
        CHECK(is_back_and_forth_system(*system, x, y));
      }
    }
    CHECK(positive > 5);
  }

  TEST_CASE("arrow examples") {
    const Structure a = two_cycle();
    const Structure loop = single_loop();
    CHECK(decide_arrow(a, loop, 2));
    CHECK_FALSE(decide_arrow(loop, a, 2));
    CHECK(decide_arrow(a, a, 3));
    const auto w = arrow_witness(a, loop, 2);
    REQUIRE(w);
    CHECK(is_homomorphism(w->map, w->source, loop));
    CHECK_THROWS_AS(decide_arrow(a, make_structure(Vocabulary{{"S", 2}}, {"x"}, {}), 2), MalformedInput);
  }

  TEST_CASE("equivalence examples") {
    const Structure a = two_cycle();
    CHECK_FALSE(decide_equiv(a, ef_adjoint_G(a, 2).g, 2));
    CHECK_FALSE(decide_equiv(a, ef_adjoint_G(a, 3).g, 3));
    CHECK(decide_equiv(a, ef_adjoint_G(a, 1).g, 1));
    for (int k = 1; k <= 4; ++k) {
      CHECK(decide_equiv(PointedStructure(a, 0), PointedStructure(single_loop(), 0), k));
    }
    CHECK_FALSE(decide_equiv(digraph(1, {}), digraph(2, {}), 2));
    CHECK(decide_equiv(digraph(1, {}), digraph(2, {}), 1));
  }

  TEST_CASE("isomorphism examples") {
    CHECK(decide_iso(two_cycle(), two_cycle(), 2));
    CHECK_FALSE(decide_iso(p_successors(2), p_successors(1), 1));
    for (int k = 1; k <= 4; ++k) {
      CHECK(decide_iso(PointedStructure(two_cycle(), 0), PointedStructure(single_loop(), 0), k));
    }
  }

  TEST_CASE("game oracle examples") {
    CHECK(oracle_ef_game(two_cycle(), two_cycle(), 3));
    CHECK(oracle_ef_game(digraph(1, {}), digraph(2, {}), 1));
    CHECK_FALSE(oracle_ef_game(digraph(1, {}), digraph(2, {}), 2));
    CHECK(oracle_ep_game(digraph(3, {{0, 1}}), two_cycle(), 3));
    CHECK_FALSE(oracle_ep_game(single_loop(), two_cycle(), 1));
    CHECK(oracle_bisim_game(p_successors(2), p_successors(2), 2));
    CHECK(oracle_graded_bisim(p_successors(2), p_successors(2), 2));
    CHECK(oracle_bisim_game(p_successors(2), p_successors(1), 1));
    CHECK_FALSE(oracle_graded_bisim(p_successors(2), p_successors(1), 1));
    for (int k = 1; k <= 4; ++k) {
      const PointedStructure cycle(two_cycle(), 0), loop(single_loop(), 0);
      CHECK(oracle_bisim_game(cycle, loop, k));
      CHECK(oracle_graded_bisim(cycle, loop, k));
    }
    const PointedStructure ternary(make_structure(Vocabulary{{"T", 3}}, {"a"}, {}), 0);
    CHECK_THROWS_AS(oracle_bisim_game(ternary, ternary, 1), UnsupportedInput);
  }

  TEST_CASE("library game oracles agree with the naive games") {
    Rng rng(42);
    for (int round = 0; round < 150; ++round) {
      const Structure a = random_digraph(1 + rng() % 3, 0.4, rng);
      const Structure b = random_digraph(1 + rng() % 3, 0.4, rng);
      const int k = 1 + static_cast<int>(rng() % 3);
      CHECK(oracle_ef_game(a, b, k) == brute_ef_game(a, b, k));
      CHECK(oracle_ep_game(a, b, k) == brute_ep_game(a, b, k));
    }
  }

  TEST_CASE("comonadic decisions agree with the games on structures up to two elements") {
    const auto all = digraphs_up_to_iso(2);
    for (int k = 1; k <= 3; ++k) {
      for (const auto& a : all) {
        for (const auto& b : all) {
          REQUIRE(decide_equiv(a, b, k) == brute_ef_game(a, b, k));
          REQUIRE(decide_arrow(a, b, k) == brute_ep_game(a, b, k));
        }
      }
    }
  }

  TEST_CASE("modal decisions agree with the zig-zag recursion") {
    Rng rng(43);
    int equivalent = 0;
    for (int round = 0; round < 300; ++round) {
      const PointedStructure p = random_kripke(1 + rng() % 4, 0.4, rng);
      const PointedStructure q = random_kripke(1 + rng() % 4, 0.4, rng);
      const int k = 1 + static_cast<int>(rng() % 3);
      const bool expected = brute_modal_bisim(p, q, k);
      equivalent += expected;
      REQUIRE(decide_equiv(p, q, k) == expected);
      REQUIRE(oracle_bisim_game(p, q, k) == expected);
      if (decide_iso(p, q, k)) CHECK(oracle_graded_bisim(p, q, k));
      if (oracle_graded_bisim(p, q, k)) CHECK(expected);
    }
    CHECK(equivalent > 20);
  }

  TEST_CASE("inclusion chain, morphisms and companions") {
    Rng rng(44);
    for (int round = 0; round < 120; ++round) {
      const Structure a = random_digraph(1 + rng() % 3, 0.4, rng);
      const Structure b = random_digraph(1 + rng() % 3, 0.4, rng);
      const int k = 1 + static_cast<int>(rng() % 2);
      const bool iso = decide_iso(a, b, k);
      const bool equiv = decide_equiv(a, b, k);
      const bool both = decide_arrow(a, b, k) && decide_arrow(b, a, k);
      if (iso) CHECK(equiv);
      if (equiv) CHECK(both);
      if (find_homomorphism(a, b)) CHECK(decide_arrow(a, b, k));
      const Structure g = ef_adjoint_G(a, k).g;
      CHECK(decide_arrow(a, g, k));
      CHECK(decide_arrow(g, a, k));
    }
  }

  TEST_CASE("equivalence is an equivalence relation on a sample") {
    Rng rng(45);
    std::vector<Structure> sample;
    for (int i = 0; i < 14; ++i) sample.push_back(random_digraph(1 + rng() % 3, 0.5, rng));
    const std::size_t n = sample.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) eq[i][j] = decide_equiv(sample[i], sample[j], 2);
    }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(eq[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(eq[i][j] == eq[j][i]);
        for (std::size_t l = 0; l < n; ++l) {
          if (eq[i][j] && eq[j][l]) CHECK(eq[i][l]);
        }
      }
    }
  }

  TEST_CASE("size caps surface as errors") {
    const Structure big = complete_graph(6);
    CHECK_THROWS_AS(decide_equiv(big, big, 3, Limits{.carrier_cap = 100}), SizeCapExceeded);
  }
}
