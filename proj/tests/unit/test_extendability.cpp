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
#include "arbor/decide.hpp"
#include "arbor/environment.hpp"
#include "arbor/equality.hpp"
#include "arbor/errors.hpp"
#include "arbor/extension.hpp"
#include "arbor/homomorphism.hpp"
#include "arbor/path_restriction.hpp"
#include "oracles.hpp"

using namespace arbor;
using namespace arbor::testing;

namespace {

const Vocabulary kR{{"R", 2}};

/// Sequences of length 1..k over n elements, as tuples.
std::vector<Tuple> sequences(std::size_t n, int k) {
  std::vector<Tuple> out;
  std::vector<Tuple> layer{Tuple{}};
  for (int len = 1; len <= k; ++len) {
    std::vector<Tuple> next;
    for (const Tuple& t : layer) {
      for (Element x = 0; x < n; ++x) {
        Tuple u = t;
        u.push_back(x);
        next.push_back(u);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Element> chain_of_sequence(const EFCoalgebra& r, const Tuple& s) {
  std::vector<Element> chain;
  for (std::size_t i = 1; i <= s.size(); ++i) chain.push_back(r.element_of(std::span(s.data(), i)));
  return chain;
}

/// Matched pairs by definition: equal chain profiles and a homomorphism
/// out of L(S_v) sending the i-th class of the chain to u[i].
std::set<std::pair<Tuple, Tuple>> brute_matched_pairs(const Structure& a, const Structure& e, int k) {
  const EFCoalgebra ra = ef_adjoint_R(a, k);
  const EFCoalgebra re = ef_adjoint_R(e, k);
  std::set<std::pair<Tuple, Tuple>> out;
  std::vector<Tuple> us = sequences(a.size(), k);
  std::vector<Tuple> vs = sequences(e.size(), k);
  us.insert(us.begin(), Tuple{});
  vs.insert(vs.begin(), Tuple{});
  for (const Tuple& v : vs) {
    const PathEmbedding m{chain_of_sequence(re, v)};
    const Corestriction s = corestriction(re.carrier, m);
    const Quotient l = collapse_I(s.structure.base());
    for (const Tuple& u : us) {
      if (u.size() != v.size()) continue;
      if (!brute_chain_match(ra.carrier, chain_of_sequence(ra, u), re.carrier, m.chain)) continue;
      std::vector<std::optional<Element>> fixed(l.structure.size());
      bool consistent = true;
      for (std::size_t i = 0; i < u.size(); ++i) {
        auto& slot = fixed[l.map[s.co.chain[i]]];
        if (slot && *slot != u[i]) consistent = false;
        slot = u[i];
      }
      if (consistent && brute_homomorphism_exists(l.structure, a, fixed)) out.insert({u, v});
    }
  }
  return out;
}

ForestStructure chain_below(const EFCoalgebra& r, const Tuple& s) {
  return induced_forest(r.carrier, r.carrier.down_set(r.element_of(s))).first;
}

}  // namespace

TEST_SUITE("extendability") {
  TEST_CASE("default environment") {
    const EnvironmentFamily one = default_environment(kR, 1, 1);
    REQUIRE(one.size() == 2);
    std::set<std::size_t> loops;
    for (const auto& m : one.members) {
      CHECK(m.structure.size() == 1);
      loops.insert(m.structure.relation(0).size());
    }
    CHECK(loops == std::set<std::size_t>{0, 1});
    CHECK(default_environment(kR, 2, 0).size() == 0);

    const EnvironmentFamily env = default_environment(kR, 2, 3);
    CHECK(env.size() > 2);
    for (std::size_t i = 0; i < env.size(); ++i) {
      const auto& m = env.members[i];
      CHECK(m.origin.height() <= 2);
      CHECK(m.origin.size() <= 3);
      CHECK(check_condition_E(m.origin));
      CHECK(find_isomorphism(collapse_I(m.origin.base()).structure, m.structure).has_value());
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(find_isomorphism(m.structure, env.members[j].structure).has_value());
      }
    }
    CHECK_THROWS_AS(default_environment(Vocabulary{{"I", 2}}, 2, 2), MalformedInput);
    CHECK_THROWS_AS(default_environment(kR, 0, 2), MalformedInput);
    CHECK_THROWS_AS(default_environment(kR, 2, 3, Limits{.enumeration_cap = 10}), SizeCapExceeded);
  }

  TEST_CASE("matched pairs") {
    const Structure a = two_cycle();
    SUBCASE("diagonal pairs match when e = a") {
      const auto pairs = find_matched_pairs(a, a, 2);
      std::set<std::pair<Tuple, Tuple>> found;
      for (const auto& p : pairs) found.insert({p.u, p.v});
      CHECK(found.count({Tuple{}, Tuple{}}) == 1);
      for (const Tuple& s : sequences(a.size(), 2)) CHECK(found.count({s, s}) == 1);
    }
    SUBCASE("the loop matches nothing in the 2-cycle") {
      CHECK(find_matched_pairs(a, single_loop(), 2).empty());
    }
    SUBCASE("the root pair matches exactly when G_k e maps to a") {
      Rng rng(61);
      for (int round = 0; round < 30; ++round) {
        const Structure e = random_digraph(1 + rng() % 2, 0.4, rng);
        const auto pairs = find_matched_pairs(a, e, 2);
        const bool root = std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.u.empty(); });
        CHECK(root == find_homomorphism(ef_adjoint_G(e, 2).g, a).has_value());
      }
    }
  }

  TEST_CASE("matched pairs agree with the definition") {
    Rng rng(62);
    for (int round = 0; round < 40; ++round) {
      const Structure a = random_digraph(1 + rng() % 2, 0.5, rng);
      const Structure e = random_digraph(1 + rng() % 2, 0.5, rng);
      const int k = 1 + static_cast<int>(rng() % 2);
      const auto pairs = find_matched_pairs(a, e, k);
      std::set<std::pair<Tuple, Tuple>> found;
      const EFCoalgebra re = ef_adjoint_R(e, k);
      for (const auto& p : pairs) {
        found.insert({p.u, p.v});
        const Corestriction s = corestriction(re.carrier, PathEmbedding{chain_of_sequence(re, p.v)});
        const Quotient l = collapse_I(s.structure.base());
        CHECK(is_homomorphism(p.witness, l.structure, a));
        for (std::size_t i = 0; i < p.u.size(); ++i) CHECK(p.witness[l.map[s.co.chain[i]]] == p.u[i]);
      }
      CHECK(found == brute_matched_pairs(a, e, k));
    }
  }

  TEST_CASE("one extension step") {
    const Structure a = two_cycle();
    SUBCASE("an empty environment changes nothing") {
      const Extension x = extend_once(a, 2, explicit_environment({}, 2));
      CHECK(x.b == a);
      CHECK(x.section == identity_map(2));
      CHECK(x.legs == 0);
    }
    SUBCASE("a copy of a glues back onto itself") {
      const Extension x = extend_once(a, 1, explicit_environment({a}, 1));
      CHECK(verify_section(x.section, x.retraction, a, x.b));
      CHECK(decide_arrow(x.b, a, 1));
    }
    SUBCASE("sections are certified on random inputs") {
      Rng rng(63);
      const EnvironmentFamily env = default_environment(kR, 2, 2);
      for (int round = 0; round < 10; ++round) {
        const Structure s = random_digraph(1 + rng() % 3, 0.4, rng);
        const Extension x = extend_once(s, 2, env);
        CHECK(verify_section(x.section, x.retraction, s, x.b));
        CHECK(is_embedding(x.section, s, x.b));
        CHECK(x.b.size() >= s.size());
      }
    }
    SUBCASE("size cap") {
      CHECK_THROWS_AS(extend_once(a, 2, default_environment(kR, 2, 3), Limits{.carrier_cap = 20}),
                      SizeCapExceeded);
    }
  }

  TEST_CASE("iterated extensions") {
    const Structure a = digraph(2, {{0, 1}});
    const EnvironmentFamily env = default_environment(kR, 1, 2);
    CHECK(extend_iterated(a, 1, env, 0).empty());
    const auto chain = extend_iterated(a, 1, env, 2);
    REQUIRE(chain.size() == 2);
    const Structure* previous = &a;
    for (const auto& step : chain) {
      CHECK(step.step.b.size() >= previous->size());
      CHECK(verify_section(step.step.section, step.step.retraction, *previous, step.step.b));
      CHECK(verify_section(step.composite, step.composite_retraction, a, step.step.b));
      CHECK(decide_arrow(a, step.step.b, 1));
      CHECK(decide_arrow(step.step.b, a, 1));
      previous = &step.step.b;
    }
  }

  TEST_CASE("relative extendability") {
    const Structure a = two_cycle();
    const EnvironmentFamily env = default_environment(kR, 2, 3);
    SUBCASE("the extension is extendable relative to its section") {
      const Extension x = extend_once(a, 2, env);
      const RelativeReport r = check_relative_extendability(x.section, a, x.b, 2, env);
      CHECK(r.holds);
      CHECK(r.matched_pairs > 0);
      CHECK(r.extensions_checked >= r.matched_pairs);
    }
    SUBCASE("the identity on the 2-cycle is not") {
      const RelativeReport r = check_relative_extendability(identity_map(2), a, a, 2, env);
      CHECK_FALSE(r.holds);
      REQUIRE(r.counterexample);
      CHECK(r.counterexample->n_prime.size() > r.counterexample->n.size());
    }
    SUBCASE("the loop is extendable at one round but not at two") {
      const Structure loop = single_loop();
      CHECK(check_relative_extendability({0}, loop, loop, 1, default_environment(kR, 1, 3)).holds);
      // R_2 of the loop has one length-2 path, with its entries I-related;
      // members with a second element need a path whose entries are not.
      const RelativeReport r = check_relative_extendability({0}, loop, loop, 2, env);
      CHECK_FALSE(r.holds);
      REQUIRE(r.counterexample);
      const Tuple& np = r.counterexample->n_prime;
      REQUIRE(np.size() == 2);
      CHECK(np[0] != np[1]);
    }
    SUBCASE("non-homomorphisms are rejected") {
      CHECK_THROWS_AS(check_relative_extendability({0}, single_loop(), a, 2, env), MalformedInput);
    }
  }

  TEST_CASE("extendable structures are equivalent exactly when arrows go both ways") {
    const EnvironmentFamily env = default_environment(kR, 2, 3);
    std::vector<Structure> extendable;
    for (const auto& s : digraphs_up_to_iso(2)) {
      if (check_relative_extendability(identity_map(s.size()), s, s, 2, env).holds) extendable.push_back(s);
    }
    CHECK(extendable.size() >= 2);
    for (const auto& x : extendable) {
      for (const auto& y : extendable) {
        CHECK((decide_arrow(x, y, 2) && decide_arrow(y, x, 2)) == decide_equiv(x, y, 2));
      }
    }
  }

  TEST_CASE("path restriction") {
    const Structure base = digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    const EFCoalgebra r = ef_adjoint_R(base, 3);
    const ForestStructure q = chain_below(r, Tuple{0, 1, 0});
    const Quotient lq = collapse_I(q.base());
    REQUIRE(lq.structure.size() == 2);
    CHECK(is_chain(q));
    CHECK(is_smooth(q));
    SUBCASE("an isomorphism restricts to the whole chain") {
      const PathRestriction p = path_restrict(q, lq.structure, identity_map(2));
      CHECK(p.path.size() == q.size());
      CHECK(is_embedding(p.iso, collapse_I(p.path.base()).structure, lq.structure));
    }
    SUBCASE("a single class restricts to its members") {
      const Element c = lq.map[0];
      auto [one, j] = induced_substructure(lq.structure, {c});
      const PathRestriction p = path_restrict(q, one, j);
      CHECK(p.path.size() == 2);
      CHECK(is_chain(p.path));
      for (Element x : p.inclusion) CHECK(lq.map[x] == c);
    }
    SUBCASE("down-closed sub-chains factor and pull back") {
      const ForestStructure big = chain_below(r, Tuple{0, 1, 2});
      const Quotient lb = collapse_I(big.base());
      REQUIRE(lb.structure.size() == 3);
      // a = the classes of the first two positions.
      auto [a, j] = induced_substructure(lb.structure, {lb.map[0], lb.map[1]});
      const PathRestriction p = path_restrict(big, a, j);
      const Quotient lp = collapse_I(p.path.base());
      for (std::size_t len = 0; len <= big.size(); ++len) {
        std::set<Element> classes_of_prefix;
        for (Element x = 0; x < len; ++x) classes_of_prefix.insert(lb.map[x]);
        std::set<Element> pulled_back;
        for (Element x = 0; x < a.size(); ++x) {
          if (classes_of_prefix.count(j[x])) pulled_back.insert(x);
        }
        std::set<Element> restricted;
        for (Element x = 0; x < p.path.size(); ++x) {
          if (p.inclusion[x] < len) restricted.insert(p.iso[lp.map[x]]);
        }
        CHECK(pulled_back == restricted);
        if (len <= 2) {
          for (Element x = 0; x < len; ++x) {
            CHECK(std::find(p.inclusion.begin(), p.inclusion.end(), x) != p.inclusion.end());
          }
        }
      }
    }
    SUBCASE("errors") {
      const ForestStructure cherry(expand_I(digraph(3, {})), {kNoParent, 0, 0});
      CHECK_THROWS_AS(path_restrict(cherry, digraph(0, {}), {}), MalformedInput);
      const Structure bad = make_structure(Vocabulary{{"I", 2}, {"R", 2}}, {"a", "b"}, {{"I", {"a", "b"}}});
      CHECK_FALSE(is_smooth(ForestStructure(bad, {kNoParent, 0})));
      CHECK_THROWS_AS(path_restrict(ForestStructure(bad, {kNoParent, 0}), digraph(0, {}), {}), UnsupportedInput);
      CHECK_THROWS_AS(path_restrict(q, lq.structure, {0, 0}), MalformedInput);
    }
  }
}
