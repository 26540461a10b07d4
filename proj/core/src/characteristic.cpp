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

#include "arbor/characteristic.hpp"

#include <map>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

// Empty conjunctions become truth and singletons stay unwrapped.
FOPtr conjunction(std::vector<FOPtr> parts) {
  if (parts.empty()) return fo::truth();
  if (parts.size() == 1) return parts.front();
  return fo::conj(std::move(parts));
}

ModalPtr conjunction(std::vector<ModalPtr> parts) {
  if (parts.empty()) return ml::top();
  if (parts.size() == 1) return parts.front();
  return ml::conj(std::move(parts));
}

class FOBuilder {
 public:
  FOBuilder(const Structure& a, const Limits& limits) : a_(a), limits_(limits) {}

  FOPtr build(int rounds, Tuple& chosen) {
    auto key = std::make_pair(rounds, chosen);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<FOPtr> parts = diagram(chosen);
    if (rounds > 0) {
      for (Element x = 0; x < a_.size(); ++x) {
        chosen.push_back(x);
        FOPtr body = build(rounds - 1, chosen);
        chosen.pop_back();
        parts.push_back(fo::exists(var(chosen.size()), std::move(body)));
        charge(1);
      }
    }
    charge(1);
    FOPtr out = conjunction(std::move(parts));
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  // Atoms among the chosen positions that involve the newest one; the
  // others are already asserted further out.
  std::vector<FOPtr> diagram(const Tuple& chosen) {
    std::vector<FOPtr> parts;
    if (chosen.empty()) return parts;
    const std::size_t last = chosen.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
      if (chosen[i] == chosen[last]) parts.push_back(fo::equal(var(i), var(last)));
    }
    for (std::size_t r = 0; r < a_.vocabulary().size(); ++r) {
      const int arity = a_.vocabulary().arity(r);
      std::vector<std::size_t> pos(arity, 0);
      Tuple t(arity);
      // All position tuples over [0, last] that mention `last`.
      while (true) {
        bool mentions = false;
        for (int p = 0; p < arity; ++p) {
          t[p] = chosen[pos[p]];
          mentions = mentions || pos[p] == last;
        }
        if (mentions && a_.holds(r, t)) {
          std::vector<std::string> args;
          for (std::size_t p : pos) args.push_back(var(p));
          parts.push_back(fo::atom(a_.vocabulary().name(r), std::move(args)));
        }
        int p = arity - 1;
        while (p >= 0 && pos[p] == last) pos[p--] = 0;
        if (p < 0) break;
        ++pos[p];
      }
    }
    charge(parts.size());
    return parts;
  }

  void charge(std::size_t nodes) {
    built_ += nodes;
    if (built_ > limits_.formula_cap) {
      throw SizeCapExceeded("characteristic sentence exceeds the formula cap of " +
                            std::to_string(limits_.formula_cap) + " nodes");
    }
  }

  const Structure& a_;
  const Limits& limits_;
  std::size_t built_ = 0;
  std::map<std::pair<int, Tuple>, FOPtr> memo_;
};

}  // namespace

FOPtr ep_characteristic_fo(const Structure& a, int k, const Limits& limits) {
  if (k < 0) throw MalformedInput("k must be non-negative");
  FOBuilder builder(a, limits);
  Tuple chosen;
  FOPtr out = builder.build(k, chosen);
  if (tree_size(out, limits.formula_cap) > limits.formula_cap) {
    throw SizeCapExceeded("characteristic sentence exceeds the formula cap");
  }
  return out;
}

ModalPtr ep_characteristic_modal(const PointedStructure& p, int k, const Limits& limits) {
  if (k < 0) throw MalformedInput("k must be non-negative");
  const Structure& s = p.base;
  if (!s.vocabulary().is_modal()) {
    throw UnsupportedInput("modal characteristic formulas need arities at most 2");
  }
  std::map<std::pair<int, Element>, ModalPtr> memo;
  auto rec = [&](int rounds, Element x, auto&& self) -> ModalPtr {
    if (auto it = memo.find({rounds, x}); it != memo.end()) return it->second;
    std::vector<ModalPtr> parts;
    for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
      if (s.vocabulary().arity(r) == 1 && s.holds(r, {x})) {
        parts.push_back(ml::prop(s.vocabulary().name(r)));
      }
    }
    if (rounds > 0) {
      for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
        if (s.vocabulary().arity(r) != 2) continue;
        const Relation& rel = s.relation(r);
        for (std::size_t i = 0; i < rel.size(); ++i) {
          if (rel.tuple(i)[0] != x) continue;
          parts.push_back(ml::diamond(s.vocabulary().name(r), self(rounds - 1, rel.tuple(i)[1], self)));
        }
      }
    }
    ModalPtr out = conjunction(std::move(parts));
    memo.emplace(std::make_pair(rounds, x), out);
    return out;
  };
  ModalPtr out = rec(k, p.point, rec);
  if (tree_size(out, limits.formula_cap) > limits.formula_cap) {
    throw SizeCapExceeded("characteristic formula exceeds the formula cap of " +
                          std::to_string(limits.formula_cap) + " nodes");
  }
  return out;
}

}  // namespace arbor
