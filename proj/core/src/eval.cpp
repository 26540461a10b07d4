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

#include "arbor/eval.hpp"

#include <unordered_map>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

class FOEvaluator {
 public:
  explicit FOEvaluator(const Structure& a) : a_(a) {}

  bool eval(const FOFormula& f, std::vector<std::pair<std::string_view, Element>>& env) {
    using K = FOFormula::Kind;
    switch (f.kind) {
      case K::True: return true;
      case K::False: return false;
      case K::Equal: return lookup(f.vars[0], env) == lookup(f.vars[1], env);
      case K::Atom: {
        const std::size_t r = relation(f);
        tuple_.clear();
        for (const auto& v : f.vars) tuple_.push_back(lookup(v, env));
        return a_.holds(r, tuple_);
      }
      case K::Not: return !eval(*f.children[0], env);
      case K::And:
        for (const auto& c : f.children) {
          if (!eval(*c, env)) return false;
        }
        return true;
      case K::Or:
        for (const auto& c : f.children) {
          if (eval(*c, env)) return true;
        }
        return false;
      case K::Implies: return !eval(*f.children[0], env) || eval(*f.children[1], env);
      case K::Exists:
      case K::Forall: {
        const bool want = f.kind == K::Exists;
        bool result = !want;
        env.emplace_back(f.vars[0], 0);
        for (Element x = 0; x < a_.size(); ++x) {
          env.back().second = x;
          if (eval(*f.children[0], env) == want) {
            result = want;
            break;
          }
        }
        env.pop_back();
        return result;
      }
    }
    return false;
  }

 private:
  Element lookup(std::string_view var, const std::vector<std::pair<std::string_view, Element>>& env) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == var) return it->second;
    }
    throw MalformedInput("variable '" + std::string(var) + "' is not assigned");
  }

  std::size_t relation(const FOFormula& f) {
    if (auto it = relations_.find(&f); it != relations_.end()) return it->second;
    const auto r = a_.vocabulary().find(f.symbol);
    if (!r) throw MalformedInput("unknown relation symbol '" + f.symbol + "'");
    if (static_cast<std::size_t>(a_.vocabulary().arity(*r)) != f.vars.size()) {
      throw MalformedInput("relation '" + f.symbol + "' used with the wrong number of arguments");
    }
    relations_.emplace(&f, *r);
    return *r;
  }

  const Structure& a_;
  Tuple tuple_;
  std::unordered_map<const FOFormula*, std::size_t> relations_;
};

}  // namespace

bool eval_fo(const FOPtr& f, const Structure& a, const Assignment& assignment) {
  std::vector<std::pair<std::string_view, Element>> env;
  for (const auto& [name, value] : assignment) {
    if (value >= a.size()) throw MalformedInput("assignment value outside the universe");
    env.emplace_back(name, value);
  }
  FOEvaluator evaluator(a);
  return evaluator.eval(*f, env);
}

std::vector<bool> eval_modal_everywhere(const ModalPtr& f, const Structure& s) {
  using K = ModalFormula::Kind;
  const std::size_t n = s.size();
  std::unordered_map<const ModalFormula*, std::vector<bool>> memo;
  auto symbol = [&](const std::string& name, int arity) {
    const auto r = s.vocabulary().find(name);
    if (!r) throw MalformedInput("unknown symbol '" + name + "'");
    if (s.vocabulary().arity(*r) != arity) {
      throw MalformedInput("symbol '" + name + "' must have arity " + std::to_string(arity));
    }
    return *r;
  };
  auto rec = [&](const ModalPtr& g, auto&& self) -> const std::vector<bool>& {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::vector<bool> out(n, false);
    switch (g->kind) {
      case K::Top: out.assign(n, true); break;
      case K::Bottom: break;
      case K::Prop: {
        const std::size_t r = symbol(g->symbol, 1);
        for (Element x = 0; x < n; ++x) out[x] = s.holds(r, {x});
        break;
      }
      case K::Not: {
        const auto& sub = self(g->children[0], self);
        for (Element x = 0; x < n; ++x) out[x] = !sub[x];
        break;
      }
      case K::And:
      case K::Or: {
        const bool is_and = g->kind == K::And;
        out.assign(n, is_and);
        for (const auto& c : g->children) {
          const std::vector<bool> sub = self(c, self);
          for (Element x = 0; x < n; ++x) out[x] = is_and ? (out[x] && sub[x]) : (out[x] || sub[x]);
        }
        break;
      }
      case K::Diamond:
      case K::Box: {
        const std::size_t r = symbol(g->symbol, 2);
        const std::vector<bool> sub = self(g->children[0], self);
        const int need = g->grade.value_or(1);
        const bool box = g->kind == K::Box;
        // Diamond: at least `need` successors satisfy the body. Box: fewer
        // than `need` successors falsify it.
        std::vector<int> count(n, 0);
        const Relation& rel = s.relation(r);
        for (std::size_t i = 0; i < rel.size(); ++i) {
          const Element from = rel.tuple(i)[0];
          const Element to = rel.tuple(i)[1];
          if (sub[to] != box) ++count[from];
        }
        for (Element x = 0; x < n; ++x) out[x] = box ? count[x] < need : count[x] >= need;
        break;
      }
    }
    return memo.emplace(g.get(), std::move(out)).first->second;
  };
  return rec(f, rec);
}

bool eval_modal(const ModalPtr& f, const PointedStructure& p) {
  return eval_modal_everywhere(f, p.base)[p.point];
}

}  // namespace arbor
