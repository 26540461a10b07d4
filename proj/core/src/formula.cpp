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

#include "arbor/formula.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <unordered_map>

#include "arbor/errors.hpp"

namespace arbor {

namespace fo {
namespace {
FOPtr make(FOFormula::Kind kind, std::string symbol, std::vector<std::string> vars,
           std::vector<FOPtr> children) {
  return std::make_shared<const FOFormula>(
      FOFormula{kind, std::move(symbol), std::move(vars), std::move(children)});
}
}  // namespace

FOPtr truth() { return make(FOFormula::Kind::True, {}, {}, {}); }
FOPtr falsity() { return make(FOFormula::Kind::False, {}, {}, {}); }
FOPtr equal(std::string x, std::string y) {
  return make(FOFormula::Kind::Equal, {}, {std::move(x), std::move(y)}, {});
}
FOPtr atom(std::string relation, std::vector<std::string> args) {
  return make(FOFormula::Kind::Atom, std::move(relation), std::move(args), {});
}
FOPtr negate(FOPtr f) { return make(FOFormula::Kind::Not, {}, {}, {std::move(f)}); }
FOPtr conj(std::vector<FOPtr> parts) { return make(FOFormula::Kind::And, {}, {}, std::move(parts)); }
FOPtr disj(std::vector<FOPtr> parts) { return make(FOFormula::Kind::Or, {}, {}, std::move(parts)); }
FOPtr implies(FOPtr lhs, FOPtr rhs) {
  return make(FOFormula::Kind::Implies, {}, {}, {std::move(lhs), std::move(rhs)});
}
FOPtr exists(std::string var, FOPtr body) {
  return make(FOFormula::Kind::Exists, {}, {std::move(var)}, {std::move(body)});
}
FOPtr forall(std::string var, FOPtr body) {
  return make(FOFormula::Kind::Forall, {}, {std::move(var)}, {std::move(body)});
}
}  // namespace fo

namespace ml {
namespace {
ModalPtr make(ModalFormula::Kind kind, std::string symbol, std::optional<int> grade,
              std::vector<ModalPtr> children) {
  return std::make_shared<const ModalFormula>(
      ModalFormula{kind, std::move(symbol), grade, std::move(children)});
}
}  // namespace

ModalPtr top() { return make(ModalFormula::Kind::Top, {}, {}, {}); }
ModalPtr bottom() { return make(ModalFormula::Kind::Bottom, {}, {}, {}); }
ModalPtr prop(std::string p) { return make(ModalFormula::Kind::Prop, std::move(p), {}, {}); }
ModalPtr negate(ModalPtr f) { return make(ModalFormula::Kind::Not, {}, {}, {std::move(f)}); }
ModalPtr conj(std::vector<ModalPtr> parts) {
  return make(ModalFormula::Kind::And, {}, {}, std::move(parts));
}
ModalPtr disj(std::vector<ModalPtr> parts) {
  return make(ModalFormula::Kind::Or, {}, {}, std::move(parts));
}
ModalPtr diamond(std::string relation, ModalPtr body, std::optional<int> grade) {
  if (grade && *grade < 0) throw MalformedInput("modal grades must be non-negative");
  return make(ModalFormula::Kind::Diamond, std::move(relation), grade, {std::move(body)});
}
ModalPtr box(std::string relation, ModalPtr body, std::optional<int> grade) {
  if (grade && *grade < 0) throw MalformedInput("modal grades must be non-negative");
  return make(ModalFormula::Kind::Box, std::move(relation), grade, {std::move(body)});
}
}  // namespace ml

namespace {

constexpr std::array<std::string_view, 14> kKeywords{
    "and", "or", "not", "implies", "forall", "exists", "=",
    "dia", "box", "prop", "true", "false", "top", "bot"};

// S-expression reader: a node is either an atom token or a list.
struct SExpr {
  std::string atom;
  std::vector<SExpr> list;
  bool is_list = false;
};

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')') {
      flush();
      tokens.emplace_back(1, c);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

SExpr read(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw MalformedInput("unexpected end of formula");
  const std::string& t = tokens[pos++];
  if (t == ")") throw MalformedInput("unexpected ')'");
  if (t != "(") return SExpr{t, {}, false};
  SExpr node;
  node.is_list = true;
  while (true) {
    if (pos >= tokens.size()) throw MalformedInput("missing ')'");
    if (tokens[pos] == ")") {
      ++pos;
      break;
    }
    node.list.push_back(read(tokens, pos));
  }
  if (node.list.empty()) throw MalformedInput("empty list '()'");
  if (node.list[0].is_list) throw MalformedInput("list head must be an operator");
  return node;
}

SExpr read_all(std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text);
  std::size_t pos = 0;
  SExpr e = read(tokens, pos);
  if (pos != tokens.size()) throw MalformedInput("trailing text after formula");
  return e;
}

const std::string& identifier(const SExpr& e, const char* what) {
  if (e.is_list || is_keyword(e.atom)) {
    throw MalformedInput(std::string("expected ") + what + " name");
  }
  return e.atom;
}

std::optional<int> as_grade(const SExpr& e) {
  if (e.is_list || e.atom.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), value);
  if (ec != std::errc() || ptr != e.atom.data() + e.atom.size()) return std::nullopt;
  if (value < 0) throw MalformedInput("modal grades must be non-negative");
  return value;
}

FOPtr build_fo(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "true") return fo::truth();
    if (e.atom == "false") return fo::falsity();
    throw MalformedInput("unexpected token '" + e.atom + "'");
  }
  const std::string& head = e.list[0].atom;
  const std::size_t n = e.list.size() - 1;
  auto arg = [&](std::size_t i) { return build_fo(e.list[i]); };
  if (head == "=") {
    if (n != 2) throw MalformedInput("'=' takes two variables");
    return fo::equal(identifier(e.list[1], "variable"), identifier(e.list[2], "variable"));
  }
  if (head == "not") {
    if (n != 1) throw MalformedInput("'not' takes one argument");
    return fo::negate(arg(1));
  }
  if (head == "and" || head == "or") {
    std::vector<FOPtr> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(arg(i));
    return head == "and" ? fo::conj(std::move(parts)) : fo::disj(std::move(parts));
  }
  if (head == "implies") {
    if (n != 2) throw MalformedInput("'implies' takes two arguments");
    return fo::implies(arg(1), arg(2));
  }
  if (head == "exists" || head == "forall") {
    if (n != 2) throw MalformedInput("'" + head + "' takes a variable and a body");
    std::string var = identifier(e.list[1], "variable");
    return head == "exists" ? fo::exists(std::move(var), arg(2)) : fo::forall(std::move(var), arg(2));
  }
  if (is_keyword(head)) throw MalformedInput("'" + head + "' is not a first-order operator");
  if (n == 0) throw MalformedInput("relation atom '" + head + "' needs arguments");
  std::vector<std::string> args;
  for (std::size_t i = 1; i <= n; ++i) args.push_back(identifier(e.list[i], "variable"));
  return fo::atom(head, std::move(args));
}

ModalPtr build_modal(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "top") return ml::top();
    if (e.atom == "bot") return ml::bottom();
    throw MalformedInput("unexpected token '" + e.atom + "'");
  }
  const std::string& head = e.list[0].atom;
  const std::size_t n = e.list.size() - 1;
  if (head == "prop") {
    if (n != 1) throw MalformedInput("'prop' takes one name");
    return ml::prop(identifier(e.list[1], "proposition"));
  }
  if (head == "not") {
    if (n != 1) throw MalformedInput("'not' takes one argument");
    return ml::negate(build_modal(e.list[1]));
  }
  if (head == "and" || head == "or") {
    std::vector<ModalPtr> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(build_modal(e.list[i]));
    return head == "and" ? ml::conj(std::move(parts)) : ml::disj(std::move(parts));
  }
  if (head == "dia" || head == "box") {
    if (n != 2 && n != 3) throw MalformedInput("'" + head + "' takes a relation, optional grade, body");
    std::string rel = identifier(e.list[1], "relation");
    std::optional<int> grade;
    if (n == 3) {
      grade = as_grade(e.list[2]);
      if (!grade) throw MalformedInput("grade must be a non-negative integer");
    }
    ModalPtr body = build_modal(e.list[n]);
    return head == "dia" ? ml::diamond(std::move(rel), std::move(body), grade)
                         : ml::box(std::move(rel), std::move(body), grade);
  }
  throw MalformedInput("'" + head + "' is not a modal operator");
}

void print(const FOPtr& f, std::string& out) {
  using K = FOFormula::Kind;
  switch (f->kind) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Equal: out += "(= " + f->vars[0] + " " + f->vars[1] + ")"; return;
    case K::Atom:
      out += "(" + f->symbol;
      for (const auto& v : f->vars) out += " " + v;
      out += ")";
      return;
    case K::Not: out += "(not "; break;
    case K::And: out += "(and"; break;
    case K::Or: out += "(or"; break;
    case K::Implies: out += "(implies "; break;
    case K::Exists: out += "(exists " + f->vars[0] + " "; break;
    case K::Forall: out += "(forall " + f->vars[0] + " "; break;
  }
  const bool list = f->kind == K::And || f->kind == K::Or;
  for (std::size_t i = 0; i < f->children.size(); ++i) {
    if (list || i > 0) out += " ";
    print(f->children[i], out);
  }
  out += ")";
}

void print(const ModalPtr& f, std::string& out) {
  using K = ModalFormula::Kind;
  switch (f->kind) {
    case K::Top: out += "top"; return;
    case K::Bottom: out += "bot"; return;
    case K::Prop: out += "(prop " + f->symbol + ")"; return;
    case K::Not: out += "(not "; break;
    case K::And: out += "(and"; break;
    case K::Or: out += "(or"; break;
    case K::Diamond:
    case K::Box:
      out += f->kind == K::Diamond ? "(dia " : "(box ";
      out += f->symbol + " ";
      if (f->grade) out += std::to_string(*f->grade) + " ";
      break;
  }
  const bool list = f->kind == K::And || f->kind == K::Or;
  for (std::size_t i = 0; i < f->children.size(); ++i) {
    if (list || i > 0) out += " ";
    print(f->children[i], out);
  }
  out += ")";
}

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

FOPtr parse_fo(std::string_view text) { return build_fo(read_all(text)); }
ModalPtr parse_modal(std::string_view text) { return build_modal(read_all(text)); }

std::string to_string(const FOPtr& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const ModalPtr& f) {
  std::string out;
  print(f, out);
  return out;
}

bool looks_modal(std::string_view text) {
  for (const std::string& t : tokenize(text)) {
    if (t == "prop" || t == "dia" || t == "box" || t == "top" || t == "bot") return true;
  }
  return false;
}

int quantifier_rank(const FOPtr& f) {
  std::unordered_map<const FOFormula*, int> memo;
  auto rec = [&](const FOPtr& g, auto&& self) -> int {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    int best = 0;
    for (const auto& c : g->children) best = std::max(best, self(c, self));
    if (g->kind == FOFormula::Kind::Exists || g->kind == FOFormula::Kind::Forall) ++best;
    memo.emplace(g.get(), best);
    return best;
  };
  return rec(f, rec);
}

int modal_depth(const ModalPtr& f) {
  std::unordered_map<const ModalFormula*, int> memo;
  auto rec = [&](const ModalPtr& g, auto&& self) -> int {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    int best = 0;
    for (const auto& c : g->children) best = std::max(best, self(c, self));
    if (g->kind == ModalFormula::Kind::Diamond || g->kind == ModalFormula::Kind::Box) ++best;
    memo.emplace(g.get(), best);
    return best;
  };
  return rec(f, rec);
}

std::set<std::string> free_variables(const FOPtr& f) {
  std::unordered_map<const FOFormula*, std::set<std::string>> memo;
  auto rec = [&](const FOPtr& g, auto&& self) -> std::set<std::string> {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::set<std::string> out;
    if (g->kind == FOFormula::Kind::Atom || g->kind == FOFormula::Kind::Equal) {
      out.insert(g->vars.begin(), g->vars.end());
    }
    for (const auto& c : g->children) {
      auto sub = self(c, self);
      out.insert(sub.begin(), sub.end());
    }
    if (g->kind == FOFormula::Kind::Exists || g->kind == FOFormula::Kind::Forall) out.erase(g->vars[0]);
    memo.emplace(g.get(), out);
    return out;
  };
  return rec(f, rec);
}

bool is_existential_positive(const FOPtr& f) {
  using K = FOFormula::Kind;
  std::unordered_map<const FOFormula*, bool> memo;
  auto rec = [&](const FOPtr& g, auto&& self) -> bool {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    bool ok = g->kind != K::Not && g->kind != K::Implies && g->kind != K::Forall;
    for (const auto& c : g->children) ok = ok && self(c, self);
    memo.emplace(g.get(), ok);
    return ok;
  };
  return rec(f, rec);
}

bool is_existential_positive(const ModalPtr& f) {
  using K = ModalFormula::Kind;
  std::unordered_map<const ModalFormula*, bool> memo;
  auto rec = [&](const ModalPtr& g, auto&& self) -> bool {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    bool ok = g->kind != K::Not && g->kind != K::Box;
    if (g->kind == K::Diamond && g->grade && *g->grade != 1) ok = false;
    for (const auto& c : g->children) ok = ok && self(c, self);
    memo.emplace(g.get(), ok);
    return ok;
  };
  return rec(f, rec);
}

bool is_negative(const FOPtr& f) {
  using K = FOFormula::Kind;
  std::unordered_map<const FOFormula*, bool> memo;
  auto rec = [&](const FOPtr& g, auto&& self) -> bool {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    bool ok = false;
    switch (g->kind) {
      case K::True:
      case K::False: ok = true; break;
      case K::Not:
        ok = g->children[0]->kind == K::Atom || g->children[0]->kind == K::Equal;
        break;
      case K::And:
      case K::Or:
      case K::Exists:
      case K::Forall:
        ok = true;
        for (const auto& c : g->children) ok = ok && self(c, self);
        break;
      default: ok = false;
    }
    memo.emplace(g.get(), ok);
    return ok;
  };
  return rec(f, rec);
}

bool is_ungraded(const ModalPtr& f) {
  std::unordered_map<const ModalFormula*, bool> memo;
  auto rec = [&](const ModalPtr& g, auto&& self) -> bool {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    bool ok = !g->grade.has_value();
    for (const auto& c : g->children) ok = ok && self(c, self);
    memo.emplace(g.get(), ok);
    return ok;
  };
  return rec(f, rec);
}

namespace {
template <typename Ptr>
std::size_t expanded_size(const Ptr& f, std::size_t cap) {
  std::unordered_map<const void*, std::size_t> memo;
  auto rec = [&](const Ptr& g, auto&& self) -> std::size_t {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::size_t total = 1;
    for (const auto& c : g->children) total = std::min(cap + 1, total + self(c, self));
    memo.emplace(g.get(), total);
    return total;
  };
  return rec(f, rec);
}
}  // namespace

std::size_t tree_size(const FOPtr& f, std::size_t cap) { return expanded_size(f, cap); }
std::size_t tree_size(const ModalPtr& f, std::size_t cap) { return expanded_size(f, cap); }

}  // namespace arbor
