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

#include "arbor/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

int CodeTable::label(const Profile& top) {
  auto [it, inserted] = profile_ids_.try_emplace(top, static_cast<int>(profiles_.size()));
  if (inserted) profiles_.push_back(top);
  return it->second;
}

int CodeTable::path(int parent_path, int top_label) {
  auto [it, inserted] =
      path_ids_.try_emplace({parent_path, top_label}, static_cast<int>(path_length_.size()));
  if (inserted) path_length_.push_back(path_length_[parent_path] + 1);
  return it->second;
}

int CodeTable::tree(int label, std::vector<int> children) {
  std::sort(children.begin(), children.end());
  children.insert(children.begin(), label);
  auto [it, inserted] = tree_ids_.try_emplace(std::move(children), static_cast<int>(tree_ids_.size()));
  return it->second;
}

int CodeTable::reduced(int label, std::vector<int> children) {
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  std::vector<int> key = children;
  key.insert(key.begin(), label);
  auto [it, inserted] = reduced_ids_.try_emplace(std::move(key), static_cast<int>(reduced_nodes_.size()));
  if (inserted) reduced_nodes_.emplace_back(label, std::move(children));
  return it->second;
}

bool profile_included(const Profile& small, const Profile& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

bool CodeTable::simulates(int from, int to) {
  if (auto it = simulation_.find({from, to}); it != simulation_.end()) return it->second;
  const int lf = reduced_nodes_[from].first;
  const int lt = reduced_nodes_[to].first;
  bool ok = (lf < 0 || lt < 0) ? lf == lt : profile_included(profiles_[lf], profiles_[lt]);
  if (ok) {
    // Copies: recursion may grow reduced_nodes_.
    const std::vector<int> from_children = reduced_nodes_[from].second;
    const std::vector<int> to_children = reduced_nodes_[to].second;
    for (int c : from_children) {
      bool matched = false;
      for (int d : to_children) {
        if (simulates(c, d)) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        ok = false;
        break;
      }
    }
  }
  simulation_[{from, to}] = ok;
  return ok;
}

std::vector<Profile> top_profiles(const ForestStructure& x) {
  const Structure& s = x.base();
  std::vector<Profile> out(s.size());
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      auto t = rel.tuple(i);
      Element top = t[0];
      for (Element e : t) {
        if (x.depth(e) > x.depth(top)) top = e;
      }
      std::vector<std::uint32_t> entry{static_cast<std::uint32_t>(r)};
      bool in_chain = true;
      for (Element e : t) {
        if (!x.leq(e, top)) {
          in_chain = false;
          break;
        }
        entry.push_back(static_cast<std::uint32_t>(x.depth(e) - 1));
      }
      if (in_chain) out[top].push_back(std::move(entry));
    }
  }
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

namespace {

// Elements ordered by decreasing depth, so children precede parents.
std::vector<Element> deepest_first(const ForestStructure& x) {
  std::vector<Element> order(x.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return x.depth(a) > x.depth(b); });
  return order;
}

std::vector<int> labels_of(const ForestStructure& x, CodeTable& table) {
  std::vector<int> labels;
  labels.reserve(x.size());
  for (const Profile& p : top_profiles(x)) labels.push_back(table.label(p));
  return labels;
}

std::vector<int> ahu_codes(const ForestStructure& x, const std::vector<int>& labels,
                           CodeTable& table) {
  std::vector<int> code(x.size());
  for (Element e : deepest_first(x)) {
    std::vector<int> kids;
    for (Element c : x.children(e)) kids.push_back(code[c]);
    code[e] = table.tree(labels[e], std::move(kids));
  }
  return code;
}

int root_code(const ForestStructure& x, const std::vector<int>& code, CodeTable& table) {
  std::vector<int> kids;
  for (Element r : x.roots()) kids.push_back(code[r]);
  return table.tree(-1, std::move(kids));
}

}  // namespace

std::vector<int> path_codes(const ForestStructure& x, CodeTable& table) {
  const std::vector<int> labels = labels_of(x, table);
  std::vector<Element> order = deepest_first(x);
  std::reverse(order.begin(), order.end());
  std::vector<int> code(x.size());
  for (Element e : order) {
    const int parent = x.is_root(e) ? CodeTable::kEmptyPath : code[x.parent(e)];
    code[e] = table.path(parent, labels[e]);
  }
  return code;
}

int forest_code(const ForestStructure& x, CodeTable& table) {
  const std::vector<int> labels = labels_of(x, table);
  return root_code(x, ahu_codes(x, labels, table), table);
}

int marked_forest_code(const ForestStructure& x, const PathEmbedding& marked, CodeTable& table) {
  std::vector<int> labels = labels_of(x, table);
  for (Element e : marked.chain) labels[e] = -(labels[e] + 3);
  return root_code(x, ahu_codes(x, labels, table), table);
}

std::vector<int> reduced_codes(const ForestStructure& x, CodeTable& table) {
  const std::vector<int> labels = labels_of(x, table);
  std::vector<int> code(x.size() + 1);
  for (Element e : deepest_first(x)) {
    std::vector<int> kids;
    for (Element c : x.children(e)) kids.push_back(code[c + 1]);
    code[e + 1] = table.reduced(labels[e], std::move(kids));
  }
  std::vector<int> kids;
  for (Element r : x.roots()) kids.push_back(code[r + 1]);
  code[0] = table.reduced(-1, std::move(kids));
  return code;
}

std::optional<ElementMap> forest_isomorphism(const ForestStructure& x, const ForestStructure& y) {
  if (!(x.base().vocabulary() == y.base().vocabulary()) || x.size() != y.size()) return std::nullopt;
  CodeTable table;
  const std::vector<int> cx = ahu_codes(x, labels_of(x, table), table);
  const std::vector<int> cy = ahu_codes(y, labels_of(y, table), table);
  if (root_code(x, cx, table) != root_code(y, cy, table)) return std::nullopt;
  ElementMap map(x.size());
  auto match = [&](std::vector<Element> xs, std::vector<Element> ys, auto&& self) -> void {
    auto by_x = [&](Element a, Element b) { return cx[a] < cx[b]; };
    auto by_y = [&](Element a, Element b) { return cy[a] < cy[b]; };
    std::stable_sort(xs.begin(), xs.end(), by_x);
    std::stable_sort(ys.begin(), ys.end(), by_y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      map[xs[i]] = ys[i];
      self(x.children(xs[i]), y.children(ys[i]), self);
    }
  };
  match(x.roots(), y.roots(), match);
  if (!is_forest_morphism(map, x, y) || !is_embedding(map, x.base(), y.base())) return std::nullopt;
  return map;
}

std::string profile_text(const Structure& s, const std::vector<Element>& chain) {
  std::string out = std::to_string(chain.size());
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& rel = s.relation(r);
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      std::vector<std::size_t> row;
      for (Element e : rel.tuple(i)) {
        auto it = std::find(chain.begin(), chain.end(), e);
        if (it == chain.end()) break;
        row.push_back(static_cast<std::size_t>(it - chain.begin()));
      }
      if (row.size() == static_cast<std::size_t>(rel.arity())) rows.push_back(std::move(row));
    }
    if (rows.empty()) continue;
    std::sort(rows.begin(), rows.end());
    out += "|" + s.vocabulary().name(r);
    for (const auto& row : rows) {
      out += "(";
      for (std::size_t p = 0; p < row.size(); ++p) {
        if (p > 0) out += ",";
        out += std::to_string(row[p]);
      }
      out += ")";
    }
  }
  return out;
}

bool operator<(const LabeledTree& a, const LabeledTree& b) {
  if (a.label != b.label) return a.label < b.label;
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                      b.children.end());
}

LabeledTree reduce(const LabeledTree& t) {
  LabeledTree out{t.label, {}};
  for (const LabeledTree& c : t.children) out.children.push_back(reduce(c));
  std::sort(out.children.begin(), out.children.end());
  out.children.erase(std::unique(out.children.begin(), out.children.end()), out.children.end());
  return out;
}

LabeledTree type_tree(const ForestStructure& x, const PathEmbedding& from) {
  auto build = [&](const std::vector<Element>& chain, const std::vector<Element>& above,
                   auto&& self) -> LabeledTree {
    LabeledTree node{profile_text(x.base(), chain), {}};
    for (Element c : above) {
      std::vector<Element> next = chain;
      next.push_back(c);
      node.children.push_back(self(next, x.children(c), self));
    }
    std::sort(node.children.begin(), node.children.end());
    node.children.erase(std::unique(node.children.begin(), node.children.end()),
                        node.children.end());
    return node;
  };
  const std::vector<Element>& above = from.empty() ? x.roots() : x.children(from.last());
  return build(from.chain, above, build);
}

std::string canonical_key(const Structure& s) {
  const std::size_t n = s.size();
  if (n > 8) throw UnsupportedInput("canonical_key supports at most 8 elements");
  std::string head;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    head += s.vocabulary().name(r) + "/" + std::to_string(s.vocabulary().arity(r)) + ";";
  }
  head += "n=" + std::to_string(n) + ";";
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<std::vector<Element>> best;
  bool first = true;
  std::vector<std::vector<Element>> rows;
  do {
    rows.clear();
    for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
      const Relation& rel = s.relation(r);
      for (std::size_t i = 0; i < rel.size(); ++i) {
        std::vector<Element> row{static_cast<Element>(r)};
        for (Element e : rel.tuple(i)) row.push_back(perm[e]);
        rows.push_back(std::move(row));
      }
    }
    std::sort(rows.begin(), rows.end());
    if (first || rows < best) {
      best = rows;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string out = head;
  for (const auto& row : best) {
    for (Element e : row) out += std::to_string(e) + ",";
    out += ";";
  }
  return out;
}

}  // namespace arbor
