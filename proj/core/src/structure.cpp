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

#include "arbor/structure.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

Vocabulary::Vocabulary(std::initializer_list<std::pair<std::string, int>> symbols)
    : Vocabulary(std::vector<std::pair<std::string, int>>(symbols)) {}

Vocabulary::Vocabulary(std::vector<std::pair<std::string, int>> symbols) {
  std::sort(symbols.begin(), symbols.end());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto& [name, arity] = symbols[i];
    if (name.empty()) throw MalformedInput("relation symbol with empty name");
    if (arity < 1) throw MalformedInput("relation '" + name + "' must have arity >= 1");
    if (i > 0 && symbols[i - 1].first == name) {
      throw MalformedInput("duplicate relation symbol '" + name + "'");
    }
    names_.push_back(name);
    arities_.push_back(arity);
  }
}

std::optional<std::size_t> Vocabulary::find(std::string_view symbol) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), symbol);
  if (it == names_.end() || *it != symbol) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Vocabulary::index_of(std::string_view symbol) const {
  auto i = find(symbol);
  if (!i) throw MalformedInput("unknown relation symbol '" + std::string(symbol) + "'");
  return *i;
}

bool Vocabulary::is_modal() const {
  return std::all_of(arities_.begin(), arities_.end(), [](int a) { return a <= 2; });
}

Vocabulary Vocabulary::with(std::string symbol, int arity) const {
  std::vector<std::pair<std::string, int>> all;
  for (std::size_t i = 0; i < size(); ++i) all.emplace_back(names_[i], arities_[i]);
  all.emplace_back(std::move(symbol), arity);
  return Vocabulary(std::move(all));
}

Vocabulary Vocabulary::without(std::string_view symbol) const {
  std::vector<std::pair<std::string, int>> all;
  for (std::size_t i = 0; i < size(); ++i) {
    if (names_[i] != symbol) all.emplace_back(names_[i], arities_[i]);
  }
  return Vocabulary(std::move(all));
}

Relation::Relation(int arity, std::vector<Element> flat) : arity_(arity) {
  const auto n = static_cast<std::size_t>(arity);
  const std::size_t rows = flat.size() / n;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t r) { return flat.begin() + static_cast<std::ptrdiff_t>(r * n); };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(row(x), row(x) + arity, row(y), row(y) + arity);
  });
  flat_.reserve(flat.size());
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = row(order[i]);
    if (i > 0 && std::equal(r, r + arity, row(order[i - 1]))) continue;
    flat_.insert(flat_.end(), r, r + arity);
  }
}

bool Relation::contains(std::span<const Element> t) const {
  if (static_cast<int>(t.size()) != arity_ || flat_.empty()) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto row = tuple(mid);
    if (std::lexicographical_compare(row.begin(), row.end(), t.begin(), t.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == size()) return false;
  auto row = tuple(lo);
  return std::equal(row.begin(), row.end(), t.begin());
}

std::optional<Element> Structure::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element Structure::element(std::string_view name) const {
  auto e = find(name);
  if (!e) throw MalformedInput("unknown element '" + std::string(name) + "'");
  return *e;
}

const Relation& Structure::relation(std::string_view symbol) const {
  return relations_[vocab_.index_of(symbol)];
}

StructureBuilder::StructureBuilder(Vocabulary vocab)
    : vocab_(std::move(vocab)), flat_(vocab_.size()) {}

Element StructureBuilder::add(std::string name) {
  names_.push_back(std::move(name));
  return static_cast<Element>(names_.size() - 1);
}

void StructureBuilder::relate(std::size_t symbol, std::span<const Element> provisional) {
  if (symbol >= vocab_.size()) throw MalformedInput("relation index out of range");
  if (static_cast<int>(provisional.size()) != vocab_.arity(symbol)) {
    throw MalformedInput("tuple length does not match arity of '" + vocab_.name(symbol) + "'");
  }
  for (Element x : provisional) {
    if (x >= names_.size()) throw MalformedInput("tuple component outside the universe");
  }
  flat_[symbol].insert(flat_[symbol].end(), provisional.begin(), provisional.end());
}

Structure StructureBuilder::build() && { return std::move(*this).build_with_ids().first; }

std::pair<Structure, ElementMap> StructureBuilder::build_with_ids() && {
  const std::size_t n = names_.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return names_[a] < names_[b]; });
  ElementMap final_id(n);
  Structure s;
  s.vocab_ = vocab_;
  s.names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && names_[order[i]] == names_[order[i - 1]]) {
      throw MalformedInput("duplicate element name '" + names_[order[i]] + "'");
    }
    final_id[order[i]] = static_cast<Element>(i);
    s.names_.push_back(std::move(names_[order[i]]));
  }
  s.relations_.reserve(vocab_.size());
  for (std::size_t r = 0; r < vocab_.size(); ++r) {
    for (Element& x : flat_[r]) x = final_id[x];
    s.relations_.emplace_back(vocab_.arity(r), std::move(flat_[r]));
  }
  return {std::move(s), std::move(final_id)};
}

Structure make_structure(const Vocabulary& vocab, const std::vector<std::string>& universe,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& tuples) {
  StructureBuilder b(vocab);
  for (const auto& name : universe) b.add(name);
  auto id = [&](const std::string& name) -> Element {
    auto it = std::find(universe.begin(), universe.end(), name);
    if (it == universe.end()) throw MalformedInput("tuple mentions unknown element '" + name + "'");
    return static_cast<Element>(it - universe.begin());
  };
  for (const auto& [symbol, names] : tuples) {
    Tuple t;
    for (const auto& name : names) t.push_back(id(name));
    b.relate(vocab.index_of(symbol), t);
  }
  return std::move(b).build();
}

PointedStructure::PointedStructure(Structure s, Element p) : base(std::move(s)), point(p) {
  if (point >= base.size()) throw MalformedInput("distinguished point outside the universe");
}

std::pair<Structure, ElementMap> induced_substructure(const Structure& s, std::vector<Element> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> position(s.size(), kAbsent);
  StructureBuilder b(s.vocabulary());
  for (Element x : keep) {
    if (x >= s.size()) throw MalformedInput("induced_substructure: element out of range");
    position[x] = b.add(s.name(x));
  }
  Tuple t;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      auto row = rel.tuple(i);
      t.clear();
      bool inside = true;
      for (Element x : row) {
        if (position[x] == kAbsent) {
          inside = false;
          break;
        }
        t.push_back(position[x]);
      }
      if (inside) b.relate(r, t);
    }
  }
  // Names keep their relative order, so provisional ids are final ids.
  return {std::move(b).build(), std::move(keep)};
}

Structure reduct(const Structure& s, const Vocabulary& smaller) {
  StructureBuilder b(smaller);
  for (Element x = 0; x < s.size(); ++x) b.add(s.name(x));
  for (std::size_t r = 0; r < smaller.size(); ++r) {
    const std::size_t src = s.vocabulary().index_of(smaller.name(r));
    if (s.vocabulary().arity(src) != smaller.arity(r)) {
      throw MalformedInput("reduct: arity mismatch for '" + smaller.name(r) + "'");
    }
    const Relation& rel = s.relation(src);
    for (std::size_t i = 0; i < rel.size(); ++i) b.relate(r, rel.tuple(i));
  }
  return std::move(b).build();
}

}  // namespace arbor
