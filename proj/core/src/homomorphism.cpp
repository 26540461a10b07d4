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

#include "arbor/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

void check_map_shape(const ElementMap& f, const Structure& a, const Structure& b) {
  if (f.size() != a.size()) {
    throw MalformedInput("map has " + std::to_string(f.size()) + " entries for a universe of " +
                         std::to_string(a.size()));
  }
  for (Element y : f) {
    if (y >= b.size()) throw MalformedInput("map image lies outside the target universe");
  }
}

void check_same_vocabulary(const Structure& a, const Structure& b) {
  if (!(a.vocabulary() == b.vocabulary())) throw MalformedInput("vocabularies differ");
}

// One constraint per relation tuple of the source structure.
struct Constraint {
  std::size_t relation;
  std::vector<Element> vars;      // tuple of source elements
  std::vector<Element> distinct;  // distinct variables of the tuple
};

class Search {
 public:
  Search(const Structure& a, const Structure& b, const HomSearchOptions& options)
      : a_(a), b_(b), injective_(options.injective), words_((b.size() + 63) / 64) {
    dom_.assign(a.size() * words_, 0);
    for (Element x = 0; x < a.size(); ++x) {
      for (Element v = 0; v < b.size(); ++v) set_bit(x, v);
    }
    watchers_.resize(a.size());
    for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
      const Relation& rel = a.relation(r);
      for (std::size_t i = 0; i < rel.size(); ++i) {
        Constraint c;
        c.relation = r;
        auto t = rel.tuple(i);
        c.vars.assign(t.begin(), t.end());
        c.distinct = c.vars;
        std::sort(c.distinct.begin(), c.distinct.end());
        c.distinct.erase(std::unique(c.distinct.begin(), c.distinct.end()), c.distinct.end());
        for (Element x : c.distinct) watchers_[x].push_back(constraints_.size());
        constraints_.push_back(std::move(c));
      }
    }
    queued_.assign(constraints_.size(), false);
    if (!options.fixed.empty()) {
      if (options.fixed.size() != a.size()) throw MalformedInput("constraint map has wrong size");
      for (Element x = 0; x < a.size(); ++x) {
        if (!options.fixed[x]) continue;
        if (*options.fixed[x] >= b.size()) throw MalformedInput("constraint value outside target");
        fixed_.emplace_back(x, *options.fixed[x]);
      }
    }
  }

  std::optional<ElementMap> run() {
    if (a_.size() == 0) return ElementMap{};
    if (b_.size() == 0) return std::nullopt;
    for (auto [x, v] : fixed_) {
      if (!test_bit(x, v)) return std::nullopt;
      restrict_to(x, v);
    }
    if (injective_) {
      for (std::size_t i = 0; i < fixed_.size(); ++i) {
        for (std::size_t j = i + 1; j < fixed_.size(); ++j) {
          if (fixed_[i].first != fixed_[j].first && fixed_[i].second == fixed_[j].second) {
            return std::nullopt;
          }
        }
      }
      if (a_.size() > b_.size()) return std::nullopt;
    }
    for (std::size_t c = 0; c < constraints_.size(); ++c) enqueue(c);
    if (!propagate()) return std::nullopt;
    assignment_.assign(a_.size(), 0);
    used_.assign(b_.size(), false);
    if (!solve(0)) return std::nullopt;
    return assignment_;
  }

 private:
  bool test_bit(Element x, Element v) const {
    return (dom_[x * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set_bit(Element x, Element v) { dom_[x * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  void save(Element x) {
    trail_.push_back({x, std::vector<std::uint64_t>(dom_.begin() + x * words_,
                                                    dom_.begin() + (x + 1) * words_)});
  }

  void restrict_to(Element x, Element v) {
    save(x);
    std::fill(dom_.begin() + x * words_, dom_.begin() + (x + 1) * words_, 0);
    set_bit(x, v);
    for (std::size_t c : watchers_[x]) enqueue(c);
  }

  void enqueue(std::size_t c) {
    if (!queued_[c]) {
      queued_[c] = true;
      queue_.push_back(c);
    }
  }

  std::size_t domain_size(Element x) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_; ++w) n += std::popcount(dom_[x * words_ + w]);
    return n;
  }

  bool revise(std::size_t ci) {
    const Constraint& c = constraints_[ci];
    const Relation& rel = b_.relation(c.relation);
    support_.assign(c.distinct.size() * words_, 0);
    const std::size_t arity = c.vars.size();
    for (std::size_t i = 0; i < rel.size(); ++i) {
      auto bt = rel.tuple(i);
      bool ok = true;
      for (std::size_t p = 0; p < arity && ok; ++p) {
        if (!test_bit(c.vars[p], bt[p])) ok = false;
        for (std::size_t q = 0; q < p && ok; ++q) {
          if (c.vars[q] == c.vars[p] && bt[q] != bt[p]) ok = false;
        }
      }
      if (!ok) continue;
      for (std::size_t p = 0; p < arity; ++p) {
        const std::size_t slot =
            std::lower_bound(c.distinct.begin(), c.distinct.end(), c.vars[p]) - c.distinct.begin();
        support_[slot * words_ + bt[p] / 64] |= std::uint64_t{1} << (bt[p] % 64);
      }
    }
    for (std::size_t slot = 0; slot < c.distinct.size(); ++slot) {
      const Element x = c.distinct[slot];
      bool changed = false;
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t next = dom_[x * words_ + w] & support_[slot * words_ + w];
        if (next != dom_[x * words_ + w]) changed = true;
        if (next != 0) nonempty = true;
      }
      if (!nonempty) return false;
      if (changed) {
        save(x);
        for (std::size_t w = 0; w < words_; ++w) {
          dom_[x * words_ + w] &= support_[slot * words_ + w];
        }
        for (std::size_t other : watchers_[x]) {
          if (other != ci) enqueue(other);
        }
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const std::size_t c = queue_.back();
      queue_.pop_back();
      queued_[c] = false;
      if (!revise(c)) {
        for (std::size_t q : queue_) queued_[q] = false;
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto& [x, words] = trail_.back();
      std::copy(words.begin(), words.end(), dom_.begin() + x * words_);
      trail_.pop_back();
    }
  }

  bool solve(Element x) {
    if (x == a_.size()) return true;
    for (Element v = 0; v < b_.size(); ++v) {
      if (!test_bit(x, v)) continue;
      if (injective_ && used_[v]) continue;
      const std::size_t mark = trail_.size();
      restrict_to(x, v);
      bool ok = true;
      if (injective_) {
        for (Element y = x + 1; y < a_.size() && ok; ++y) {
          if (!test_bit(y, v)) continue;
          save(y);
          dom_[y * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
          if (domain_size(y) == 0) ok = false;
          for (std::size_t c : watchers_[y]) enqueue(c);
        }
      }
      if (ok) ok = propagate();
      else {
        for (std::size_t q : queue_) queued_[q] = false;
        queue_.clear();
      }
      if (ok) {
        assignment_[x] = v;
        if (injective_) used_[v] = true;
        if (solve(x + 1)) return true;
        if (injective_) used_[v] = false;
      }
      undo(mark);
    }
    return false;
  }

  const Structure& a_;
  const Structure& b_;
  bool injective_;
  std::size_t words_;
  std::vector<std::uint64_t> dom_;
  std::vector<std::uint64_t> support_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watchers_;
  std::vector<bool> queued_;
  std::vector<std::size_t> queue_;
  std::vector<std::pair<Element, std::vector<std::uint64_t>>> trail_;
  std::vector<std::pair<Element, Element>> fixed_;
  ElementMap assignment_;
  std::vector<bool> used_;
};

}  // namespace

bool is_homomorphism(const ElementMap& f, const Structure& a, const Structure& b) {
  check_same_vocabulary(a, b);
  check_map_shape(f, a, b);
  Tuple image;
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    const Relation& rel = a.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      image.clear();
      for (Element x : rel.tuple(i)) image.push_back(f[x]);
      if (!b.holds(r, image)) return false;
    }
  }
  return true;
}

bool is_embedding(const ElementMap& f, const Structure& a, const Structure& b) {
  if (!is_homomorphism(f, a, b)) return false;
  std::vector<Element> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> preimage(b.size(), kAbsent);
  for (Element x = 0; x < a.size(); ++x) preimage[f[x]] = x;
  Tuple back;
  for (std::size_t r = 0; r < b.vocabulary().size(); ++r) {
    const Relation& rel = b.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      back.clear();
      bool inside = true;
      for (Element y : rel.tuple(i)) {
        if (preimage[y] == kAbsent) {
          inside = false;
          break;
        }
        back.push_back(preimage[y]);
      }
      if (inside && !a.holds(r, back)) return false;
    }
  }
  return true;
}

bool is_surjective(const ElementMap& f, const Structure& b) {
  std::vector<bool> hit(b.size(), false);
  for (Element y : f) {
    if (y >= b.size()) throw MalformedInput("map image lies outside the target universe");
    hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::optional<ElementMap> find_homomorphism(const Structure& a, const Structure& b,
                                            const HomSearchOptions& options) {
  check_same_vocabulary(a, b);
  return Search(a, b, options).run();
}

std::optional<ElementMap> find_homomorphism(const Structure& a, const Structure& b,
                                            const PartialMap& fixed) {
  HomSearchOptions options;
  options.fixed = fixed;
  return find_homomorphism(a, b, options);
}

std::optional<ElementMap> find_isomorphism(const Structure& a, const Structure& b) {
  check_same_vocabulary(a, b);
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    if (a.relation(r).size() != b.relation(r).size()) return std::nullopt;
  }
  // A bijective homomorphism between finite structures with equally many
  // tuples per relation reflects every relation.
  HomSearchOptions options;
  options.injective = true;
  return find_homomorphism(a, b, options);
}

ElementMap compose(const ElementMap& first, const ElementMap& second) {
  ElementMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i] >= second.size()) throw MalformedInput("maps are not composable");
    out[i] = second[first[i]];
  }
  return out;
}

ElementMap identity_map(std::size_t n) {
  ElementMap id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return id;
}

Factorization factorize(const ElementMap& f, const Structure& a, const Structure& b) {
  check_same_vocabulary(a, b);
  check_map_shape(f, a, b);
  auto [image, embedding] = induced_substructure(b, f);
  ElementMap surjection(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    surjection[x] = static_cast<Element>(
        std::lower_bound(embedding.begin(), embedding.end(), f[x]) - embedding.begin());
  }
  return {std::move(image), std::move(surjection), std::move(embedding)};
}

}  // namespace arbor
