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

#include "arbor/ef_comonad.hpp"

#include <limits>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

std::size_t ef_carrier_size(std::size_t n, int k) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t power = 1;
  for (int i = 1; i <= k; ++i) {
    if (n != 0 && power > kMax / n) return kMax;
    power *= n;
    if (total > kMax - power) return kMax;
    total += power;
  }
  return total;
}

std::size_t EFCoalgebra::canonical_index(std::span<const Element> seq) const {
  const std::size_t n = base.size();
  std::size_t offset = 0;
  std::size_t power = 1;
  for (std::size_t len = 1; len < seq.size(); ++len) {
    power *= n;
    offset += power;
  }
  std::size_t value = 0;
  for (Element e : seq) value = value * n + e;
  return offset + value;
}

Element EFCoalgebra::element_of(std::span<const Element> seq) const {
  if (seq.empty() || seq.size() > static_cast<std::size_t>(k)) {
    throw MalformedInput("sequence length outside 1..k");
  }
  for (Element e : seq) {
    if (e >= base.size()) throw MalformedInput("sequence entry outside the base universe");
  }
  return by_index[canonical_index(seq)];
}

EFCoalgebra ef_build(const Structure& a, int k, const Limits& limits) {
  if (k < 1) throw MalformedInput("resource parameter k must be at least 1");
  const std::size_t n = a.size();
  const std::size_t total = ef_carrier_size(n, k);
  if (total > limits.carrier_cap) {
    throw SizeCapExceeded("E_k carrier would have " + std::to_string(total) +
                          " elements, above the cap of " + std::to_string(limits.carrier_cap));
  }
  EFCoalgebra c;
  c.base = a;
  c.k = k;
  // Canonical enumeration: provisional id = canonical index.
  std::vector<Tuple> seqs;
  seqs.reserve(total);
  StructureBuilder builder(a.vocabulary());
  Tuple seq;
  for (int len = 1; len <= k && n > 0; ++len) {
    seq.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      std::string name = "[";
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) name += ",";
        name += a.name(seq[i]);
      }
      name += "]";
      builder.add(std::move(name));
      seqs.push_back(seq);
      std::size_t pos = seq.size();
      while (pos > 0 && seq[pos - 1] + 1 == n) seq[--pos] = 0;
      if (pos == 0) break;
      ++seq[pos - 1];
    }
  }
  c.base = a;
  auto index_of = [&](const Tuple& s, std::size_t len) {
    std::size_t offset = 0;
    std::size_t power = 1;
    for (std::size_t l = 1; l < len; ++l) {
      power *= n;
      offset += power;
    }
    std::size_t value = 0;
    for (std::size_t i = 0; i < len; ++i) value = value * n + s[i];
    return offset + value;
  };
  // prefix[i][j]: provisional id of the length-(j+1) prefix of sequence i.
  std::vector<Tuple> prefix(seqs.size());
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t len = 1; len <= seqs[i].size(); ++len) {
      prefix[i].push_back(static_cast<Element>(index_of(seqs[i], len)));
    }
  }
  Tuple positions;
  Tuple image;
  Tuple lifted;
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    const std::size_t arity = static_cast<std::size_t>(a.vocabulary().arity(r));
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const std::size_t len = seqs[i].size();
      positions.assign(arity, 0);
      while (true) {
        bool has_top = false;
        for (Element p : positions) has_top = has_top || p + 1 == len;
        if (has_top) {
          image.clear();
          lifted.clear();
          for (Element p : positions) {
            image.push_back(seqs[i][p]);
            lifted.push_back(prefix[i][p]);
          }
          if (a.holds(r, image)) builder.relate(r, lifted);
        }
        std::size_t pos = arity;
        while (pos > 0 && positions[pos - 1] + 1 == len) positions[--pos] = 0;
        if (pos == 0) break;
        ++positions[pos - 1];
      }
    }
  }
  auto [structure, ids] = std::move(builder).build_with_ids();
  std::vector<Element> parent(seqs.size(), kNoParent);
  c.sequences.resize(seqs.size());
  c.by_index = ids;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (seqs[i].size() > 1) parent[ids[i]] = ids[prefix[i][seqs[i].size() - 2]];
    c.sequences[ids[i]] = std::move(seqs[i]);
  }
  c.carrier = ForestStructure(std::move(structure), std::move(parent));
  return c;
}

ElementMap ef_counit(const EFCoalgebra& c) {
  ElementMap out(c.size());
  for (Element e = 0; e < c.size(); ++e) out[e] = c.sequences[e].back();
  return out;
}

std::vector<Tuple> ef_prefix_sequences(const EFCoalgebra& c) {
  std::vector<Tuple> out(c.size());
  for (Element e = 0; e < c.size(); ++e) out[e] = c.carrier.down_set(e);
  return out;
}

EFComultiplication ef_comult(const EFCoalgebra& c, const Limits& limits) {
  EFComultiplication out{ef_build(c.carrier.base(), c.k, limits), ElementMap(c.size())};
  const std::vector<Tuple> prefixes = ef_prefix_sequences(c);
  for (Element e = 0; e < c.size(); ++e) out.map[e] = out.doubled.element_of(prefixes[e]);
  return out;
}

ElementMap ef_map(const ElementMap& f, const EFCoalgebra& from, const EFCoalgebra& to) {
  if (from.k != to.k) throw MalformedInput("E_k(f) needs coalgebras with the same k");
  if (f.size() != from.base.size()) throw MalformedInput("map does not match the source base");
  ElementMap out(from.size());
  Tuple image;
  for (Element e = 0; e < from.size(); ++e) {
    image.clear();
    for (Element x : from.sequences[e]) image.push_back(f[x]);
    out[e] = to.element_of(image);
  }
  return out;
}

}  // namespace arbor
