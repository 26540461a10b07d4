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

#include "arbor/equality.hpp"

#include <string>

#include "arbor/errors.hpp"

namespace arbor {

Structure expand_I(const Structure& a) {
  const std::string symbol(kEqualitySymbol);
  if (a.vocabulary().contains(symbol)) {
    throw MalformedInput("vocabulary already uses the reserved symbol I");
  }
  const Vocabulary extended = a.vocabulary().with(symbol, 2);
  StructureBuilder builder(extended);
  for (const auto& name : a.names()) builder.add(name);
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    const Relation& rel = a.relation(r);
    const std::size_t target = extended.index_of(a.vocabulary().name(r));
    for (std::size_t i = 0; i < rel.size(); ++i) builder.relate(target, rel.tuple(i));
  }
  const std::size_t eq = extended.index_of(symbol);
  for (Element x = 0; x < a.size(); ++x) builder.relate(eq, {x, x});
  return std::move(builder).build();
}

Quotient collapse_I(const Structure& a) {
  const auto eq = a.vocabulary().find(kEqualitySymbol);
  if (!eq) throw MalformedInput("structure has no equality symbol I to collapse");
  if (a.vocabulary().arity(*eq) != 2) throw MalformedInput("equality symbol I must be binary");
  std::vector<std::pair<Element, Element>> pairs;
  const Relation& rel = a.relation(*eq);
  for (std::size_t i = 0; i < rel.size(); ++i) pairs.emplace_back(rel.tuple(i)[0], rel.tuple(i)[1]);
  return quotient(reduct(a, a.vocabulary().without(kEqualitySymbol)), pairs);
}

}  // namespace arbor
