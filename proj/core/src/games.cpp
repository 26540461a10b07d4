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

#include "arbor/games.hpp"

#include <algorithm>
#include <map>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

void require_vocabulary(const Structure& a, const Structure& b) {
  if (!(a.vocabulary() == b.vocabulary())) throw MalformedInput("structures have different vocabularies");
}

void require_modal(const Structure& a, const Structure& b) {
  require_vocabulary(a, b);
  if (!a.vocabulary().is_modal()) throw UnsupportedInput("modal games need arity at most 2");
}

// Checks the position tuples that involve the newest pair. With `reflect`
// the map must also reflect relations and inequality.
bool extends_consistently(const Structure& a, const Structure& b, const Tuple& pa, const Tuple& pb,
                          bool reflect) {
  const std::size_t last = pa.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const bool ea = pa[i] == pa[last];
    const bool eb = pb[i] == pb[last];
    if (ea && !eb) return false;
    if (reflect && eb && !ea) return false;
  }
  Tuple positions;
  Tuple ta;
  Tuple tb;
  for (std::size_t r = 0; r < a.vocabulary().size(); ++r) {
    const std::size_t arity = static_cast<std::size_t>(a.vocabulary().arity(r));
    positions.assign(arity, 0);
    while (true) {
      if (std::find(positions.begin(), positions.end(), last) != positions.end()) {
        ta.clear();
        tb.clear();
        for (Element p : positions) {
          ta.push_back(pa[p]);
          tb.push_back(pb[p]);
        }
        const bool ha = a.holds(r, ta);
        const bool hb = b.holds(r, tb);
        if (ha && !hb) return false;
        if (reflect && hb && !ha) return false;
      }
      std::size_t pos = arity;
      while (pos > 0 && positions[pos - 1] == last) positions[--pos] = 0;
      if (pos == 0) break;
      ++positions[pos - 1];
    }
  }
  return true;
}

bool ef_win(const Structure& a, const Structure& b, Tuple& pa, Tuple& pb, int rounds) {
  if (rounds == 0) return true;
  // Spoiler in A.
  for (Element x = 0; x < a.size(); ++x) {
    bool answered = false;
    pa.push_back(x);
    for (Element y = 0; y < b.size() && !answered; ++y) {
      pb.push_back(y);
      answered = extends_consistently(a, b, pa, pb, true) && ef_win(a, b, pa, pb, rounds - 1);
      pb.pop_back();
    }
    pa.pop_back();
    if (!answered) return false;
  }
  // Spoiler in B.
  for (Element y = 0; y < b.size(); ++y) {
    bool answered = false;
    pb.push_back(y);
    for (Element x = 0; x < a.size() && !answered; ++x) {
      pa.push_back(x);
      answered = extends_consistently(a, b, pa, pb, true) && ef_win(a, b, pa, pb, rounds - 1);
      pa.pop_back();
    }
    pb.pop_back();
    if (!answered) return false;
  }
  return true;
}

bool ep_win(const Structure& a, const Structure& b, Tuple& pa, Tuple& pb, int rounds) {
  if (rounds == 0) return true;
  for (Element x = 0; x < a.size(); ++x) {
    bool answered = false;
    pa.push_back(x);
    for (Element y = 0; y < b.size() && !answered; ++y) {
      pb.push_back(y);
      answered = extends_consistently(a, b, pa, pb, false) && ep_win(a, b, pa, pb, rounds - 1);
      pb.pop_back();
    }
    pa.pop_back();
    if (!answered) return false;
  }
  return true;
}

struct Kripke {
  std::vector<std::size_t> unary;
  std::vector<std::size_t> binary;
  // succ[i][x]: successors of x along binary[i]
  std::vector<std::vector<std::vector<Element>>> succ;
};

Kripke kripke_of(const Structure& s) {
  Kripke k;
  const Vocabulary& v = s.vocabulary();
  for (std::size_t r = 0; r < v.size(); ++r) (v.arity(r) == 1 ? k.unary : k.binary).push_back(r);
  for (std::size_t r : k.binary) {
    std::vector<std::vector<Element>> succ(s.size());
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) succ[rel.tuple(i)[0]].push_back(rel.tuple(i)[1]);
    k.succ.push_back(std::move(succ));
  }
  return k;
}

}  // namespace

bool oracle_ef_game(const Structure& a, const Structure& b, int k) {
  require_vocabulary(a, b);
  Tuple pa;
  Tuple pb;
  return ef_win(a, b, pa, pb, k);
}

bool oracle_ep_game(const Structure& a, const Structure& b, int k) {
  require_vocabulary(a, b);
  Tuple pa;
  Tuple pb;
  return ep_win(a, b, pa, pb, k);
}

bool oracle_bisim_game(const PointedStructure& p, const PointedStructure& q, int k) {
  require_modal(p.base, q.base);
  const Kripke kp = kripke_of(p.base);
  const Kripke kq = kripke_of(q.base);
  std::map<std::tuple<Element, Element, int>, bool> memo;
  auto win = [&](Element x, Element y, int rounds, auto&& self) -> bool {
    for (std::size_t r : kp.unary) {
      if (p.base.holds(r, {x}) != q.base.holds(r, {y})) return false;
    }
    if (rounds == 0) return true;
    auto key = std::make_tuple(x, y, rounds);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = true;
    for (std::size_t i = 0; i < kp.binary.size() && ok; ++i) {
      for (Element x2 : kp.succ[i][x]) {
        bool answered = false;
        for (Element y2 : kq.succ[i][y]) answered = answered || self(x2, y2, rounds - 1, self);
        if (!answered) {
          ok = false;
          break;
        }
      }
      for (Element y2 : kq.succ[i][y]) {
        if (!ok) break;
        bool answered = false;
        for (Element x2 : kp.succ[i][x]) answered = answered || self(x2, y2, rounds - 1, self);
        if (!answered) ok = false;
      }
    }
    memo[key] = ok;
    return ok;
  };
  return win(p.point, q.point, k, win);
}

bool oracle_graded_bisim(const PointedStructure& p, const PointedStructure& q, int k) {
  require_modal(p.base, q.base);
  const Kripke kp = kripke_of(p.base);
  const Kripke kq = kripke_of(q.base);
  std::map<std::vector<int>, int> ids;
  auto intern = [&](std::vector<int> key) {
    return ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first->second;
  };
  auto base_classes = [&](const Structure& s, const Kripke& kr) {
    std::vector<int> out(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      std::vector<int> key{-1};
      for (std::size_t r : kr.unary) key.push_back(s.holds(r, {x}) ? 1 : 0);
      out[x] = intern(std::move(key));
    }
    return out;
  };
  std::vector<int> cp = base_classes(p.base, kp);
  std::vector<int> cq = base_classes(q.base, kq);
  const std::vector<int> bp = cp;
  const std::vector<int> bq = cq;
  auto refine = [&](const Kripke& kr, const std::vector<int>& base, const std::vector<int>& prev) {
    std::vector<int> out(prev.size());
    for (Element x = 0; x < prev.size(); ++x) {
      std::vector<int> key{base[x]};
      for (const auto& succ : kr.succ) {
        std::vector<int> counts;
        for (Element y : succ[x]) counts.push_back(prev[y]);
        std::sort(counts.begin(), counts.end());
        key.push_back(-2);
        key.insert(key.end(), counts.begin(), counts.end());
      }
      out[x] = intern(std::move(key));
    }
    return out;
  };
  for (int d = 0; d < k; ++d) {
    std::vector<int> np = refine(kp, bp, cp);
    std::vector<int> nq = refine(kq, bq, cq);
    cp = std::move(np);
    cq = std::move(nq);
  }
  return cp[p.point] == cq[q.point];
}

}  // namespace arbor
