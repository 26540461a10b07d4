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

#include "arbor/extension.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "arbor/adjunction.hpp"
#include "arbor/canonical.hpp"
#include "arbor/colimits.hpp"
#include "arbor/decide.hpp"
#include "arbor/equality.hpp"
#include "arbor/errors.hpp"
#include "arbor/homomorphism.hpp"

namespace arbor {

namespace {

struct PairData {
  MatchedPair pair;
  Corestriction co;
  Quotient l;  // L(S_v)
};

std::vector<Element> carrier_order(const EFCoalgebra& r) {
  return std::vector<Element>(r.by_index.begin(), r.by_index.end());
}

std::vector<PairData> matched_pairs_detail(const Structure& a, const Structure& e, int k,
                                           const Limits& limits) {
  require_same_vocabulary(a, e);
  const EFCoalgebra ra = ef_adjoint_R(a, k, limits);
  const EFCoalgebra re = ef_adjoint_R(e, k, limits);
  CodeTable table;
  const std::vector<int> pa = path_codes(ra.carrier, table);
  const std::vector<int> pe = path_codes(re.carrier, table);

  std::vector<std::pair<std::optional<Element>, std::optional<Element>>> candidates{{}};
  for (Element x : carrier_order(ra)) {
    for (Element y : carrier_order(re)) {
      if (pa[x] == pe[y]) candidates.emplace_back(x, y);
    }
  }

  std::vector<PairData> out;
  for (const auto& [x, y] : candidates) {
    const PathEmbedding v = y ? path_to(re.carrier, *y) : PathEmbedding{};
    Corestriction co = corestriction(re.carrier, v);
    Quotient l = collapse_I(co.structure.base());
    const Tuple u = x ? ra.sequences[*x] : Tuple{};
    PartialMap fixed(l.structure.size());
    bool consistent = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto& slot = fixed[l.map[co.co.chain[i]]];
      if (slot && *slot != u[i]) consistent = false;
      slot = u[i];
    }
    if (!consistent) continue;
    auto g = find_homomorphism(l.structure, a, fixed);
    if (!g) continue;
    MatchedPair pair{u, y ? re.sequences[*y] : Tuple{}, std::move(*g)};
    out.push_back({std::move(pair), std::move(co), std::move(l)});
  }
  return out;
}

}  // namespace

std::vector<MatchedPair> find_matched_pairs(const Structure& a, const Structure& e, int k,
                                            const Limits& limits) {
  std::vector<MatchedPair> out;
  for (auto& d : matched_pairs_detail(a, e, k, limits)) out.push_back(std::move(d.pair));
  return out;
}

bool verify_section(const ElementMap& section, const ElementMap& retraction, const Structure& a,
                    const Structure& b) {
  if (section.size() != a.size() || retraction.size() != b.size()) return false;
  for (Element x : section) {
    if (x >= b.size()) return false;
  }
  for (Element x : retraction) {
    if (x >= a.size()) return false;
  }
  return is_homomorphism(section, a, b) && is_homomorphism(retraction, b, a) &&
         compose(section, retraction) == identity_map(a.size());
}

Extension extend_once(const Structure& a, int k, const EnvironmentFamily& env,
                      const Limits& limits) {
  CodeTable table;
  std::set<std::pair<Tuple, int>> seen;
  std::deque<Pushout> squares;
  std::size_t total = a.size();
  for (const EnvironmentMember& member : env.members) {
    for (PairData& d : matched_pairs_detail(a, member.structure, k, limits)) {
      const int code = marked_forest_code(d.co.structure, d.co.co, table);
      if (!seen.emplace(d.pair.u, code).second) continue;
      // L(P) is the induced substructure of a on the entries of u.
      auto [lp, to_a] = induced_substructure(a, d.pair.u);
      ElementMap to_l(lp.size());
      for (Element x = 0; x < lp.size(); ++x) {
        const auto i = std::find(d.pair.u.begin(), d.pair.u.end(), to_a[x]) - d.pair.u.begin();
        to_l[x] = d.l.map[d.co.co.chain[i]];
      }
      squares.push_back(pushout(lp, a, to_a, d.l.structure, to_l));
      total += squares.back().structure.size() - a.size();
      if (total > limits.carrier_cap) {
        throw SizeCapExceeded("extension would have more than " +
                              std::to_string(limits.carrier_cap) + " elements");
      }
    }
  }
  std::vector<Leg> legs;
  for (const Pushout& p : squares) legs.push_back({&p.structure, p.from_a});
  WidePushout wide = wide_pushout(a, legs);

  Extension out;
  out.legs = squares.size();
  out.b = std::move(wide.colimit);
  out.section = std::move(wide.from_source);
  PartialMap fixed(out.b.size());
  for (Element x = 0; x < a.size(); ++x) fixed[out.section[x]] = x;
  auto retraction = find_homomorphism(out.b, a, fixed);
  if (!retraction) throw Error("extension step produced no retraction");
  out.retraction = std::move(*retraction);
  if (!verify_section(out.section, out.retraction, a, out.b)) {
    throw Error("extension step failed its section certificate");
  }
  return out;
}

std::vector<ExtensionStep> extend_iterated(const Structure& a, int k, const EnvironmentFamily& env,
                                           int steps, const Limits& limits) {
  if (steps < 0) throw MalformedInput("number of steps must be non-negative");
  std::vector<ExtensionStep> chain;
  ElementMap composite = identity_map(a.size());
  ElementMap composite_retraction = identity_map(a.size());
  const Structure* current = &a;
  for (int i = 0; i < steps; ++i) {
    Extension step = extend_once(*current, k, env, limits);
    composite = compose(composite, step.section);
    composite_retraction = compose(step.retraction, composite_retraction);
    chain.push_back({std::move(step), composite, composite_retraction});
    current = &chain.back().step.b;
  }
  return chain;
}

namespace {

// Type codes of sequences over J s, computed without building R_k(s).
class SequenceTypes {
 public:
  SequenceTypes(const Structure& s, const Vocabulary& jv, int k, CodeTable& table)
      : s_(s), jv_(jv), k_(k), table_(table) {
    for (std::size_t r = 0; r < jv.size(); ++r) {
      if (jv.name(r) == kEqualitySymbol) {
        symbol_.push_back(kEquality);
      } else {
        symbol_.push_back(s.vocabulary().index_of(jv.name(r)));
      }
    }
  }

  int label(const Tuple& seq) {
    const std::size_t top = seq.size() - 1;
    Profile profile;
    Tuple image;
    for (std::size_t r = 0; r < jv_.size(); ++r) {
      const int arity = jv_.arity(r);
      std::vector<std::uint32_t> pos(arity, 0);
      while (true) {
        if (std::find(pos.begin(), pos.end(), top) != pos.end()) {
          bool holds;
          if (symbol_[r] == kEquality) {
            holds = seq[pos[0]] == seq[pos[1]];
          } else {
            image.clear();
            for (std::uint32_t p : pos) image.push_back(seq[p]);
            holds = s_.holds(symbol_[r], image);
          }
          if (holds) {
            std::vector<std::uint32_t> entry{static_cast<std::uint32_t>(r)};
            entry.insert(entry.end(), pos.begin(), pos.end());
            profile.push_back(std::move(entry));
          }
        }
        int p = arity - 1;
        while (p >= 0 && pos[p] == top) pos[p--] = 0;
        if (p < 0) break;
        ++pos[p];
      }
    }
    std::sort(profile.begin(), profile.end());
    return table_.label(profile);
  }

  int path_code(const Tuple& seq) {
    int code = CodeTable::kEmptyPath;
    Tuple prefix;
    for (Element x : seq) {
      prefix.push_back(x);
      code = table_.path(code, label(prefix));
    }
    return code;
  }

  int reduced(const Tuple& seq) {
    const int lab = seq.empty() ? -1 : label(seq);
    if (static_cast<int>(seq.size()) == k_) return table_.reduced(lab, {});
    if (auto it = memo_.find(seq); it != memo_.end()) return it->second;
    std::vector<int> children;
    Tuple next = seq;
    next.push_back(0);
    for (Element x = 0; x < s_.size(); ++x) {
      next.back() = x;
      children.push_back(reduced(next));
    }
    const int code = table_.reduced(lab, std::move(children));
    memo_.emplace(seq, code);
    return code;
  }

 private:
  static constexpr std::size_t kEquality = ~std::size_t{0};
  const Structure& s_;
  const Vocabulary& jv_;
  int k_;
  CodeTable& table_;
  std::vector<std::size_t> symbol_;
  std::map<Tuple, int> memo_;
};

void sequences_upto(std::size_t n, int k, Tuple& current, std::vector<Tuple>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == k) return;
  for (Element x = 0; x < n; ++x) {
    current.push_back(x);
    sequences_upto(n, k, current, out);
    current.pop_back();
  }
}

}  // namespace

RelativeReport check_relative_extendability(const ElementMap& h, const Structure& a,
                                            const Structure& b, int k,
                                            const EnvironmentFamily& env) {
  require_same_vocabulary(a, b);
  if (k < 1) throw MalformedInput("resource parameter k must be at least 1");
  if (!is_homomorphism(h, a, b)) throw MalformedInput("h is not a homomorphism from a to b");
  if (a.vocabulary().contains(kEqualitySymbol)) {
    throw MalformedInput("structures must not use the symbol I");
  }
  const Vocabulary jv = a.vocabulary().with(std::string(kEqualitySymbol), 2);
  CodeTable table;
  SequenceTypes ta(a, jv, k, table);
  SequenceTypes tb(b, jv, k, table);

  struct Side {
    Tuple seq;
    int path;
    int code;
  };
  std::vector<Side> a_side;
  {
    std::vector<Tuple> seqs;
    Tuple cur;
    sequences_upto(a.size(), k, cur, seqs);
    for (auto& s : seqs) a_side.push_back({s, ta.path_code(s), ta.reduced(s)});
  }

  auto mutual = [&](int x, int y) { return table.simulates(x, y) && table.simulates(y, x); };
  std::map<std::tuple<int, int, int>, bool> memo;

  RelativeReport report;
  for (std::size_t ei = 0; ei < env.members.size(); ++ei) {
    const Structure& e = env.members[ei].structure;
    require_same_vocabulary(a, e);
    SequenceTypes te(e, jv, k, table);
    std::vector<Tuple> e_seqs;
    Tuple cur;
    sequences_upto(e.size(), k, cur, e_seqs);
    std::vector<int> e_path;
    std::vector<int> e_code;
    for (const auto& t : e_seqs) {
      e_path.push_back(te.path_code(t));
      e_code.push_back(te.reduced(t));
    }
    for (std::size_t ni = 0; ni < e_seqs.size(); ++ni) {
      const Tuple& n = e_seqs[ni];
      for (const Side& m : a_side) {
        if (m.seq.size() != n.size() || m.path != e_path[ni]) continue;
        if (!mutual(m.code, e_code[ni])) continue;
        ++report.matched_pairs;
        Tuple hm;
        for (Element x : m.seq) hm.push_back(h[x]);
        const int hm_path = tb.path_code(hm);
        const int hm_code = tb.reduced(hm);
        for (std::size_t pi = 0; pi < e_seqs.size(); ++pi) {
          const Tuple& np = e_seqs[pi];
          if (np.size() < n.size() || !std::equal(n.begin(), n.end(), np.begin())) continue;
          ++report.extensions_checked;
          bool found = false;
          if (hm_path == e_path[ni]) {
            auto key = std::make_tuple(hm_code, e_path[pi], e_code[pi]);
            if (auto it = memo.find(key); it != memo.end()) {
              found = it->second;
            } else {
              // Path codes of the prefixes of n' beyond n.
              std::vector<int> targets;
              Tuple prefix = n;
              for (std::size_t i = n.size(); i < np.size(); ++i) {
                prefix.push_back(np[i]);
                targets.push_back(te.path_code(prefix));
              }
              auto search = [&](int code, std::size_t depth, auto&& self) -> bool {
                if (depth == targets.size()) return mutual(code, e_code[pi]);
                const int parent_path = depth == 0 ? hm_path : targets[depth - 1];
                const std::vector<int> children = table.reduced_children(code);
                for (int c : children) {
                  if (table.path(parent_path, table.reduced_label(c)) != targets[depth]) continue;
                  if (self(c, depth + 1, self)) return true;
                }
                return false;
              };
              found = search(hm_code, 0, search);
              memo.emplace(key, found);
            }
          }
          if (!found) {
            report.holds = false;
            report.counterexample = RelativeCounterexample{ei, m.seq, n, np};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace arbor
