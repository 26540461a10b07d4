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

#include "arbor/sampling.hpp"

#include <map>
#include <random>

#include "arbor/errors.hpp"

namespace arbor {

Fragment parse_fragment(std::string_view text) {
  if (text == "fo") return Fragment::FO;
  if (text == "ep-fo") return Fragment::EPFO;
  if (text == "ml") return Fragment::ML;
  if (text == "ep-ml") return Fragment::EPML;
  if (text == "ml-graded") return Fragment::MLGraded;
  throw MalformedInput("unknown fragment '" + std::string(text) + "'");
}

namespace {

class Sampler {
 public:
  Sampler(const Vocabulary& vocab, std::uint64_t seed, const SampleOptions& options)
      : vocab_(vocab), rng_(seed), options_(options) {
    for (std::size_t r = 0; r < vocab.size(); ++r) {
      if (vocab.arity(r) == 1) unary_.push_back(r);
      if (vocab.arity(r) == 2) binary_.push_back(r);
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  FOPtr fo(int rank, std::size_t scope, int depth, bool positive) {
    // Choices: 0 atom, 1 equality, 2 and, 3 or, 4 exists, 5 not, 6 implies, 7 forall.
    std::vector<int> choices;
    if (scope > 0) choices.insert(choices.end(), {0, 0, 1});
    if (depth > 0) {
      choices.insert(choices.end(), {2, 3});
      if (!positive) choices.insert(choices.end(), {5, 6});
    }
    if (rank > 0) {
      choices.insert(choices.end(), {4, 4});
      if (!positive) choices.insert(choices.end(), {7, 7});
    }
    if (choices.empty()) return pick(2) == 0 ? fo::truth() : fo::falsity();
    switch (choices[pick(choices.size())]) {
      case 0: {
        if (vocab_.empty()) return fo::equal(var(pick(scope)), var(pick(scope)));
        const std::size_t r = pick(vocab_.size());
        std::vector<std::string> args;
        for (int i = 0; i < vocab_.arity(r); ++i) args.push_back(var(pick(scope)));
        return fo::atom(vocab_.name(r), std::move(args));
      }
      case 1: return fo::equal(var(pick(scope)), var(pick(scope)));
      case 2: return fo::conj({fo(rank, scope, depth - 1, positive), fo(rank, scope, depth - 1, positive)});
      case 3: return fo::disj({fo(rank, scope, depth - 1, positive), fo(rank, scope, depth - 1, positive)});
      case 4: return fo::exists(var(scope), fo(rank - 1, scope + 1, options_.max_connective_depth, positive));
      case 5: return fo::negate(fo(rank, scope, depth - 1, positive));
      case 6: return fo::implies(fo(rank, scope, depth - 1, positive), fo(rank, scope, depth - 1, positive));
      default: return fo::forall(var(scope), fo(rank - 1, scope + 1, options_.max_connective_depth, positive));
    }
  }

  ModalPtr modal(int rank, int depth, Fragment fragment) {
    const bool positive = fragment == Fragment::EPML;
    // Choices: 0 prop, 1 top/bot, 2 and, 3 or, 4 diamond, 5 not, 6 box.
    std::vector<int> choices{1};
    if (!unary_.empty()) choices.insert(choices.end(), {0, 0, 0});
    if (depth > 0) {
      choices.insert(choices.end(), {2, 3});
      if (!positive) choices.push_back(5);
    }
    if (rank > 0 && !binary_.empty()) {
      choices.insert(choices.end(), {4, 4, 4});
      if (!positive) choices.insert(choices.end(), {6, 6});
    }
    switch (choices[pick(choices.size())]) {
      case 0: return ml::prop(vocab_.name(unary_[pick(unary_.size())]));
      case 1: return pick(2) == 0 ? ml::top() : ml::bottom();
      case 2: return ml::conj({modal(rank, depth - 1, fragment), modal(rank, depth - 1, fragment)});
      case 3: return ml::disj({modal(rank, depth - 1, fragment), modal(rank, depth - 1, fragment)});
      case 5: return ml::negate(modal(rank, depth - 1, fragment));
      case 4: return modality(false, rank, fragment);
      default: return modality(true, rank, fragment);
    }
  }

  ModalPtr modality(bool box, int rank, Fragment fragment) {
    const std::string& r = vocab_.name(binary_[pick(binary_.size())]);
    std::optional<int> grade;
    if (fragment == Fragment::MLGraded && pick(2) == 0) {
      grade = static_cast<int>(pick(static_cast<std::size_t>(options_.max_grade) + 1));
    }
    ModalPtr body = modal(rank - 1, options_.max_connective_depth, fragment);
    return box ? ml::box(r, std::move(body), grade) : ml::diamond(r, std::move(body), grade);
  }

 private:
  static std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

  const Vocabulary& vocab_;
  std::mt19937_64 rng_;
  SampleOptions options_;
  std::vector<std::size_t> unary_;
  std::vector<std::size_t> binary_;
};

}  // namespace

std::vector<FOPtr> sample_fo(const Vocabulary& vocab, int k, Fragment fragment, std::size_t count,
                             std::uint64_t seed, const SampleOptions& options) {
  if (fragment != Fragment::FO && fragment != Fragment::EPFO) {
    throw MalformedInput("first-order sampling needs the fo or ep-fo fragment");
  }
  Sampler sampler(vocab, seed, options);
  std::vector<FOPtr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sampler.fo(k, 0, options.max_connective_depth, fragment == Fragment::EPFO));
  }
  return out;
}

std::vector<ModalPtr> sample_modal(const Vocabulary& vocab, int k, Fragment fragment,
                                   std::size_t count, std::uint64_t seed,
                                   const SampleOptions& options) {
  if (fragment == Fragment::FO || fragment == Fragment::EPFO) {
    throw MalformedInput("modal sampling needs the ml, ep-ml or ml-graded fragment");
  }
  if (!vocab.is_modal()) throw UnsupportedInput("modal sampling needs arities at most 2");
  Sampler sampler(vocab, seed, options);
  std::vector<ModalPtr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sampler.modal(k, options.max_connective_depth, fragment));
  }
  return out;
}

int max_out_degree(const Structure& s) {
  int best = 0;
  for (std::size_t r = 0; r < s.vocabulary().size(); ++r) {
    if (s.vocabulary().arity(r) != 2) continue;
    std::map<Element, int> degree;
    const Relation& rel = s.relation(r);
    for (std::size_t i = 0; i < rel.size(); ++i) best = std::max(best, ++degree[rel.tuple(i)[0]]);
  }
  return best;
}

}  // namespace arbor
