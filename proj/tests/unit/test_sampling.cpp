// Copyright 2026 The bdtweet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bdtweet/error.hpp"
#include "bdtweet/levenshtein.hpp"
#include "bdtweet/rng.hpp"
#include "bdtweet/sampling.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace bdtweet {
namespace {

using testing::corpus_with_counts;
using testing::tweet;

constexpr Label D = Label::Defect;
constexpr Label P = Label::PossibleDefect;
constexpr Label N = Label::NonDefect;

std::map<std::string, std::size_t> id_counts(const Corpus& c) {
  std::map<std::string, std::size_t> out;
  for (const auto& item : c.items()) {
    const std::string base = item.tweet.id.substr(0, item.tweet.id.find('#'));
    ++out[base];
  }
  return out;
}

// Random majority-heavy corpus whose texts are small variations on a few
// stems, so that similarity thresholds actually bite.
Corpus random_text_corpus(Rng& rng, std::size_t n) {
  static const std::vector<std::string> stems = {
      "my baby has a heart defect", "so happy for my friend today",
      "watching the game tonight", "my son was born with clubfoot"};
  std::vector<AnnotatedTweet> items;
  for (std::size_t i = 0; i < n; ++i) {
    std::string text = stems[rng.below(stems.size())];
    const std::size_t edits = rng.below(6);
    for (std::size_t e = 0; e < edits; ++e) {
      text[rng.below(text.size())] = static_cast<char>('a' + rng.below(26));
    }
    const std::size_t r = rng.below(10);
    const Label l = r == 0 ? D : (r == 1 ? P : N);
    items.push_back(tweet("t" + std::to_string(i), text, l));
  }
  return Corpus(std::move(items));
}

TEST(SimilarityThreshold, Range) {
  EXPECT_NO_THROW(SimilarityThreshold(1.0));
  EXPECT_NO_THROW(SimilarityThreshold(0.01));
  EXPECT_THROW(SimilarityThreshold(0.0), InvalidArgument);
  EXPECT_THROW(SimilarityThreshold(1.5), InvalidArgument);
  EXPECT_THROW(SimilarityThreshold(std::nan("")), InvalidArgument);
}

TEST(UndersampleSimilar, HandCase) {
  const Corpus c({tweet("a", "the cat sat"), tweet("b", "the cat sat!"),
                  tweet("m", "the cat sat", D), tweet("c", "dogs bark")});
  // ratio("the cat sat", "the cat sat!") = 22/23 > 0.9
  const auto out = undersample_similar_majority(c, SimilarityThreshold(0.9));
  std::vector<std::string> ids;
  for (const auto& item : out.corpus.items()) ids.push_back(item.tweet.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "m", "c"}));
  EXPECT_EQ(out.report.method, "similar_majority");
  EXPECT_EQ(out.report.output[label_index(N)], 2u);
  // k = 1 never drops anything (ratio > 1 is impossible).
  EXPECT_EQ(undersample_similar_majority(c, SimilarityThreshold(1.0)).corpus.size(), 4u);
}

TEST(UndersampleSimilar, Property) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus c = random_text_corpus(rng, 60);
    const double k = 0.7 + 0.3 * rng.unit();
    const auto out = undersample_similar_majority(c, SimilarityThreshold(k));
    std::set<std::string> kept;
    for (const auto& item : out.corpus.items()) kept.insert(item.tweet.id);
    std::vector<std::string> retained;
    for (const auto& item : c.items()) {
      if (item.label != N) {
        EXPECT_TRUE(kept.contains(item.tweet.id));
        continue;
      }
      bool similar = false;
      for (const auto& r : retained) similar = similar || levenshtein_ratio(item.tweet.text, r) > k;
      EXPECT_EQ(kept.contains(item.tweet.id), !similar);
      if (!similar) retained.push_back(item.tweet.text);
    }
  }
}

TEST(UndersampleNearFn, HandCaseAndScores) {
  const Corpus c({tweet("a", "my baby has a cleft lip"), tweet("b", "lovely weather"),
                  tweet("d", "my baby has a cleft lip", D)});
  const std::vector<Tweet> fn = {Tweet{"f", "u", "my baby has a cleft lip!"}};
  const auto scores = near_fn_scores(c, fn);
  ASSERT_EQ(scores.size(), 3u);
  EXPECT_DOUBLE_EQ(scores[0], 46.0 / 47.0);
  EXPECT_EQ(scores[2], 0.0);
  const auto out = undersample_near_fn(c, fn, SimilarityThreshold(0.9));
  EXPECT_EQ(out.corpus.size(), 2u);
  EXPECT_EQ(out.corpus[0].tweet.id, "b");
  EXPECT_EQ(out.report.method, "near_false_negative");
}

TEST(UndersampleNearFn, EmptyFnSetWarns) {
  const Corpus c = corpus_with_counts(1, 1, 5);
  const auto out = undersample_near_fn(c, {}, SimilarityThreshold(0.5));
  EXPECT_EQ(out.corpus.items(), c.items());
  ASSERT_EQ(out.report.warnings.size(), 1u);
}

TEST(UndersampleNearFn, RemovesExactlyScoresAboveK) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus c = random_text_corpus(rng, 50);
    const Corpus fn_src = random_text_corpus(rng, 5);
    const std::vector<Tweet> fn = fn_src.tweets();
    const double k = 0.6 + 0.4 * rng.unit();
    const auto scores = near_fn_scores(c, fn);
    const auto out = undersample_near_fn(c, fn, SimilarityThreshold(k));
    std::set<std::string> kept;
    for (const auto& item : out.corpus.items()) kept.insert(item.tweet.id);
    for (std::size_t i = 0; i < c.size(); ++i) {
      double best = 0.0;
      if (c[i].label == N) {
        for (const auto& f : fn) best = std::max(best, levenshtein_ratio(c[i].tweet.text, f.text));
      }
      EXPECT_DOUBLE_EQ(scores[i], best);
      EXPECT_EQ(kept.contains(c[i].tweet.id), !(c[i].label == N && best > k));
    }
  }
}

TEST(UndersampleRandom, CountsAndDeterminism) {
  const Corpus c = corpus_with_counts(5, 5, 90);
  const auto out = undersample_random(c, 40, 3);
  EXPECT_EQ(out.corpus.size(), 40u);
  EXPECT_EQ(out.corpus.counts(), (ClassCounts{5, 5, 30}));
  EXPECT_EQ(undersample_random(c, 40, 3).corpus.items(), out.corpus.items());
  EXPECT_NE(undersample_random(c, 40, 4).corpus.items(), out.corpus.items());
  EXPECT_EQ(undersample_random(c, 100, 3).corpus.items(), c.items());
  EXPECT_EQ(undersample_random(c, 10, 3).corpus.counts(), (ClassCounts{5, 5, 0}));
  EXPECT_THROW(undersample_random(c, 9, 3), InvalidArgument);
  EXPECT_THROW(undersample_random(c, 101, 3), InvalidArgument);
}

TEST(Oversample, FactorRule) {
  const Corpus c = corpus_with_counts(10, 10, 100);
  const auto out = oversample_replacement(c, 0);
  EXPECT_EQ(out.corpus.size(), 300u);
  EXPECT_EQ(out.corpus.counts(), (ClassCounts{100, 100, 100}));
  for (const auto& [id, n] : id_counts(out.corpus)) {
    EXPECT_EQ(n, id[1] == '2' ? 1u : 10u) << id;
  }
  EXPECT_EQ(out.report.method, "oversample_replacement");
}

TEST(Oversample, IdentityOnBalanced) {
  const Corpus c = corpus_with_counts(7, 7, 7);
  EXPECT_EQ(oversample_replacement(c, 0).corpus.items(), c.items());
}

TEST(Oversample, UnevenClassesAndEmptyMinority) {
  const Corpus c = corpus_with_counts(3, 0, 10);
  const auto out = oversample_replacement(c, 0);
  // floor(10 / 3) = 3
  EXPECT_EQ(out.corpus.counts(), (ClassCounts{9, 0, 10}));
  EXPECT_EQ(out.report.warnings.size(), 1u);
  EXPECT_EQ(out.corpus[13].tweet.id, "c0_0#2");
  EXPECT_THROW(oversample_replacement(corpus_with_counts(2, 2, 0), 0), InvalidArgument);
}

TEST(Oversample, FactorPropertyOverRandomCounts) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng.below(20), p = 1 + rng.below(20), n = 1 + rng.below(200);
    const auto out = oversample_replacement(corpus_with_counts(d, p, n), 0);
    const std::size_t fd = std::max<std::size_t>(1, n / d), fp = std::max<std::size_t>(1, n / p);
    EXPECT_EQ(out.corpus.counts(), (ClassCounts{d * fd, p * fp, n}));
    for (const auto& [id, cnt] : id_counts(out.corpus)) {
      const std::size_t want = id[1] == '0' ? fd : (id[1] == '1' ? fp : 1);
      EXPECT_EQ(cnt, want);
    }
  }
}

TEST(SweepThreshold, FindsSmallestK) {
  std::size_t calls = 0;
  const auto size_at = [&](double k) {
    ++calls;
    return static_cast<std::size_t>(std::floor(k * 100.0));
  };
  const auto got = sweep_threshold(size_at, 37);
  EXPECT_GE(got.size, 37u);
  EXPECT_NEAR(got.k, 0.37, 1e-8);
  EXPECT_GE(got.k, 0.37);
  EXPECT_EQ(calls, 31u);
  const auto unreachable = sweep_threshold(size_at, 500);
  EXPECT_EQ(unreachable.k, 1.0);
  EXPECT_EQ(unreachable.size, 100u);
}

TEST(SmoteInterpolate, Examples) {
  const SparseVector x = SparseVector::from_dense({1.0, 0.0, 2.0});
  const SparseVector y = SparseVector::from_dense({3.0, 4.0, 2.0});
  EXPECT_EQ(smote_interpolate(x, y, 0.5).to_dense(), (std::vector<double>{2.0, 2.0, 2.0}));
  EXPECT_EQ(smote_interpolate(x, y, 0.0).to_dense(), x.to_dense());
}

TEST(NearestNeighbors, OrderAndTies) {
  const std::vector<SparseVector> pts = {
      SparseVector::from_dense({0.0}), SparseVector::from_dense({1.0}),
      SparseVector::from_dense({-1.0}), SparseVector::from_dense({3.0})};
  std::vector<const SparseVector*> m;
  for (const auto& p : pts) m.push_back(&p);
  EXPECT_EQ(nearest_neighbors(m, 0, 2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(nearest_neighbors(m, 0, 10), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(nearest_neighbors(m, 3, 1), (std::vector<std::size_t>{1}));
}

TEST(Smote, GeometryAndCounts) {
  Rng rng(77);
  std::size_t checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = testing::random_smote_case(rng);
    const auto res = smote(c.vectors, c.labels, 5, trial);
    const auto check = testing::check_smote(c, res, 5);
    EXPECT_EQ(check.bad_layout, 0u) << "trial " << trial;
    EXPECT_EQ(check.bad_count, 0u) << "trial " << trial;
    EXPECT_EQ(check.off_segment, 0u) << "trial " << trial;
    checked += check.synthetic;
    // Deterministic for a fixed seed.
    EXPECT_EQ(smote(c.vectors, c.labels, 5, trial).vectors, res.vectors);
  }
  EXPECT_GT(checked, 100u);
}

TEST(Smote, Errors) {
  const std::vector<SparseVector> v = {SparseVector::from_dense({1.0}),
                                       SparseVector::from_dense({2.0})};
  EXPECT_THROW(smote(v, {D}, 5, 1), InvalidArgument);
  EXPECT_THROW(smote(v, {D, N}, 5, 1), InvalidArgument);
  EXPECT_THROW(smote(v, {D, D}, 0, 1), InvalidArgument);
  const auto res = smote(v, {N, N}, 5, 1);
  EXPECT_EQ(res.vectors.size(), 2u);
  EXPECT_EQ(res.report.warnings.size(), 2u);
}

TEST(SamplingReport, Format) {
  const auto out = undersample_random(corpus_with_counts(1, 1, 4), 3, 9);
  const std::string text = format_sampling_report(out.report);
  EXPECT_EQ(text,
            "[sampling]\n"
            "method = random_undersample\n"
            "param.target_total = 3\n"
            "param.seed = 9\n"
            "input.defect = 1\n"
            "input.possible_defect = 1\n"
            "input.non_defect = 4\n"
            "input.total = 6\n"
            "output.defect = 1\n"
            "output.possible_defect = 1\n"
            "output.non_defect = 1\n"
            "output.total = 3\n");
}

}  // namespace
}  // namespace bdtweet
