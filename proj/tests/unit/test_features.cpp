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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bdtweet/error.hpp"
#include "bdtweet/feature_space.hpp"
#include "bdtweet/features.hpp"
#include "bdtweet/rng.hpp"
#include "support/fixtures.hpp"

namespace bdtweet {
namespace {

using Strings = std::vector<std::string>;

TEST(Ngrams, Examples) {
  EXPECT_EQ(extract_ngrams({"my", "baby"}), (Strings{"my", "baby", "my baby"}));
  EXPECT_EQ(extract_ngrams({"a"}), (Strings{"a"}));
  EXPECT_EQ(extract_ngrams({"a", "b", "c"}),
            (Strings{"a", "b", "c", "a b", "b c", "a b c"}));
  EXPECT_TRUE(extract_ngrams({}).empty());
  EXPECT_EQ(extract_ngrams({"a", "b", "c"}, 2, 2), (Strings{"a b", "b c"}));
}

TEST(Ngrams, CountProperty) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Strings tokens(rng.below(12), "t");
    for (auto& t : tokens) t += std::to_string(rng.below(4));
    const std::size_t lo = 1 + rng.below(3), hi = lo + rng.below(3);
    std::size_t expected = 0;
    for (std::size_t n = lo; n <= hi; ++n) {
      if (tokens.size() >= n) expected += tokens.size() - n + 1;
    }
    EXPECT_EQ(extract_ngrams(tokens, lo, hi).size(), expected);
  }
}

TEST(Clusters, ParseAndOverwrite) {
  const ClusterMap m = parse_clusters("0101\tbby\t384\n");
  ASSERT_EQ(m.paths.size(), 1u);
  EXPECT_EQ(m.paths.at("bby"), "0101");
  EXPECT_TRUE(parse_clusters("").paths.empty());
  const ClusterMap dup = parse_clusters("0101 bby 3\n0111 bby 4\n");
  EXPECT_EQ(dup.paths.size(), 1u);
  EXPECT_EQ(dup.paths.at("bby"), "0111");
  EXPECT_EQ(dup.warnings.size(), 1u);
}

TEST(Clusters, MalformedLineNamesLine) {
  for (const char* bad : {"0101 bby 3\n0102 x 1\n", "0101 bby 3\n01 x\n", "0101 bby 3\n01 x y\n"}) {
    try {
      parse_clusters(bad);
      ADD_FAILURE() << bad;
    } catch (const DataError& e) {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST(Clusters, Features) {
  const ClusterMap m = parse_clusters("0101 bby 3\n0101 babby 2\n11 happy 9\n");
  EXPECT_EQ(cluster_features({"bby"}, m), (Strings{"cluster:0101"}));
  EXPECT_TRUE(cluster_features({"zzz"}, m).empty());
  EXPECT_EQ(cluster_features({"bby", "babby"}, m), (Strings{"cluster:0101", "cluster:0101"}));
  EXPECT_EQ(cluster_tokens("My BBY, so happy!! #love"),
            (Strings{"my", "bby", "so", "happy", "#love"}));
}

TEST(Clusters, RestrictedToVocabulary) {
  const ClusterMap m = parse_clusters("0101 bby 3\n11 happy 9\n");
  const Vocabulary v({"cluster:11", "happy"}, 1);
  const ClusterMap r = m.restricted_to(v);
  EXPECT_EQ(r.paths.size(), 1u);
  EXPECT_TRUE(r.paths.contains("happy"));
}

TEST(Structural, Examples) {
  EXPECT_EQ(structural_features("ab cd"), (StructuralFeatures{5, 2}));
  EXPECT_EQ(structural_features(""), (StructuralFeatures{0, 0}));
  EXPECT_EQ(structural_features("a  b"), (StructuralFeatures{4, 2}));
  EXPECT_EQ(structural_features("b\xc3\xa9\xc3\xa9 \xf0\x9f\x98\x8d"), (StructuralFeatures{5, 2}));
}

TEST(Vocabulary, MinDfAndOrder) {
  const std::vector<Strings> docs = {{"my baby", "zeta"}, {"my baby", "alpha", "alpha"},
                                     {"my baby", "alpha"}};
  const Vocabulary v = build_vocabulary(docs, 2);
  EXPECT_EQ(v.names(), (Strings{"alpha", "my baby"}));
  EXPECT_EQ(v.index_of("my baby"), 1);
  EXPECT_EQ(v.index_of("zeta"), -1);
  EXPECT_EQ(build_vocabulary(docs, 2).names(), v.names());
  const Vocabulary s = build_vocabulary(docs, 3, true);
  EXPECT_EQ(s.names(), (Strings{"my baby", std::string(kCharLengthFeature),
                                std::string(kWordLengthFeature)}));
  EXPECT_EQ(s.kind(1), FeatureKind::Structural);
  EXPECT_EQ(s.kind(0), FeatureKind::NGram);
  EXPECT_THROW(Vocabulary({"a", "a"}, 1), InvalidArgument);
  EXPECT_EQ(Vocabulary({"cluster:01"}, 1).kind(0), FeatureKind::Cluster);
}

TEST(Vectorize, Examples) {
  const Vocabulary v({"my baby"}, 1);
  EXPECT_EQ(vectorize({"my baby", "my baby", "my baby"}, nullptr, v),
            SparseVector(1, {0}, {1.0}));
  EXPECT_EQ(vectorize({"my baby", "my baby", "my baby"}, nullptr, v, ValueMode::Count),
            SparseVector(1, {0}, {3.0}));
  const Vocabulary s = build_vocabulary({{"x"}}, 1, true);  // 2 structural, then x
  const StructuralFeatures st{7, 2};
  EXPECT_EQ(vectorize({"oov"}, &st, s), SparseVector(3, {0, 1}, {7.0, 2.0}));
  const Vocabulary only_struct = build_vocabulary({}, 1, true);
  const StructuralFeatures zero{0, 0};
  const StructuralFeatures one{3, 1};
  EXPECT_EQ(vectorize({}, &one, only_struct).nnz(), 2u);
  EXPECT_EQ(vectorize({}, &zero, only_struct).dimension(), 2u);
}

TEST(SparseVectorType, Invariants) {
  EXPECT_THROW(SparseVector(3, {1, 1}, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(SparseVector(3, {2, 1}, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(SparseVector(3, {3}, {1.0}), InvalidArgument);
  EXPECT_THROW(SparseVector(3, {0}, {std::numeric_limits<double>::infinity()}),
               InvalidArgument);
  EXPECT_THROW(SparseVector(3, {0}, {}), InvalidArgument);
  const SparseVector a = SparseVector::from_dense({0.0, 2.0, 0.0, 1.0});
  EXPECT_EQ(a.nnz(), 2u);
  EXPECT_EQ(a.at(1), 2.0);
  EXPECT_EQ(a.at(2), 0.0);
  const SparseVector b = SparseVector::from_dense({1.0, 1.0, 0.0, 0.0});
  EXPECT_EQ(dot(a, b), 2.0);
  EXPECT_EQ(squared_distance(a, b), 1.0 + 1.0 + 1.0);
}

TEST(ScalerTest, Examples) {
  const std::vector<SparseVector> train = {SparseVector::from_dense({2.0, 5.0}),
                                           SparseVector::from_dense({4.0, 5.0})};
  const Scaler s = fit_scaler(train, 2);
  EXPECT_EQ(s.scale(0, 2.0), 0.0);
  EXPECT_EQ(s.scale(0, 4.0), 1.0);
  EXPECT_EQ(s.scale(0, 3.0), 0.5);
  EXPECT_EQ(s.scale(0, 6.0), 2.0);
  EXPECT_EQ(s.scale(1, 5.0), 0.0);
  EXPECT_EQ(s.scale(1, 9.0), 0.0);
  // Absent value 0 in column 0 maps below the range: (0 - 2) / 2.
  EXPECT_EQ(s.apply(SparseVector(2)).to_dense(), (std::vector<double>{-1.0, 0.0}));
  EXPECT_EQ(s.apply(train[1]).to_dense(), (std::vector<double>{1.0, 0.0}));
}

TEST(ScalerTest, PropertyRanges) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng.below(6);
    std::vector<SparseVector> train;
    for (int i = 0; i < 10; ++i) {
      std::vector<double> dense(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        dense[j] = j % 2 == 0 ? static_cast<double>(rng.below(2))
                              : static_cast<double>(rng.below(50));
      }
      train.push_back(SparseVector::from_dense(dense));
    }
    const Scaler s = fit_scaler(train, dim);
    for (std::size_t j = 0; j < dim; ++j) EXPECT_LE(s.min()[j], s.max()[j]);
    for (const auto& v : train) {
      const auto d = s.apply(v).to_dense();
      for (std::size_t j = 0; j < dim; ++j) {
        EXPECT_GE(d[j], 0.0);
        EXPECT_LE(d[j], 1.0);
        if (j % 2 == 0) EXPECT_TRUE(d[j] == 0.0 || d[j] == 1.0);
      }
    }
  }
}

double entropy_oracle(const std::vector<double>& counts) {
  double total = 0.0, h = 0.0;
  for (double c : counts) total += c;
  for (double c : counts) {
    if (c > 0.0) h -= (c / total) * std::log(c / total);
  }
  return total > 0.0 ? h / std::log(2.0) : 0.0;
}

TEST(InformationGain, Examples) {
  const Vocabulary v({"const", "perfect"}, 1);
  const std::vector<SparseVector> x = {
      SparseVector(2, {0, 1}, {1.0, 1.0}), SparseVector(2, {0, 1}, {1.0, 1.0}),
      SparseVector(2, {0}, {1.0}), SparseVector(2, {0}, {1.0})};
  const std::vector<Label> y = {Label::Defect, Label::Defect, Label::NonDefect,
                                Label::NonDefect};
  const auto ranked = information_gain(x, y, v);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].name, "perfect");
  EXPECT_NEAR(ranked[0].information_gain, 1.0, 1e-15);
  EXPECT_EQ(ranked[1].information_gain, 0.0);
  EXPECT_THROW(information_gain(x, {Label::Defect}, v), InvalidArgument);
}

TEST(InformationGain, MatchesOracleAndBounds) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng.below(8), n = 5 + rng.below(40);
    Strings names;
    for (std::size_t j = 0; j < dim; ++j) names.push_back("f" + std::to_string(j));
    const Vocabulary v(names, 1);
    std::vector<SparseVector> x;
    std::vector<Label> y, y_perm;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> dense(dim);
      for (auto& d : dense) d = static_cast<double>(rng.below(2));
      x.push_back(SparseVector::from_dense(dense));
      y.push_back(kAllLabels[rng.below(3)]);
      // Relabeling permutation D->P->N->D.
      y_perm.push_back(kAllLabels[(label_index(y.back()) + 1) % 3]);
    }
    std::vector<double> cls(3, 0.0);
    for (Label l : y) cls[label_index(l)] += 1.0;
    const double hy = entropy_oracle(cls);
    const auto ranked = information_gain(x, y, v);
    const auto permuted = information_gain(x, y_perm, v);
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      const std::size_t j = static_cast<std::size_t>(v.index_of(ranked[r].name));
      std::vector<double> with(3, 0.0), without(3, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        (x[i].at(static_cast<std::uint32_t>(j)) != 0.0 ? with : without)[label_index(y[i])] += 1.0;
      }
      double nw = with[0] + with[1] + with[2];
      const double expected = std::max(
          0.0, hy - nw / n * entropy_oracle(with) - (n - nw) / n * entropy_oracle(without));
      EXPECT_NEAR(ranked[r].information_gain, expected, 1e-12);
      EXPECT_GE(ranked[r].information_gain, 0.0);
      EXPECT_LE(ranked[r].information_gain, hy + 1e-12);
      const auto same = std::find_if(permuted.begin(), permuted.end(), [&](const auto& f) {
        return f.name == ranked[r].name;
      });
      ASSERT_NE(same, permuted.end());
      EXPECT_NEAR(ranked[r].information_gain, same->information_gain, 1e-12);
      if (r > 0) {
        EXPECT_TRUE(ranked[r - 1].information_gain > ranked[r].information_gain ||
                    (ranked[r - 1].information_gain == ranked[r].information_gain &&
                     ranked[r - 1].name < ranked[r].name));
      }
    }
  }
}

Lexicon small_lexicon() { return parse_lexicon("cleft lip\nclubfoot|club foot\n"); }

TEST(PreprocessorTest, SpanSources) {
  const Preprocessor pre(parse_name_lexicon("Emma\n"), NormalizationConfig{}, small_lexicon());
  AnnotatedTweet stored = testing::tweet("a", "Emma has a cleft lip", Label::Defect);
  stored.match_span = Span{0, 4};
  EXPECT_EQ(pre.span_for(stored), (Span{0, 4}));
  const AnnotatedTweet found = testing::tweet("b", "Emma has a cleft lip", Label::Defect);
  EXPECT_EQ(pre.span_for(found), (Span{11, 20}));
  EXPECT_EQ(pre.span_for(testing::tweet("c", "nothing here")), std::nullopt);
  const Document doc = pre.document(found);
  EXPECT_EQ(doc.tokens, (Strings{"<name>", "ha", "a", "<bdterm>"}));
  EXPECT_EQ(doc.text, "Emma has a cleft lip");
  EXPECT_EQ(doc.label, Label::Defect);
  EXPECT_EQ(Preprocessor().span_for(found), std::nullopt);
}

std::vector<Document> sample_docs() {
  return {
      {"1", Label::Defect, {"<poss>", "<child>", "ha", "<bdterm>"}, "My son has clubfoot"},
      {"2", Label::NonDefect, {"<poss>", "<child>", "is", "cute"}, "My baby is cute"},
      {"3", Label::NonDefect, {"so", "cute"}, "so cute\tok"},
      {"4", Label::PossibleDefect, {"<bdterm>", "awar"}, "clubfoot awareness!"},
  };
}

TEST(FeatureSpaceTest, FitAndVectorize) {
  const ClusterMap clusters = parse_clusters("01 cute 5\n01 son 2\n11 unused 1\n");
  FeatureOptions opt;
  const FeatureSpace space = FeatureSpace::fit(sample_docs(), opt, clusters);
  const auto& names = space.vocabulary().names();
  EXPECT_EQ(names, (Strings{"<bdterm>", "<child>", "<poss>", "<poss> <child>", "cluster:01",
                            "cute", std::string(kCharLengthFeature),
                            std::string(kWordLengthFeature)}));
  EXPECT_EQ(space.clusters().paths.size(), 2u);
  const SparseVector v = space.vectorize(sample_docs()[2]);
  EXPECT_EQ(v, SparseVector(8, {4, 5, 6, 7}, {1.0, 1.0, 10.0, 3.0}));
  EXPECT_EQ(space.vectorize(sample_docs()), space.vectorize(sample_docs()));
  opt.ngram_min = 0;
  EXPECT_THROW(opt.validate(), InvalidArgument);
  opt.ngram_min = 3;
  opt.ngram_max = 2;
  EXPECT_THROW(opt.validate(), InvalidArgument);
}

TEST(FeatureSpaceTest, SharedClusterProperty) {
  const ClusterMap clusters = parse_clusters("0101 bby 3\n0101 babby 2\n");
  FeatureOptions opt;
  opt.min_df = 1;
  const std::vector<Document> docs = {{"a", Label::NonDefect, {"bby"}, "bby"},
                                      {"b", Label::NonDefect, {"babbi"}, "babby"}};
  const FeatureSpace space = FeatureSpace::fit(docs, opt, clusters);
  const auto col = space.vocabulary().index_of("cluster:0101");
  ASSERT_GE(col, 0);
  EXPECT_EQ(space.vectorize(docs[0]).at(static_cast<std::uint32_t>(col)), 1.0);
  EXPECT_EQ(space.vectorize(docs[1]).at(static_cast<std::uint32_t>(col)), 1.0);
}

TEST(DocumentsIo, RoundTrip) {
  const auto docs = sample_docs();
  const std::string text = format_documents(docs);
  EXPECT_EQ(text.substr(0, text.find('\n')), "id\tlabel\ttokens\ttext");
  EXPECT_EQ(parse_documents(text), docs);
  EXPECT_EQ(document_labels(docs)[0], Label::Defect);
  EXPECT_THROW(parse_documents("id\tlabel\ttokens\ttext\n1\tbogus\ta\tb\n"), DataError);
}

TEST(VectorsIo, RoundTrip) {
  LabeledVectors data;
  data.dimension = 4;
  data.ids = {"a", "b"};
  data.labels = {Label::Defect, Label::NonDefect};
  data.vectors = {SparseVector(4, {0, 3}, {0.1, 1.0 / 3.0}), SparseVector(4)};
  const std::string text = format_vectors(data);
  const LabeledVectors back = parse_vectors(text);
  EXPECT_EQ(back.dimension, 4u);
  EXPECT_EQ(back.ids, data.ids);
  EXPECT_EQ(back.labels, data.labels);
  EXPECT_EQ(back.vectors, data.vectors);
  EXPECT_THROW(parse_vectors("dimension\t2\na\tdefect\t5:1\n"), DataError);
  EXPECT_THROW(parse_vectors("a\tdefect\t0:1\n"), DataError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double x = (rng.unit() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(20)) - 10);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

}  // namespace
}  // namespace bdtweet
