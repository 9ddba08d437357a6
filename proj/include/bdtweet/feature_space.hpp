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

#ifndef BDTWEET_FEATURE_SPACE_HPP_
#define BDTWEET_FEATURE_SPACE_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bdtweet/corpus.hpp"
#include "bdtweet/features.hpp"
#include "bdtweet/lexicon.hpp"
#include "bdtweet/normalize.hpp"

namespace bdtweet {

struct FeatureOptions {
  std::size_t ngram_min = 1;
  std::size_t ngram_max = 3;
  std::size_t min_df = 2;
  ValueMode values = ValueMode::Binary;
  bool clusters = true;
  bool structural = true;
  void validate() const;
};

// A normalized tweet: classic-pipeline tokens plus the raw text, which the
// cluster and structural features read.
struct Document {
  std::string id;
  Label label = Label::NonDefect;
  std::vector<std::string> tokens;
  std::string text;
  friend bool operator==(const Document&, const Document&) = default;
};

// Preprocessed-document file: `id  label  tokens  text`, tokens joined by
// single spaces, text escaped like corpus files.
std::string format_documents(const std::vector<Document>& docs);
std::vector<Document> parse_documents(std::string_view contents);
std::vector<Document> load_documents(const std::filesystem::path& path);
std::vector<Label> document_labels(const std::vector<Document>& docs);

// Everything needed to turn a raw tweet into a feature vector.
class Preprocessor {
 public:
  Preprocessor() : Preprocessor(NameLexicon{}, NormalizationConfig{}, Lexicon{}) {}
  Preprocessor(NameLexicon names, NormalizationConfig config, Lexicon lexicon);

  const NameLexicon& names() const { return names_; }
  const NormalizationConfig& config() const { return config_; }
  const Lexicon& lexicon() const { return lexicon_; }

  // The tweet's stored span wins; otherwise the first post-filtered lexicon
  // match (if any) is replaced.
  std::optional<Span> span_for(const AnnotatedTweet& tweet) const;
  Document document(const AnnotatedTweet& tweet) const;
  std::vector<Document> documents(const Corpus& corpus) const;

 private:
  NameLexicon names_;
  NormalizationConfig config_;
  Lexicon lexicon_;
  std::shared_ptr<const MatcherSet> matchers_;
};

// Fitted vocabulary plus the options and cluster map used to build it.
class FeatureSpace {
 public:
  FeatureSpace() = default;
  FeatureSpace(FeatureOptions options, ClusterMap clusters, Vocabulary vocab);

  static FeatureSpace fit(const std::vector<Document>& train,
                          const FeatureOptions& options,
                          const ClusterMap& clusters);

  const FeatureOptions& options() const { return options_; }
  const ClusterMap& clusters() const { return clusters_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  std::size_t dimension() const { return vocab_.size(); }

  // n-gram and cluster feature names (multiset).
  std::vector<std::string> features(const Document& doc) const;
  SparseVector vectorize(const Document& doc) const;
  std::vector<SparseVector> vectorize(const std::vector<Document>& docs) const;

 private:
  FeatureOptions options_;
  ClusterMap clusters_;
  Vocabulary vocab_;
};

// Vector file: a `dimension  V` line, then `id  label  idx:val ...` rows.
struct LabeledVectors {
  std::size_t dimension = 0;
  std::vector<std::string> ids;
  std::vector<Label> labels;
  std::vector<SparseVector> vectors;
};
std::string format_vectors(const LabeledVectors& data);
LabeledVectors parse_vectors(std::string_view contents);
LabeledVectors load_vectors(const std::filesystem::path& path);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace bdtweet

#endif  // BDTWEET_FEATURE_SPACE_HPP_
