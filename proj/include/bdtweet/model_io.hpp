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

#ifndef BDTWEET_MODEL_IO_HPP_
#define BDTWEET_MODEL_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdtweet/feature_space.hpp"
#include "bdtweet/naive_bayes.hpp"
#include "bdtweet/svm.hpp"

namespace bdtweet {

inline constexpr std::string_view kModelFormat = "bdtweet-model";
inline constexpr int kModelVersion = 1;

enum class ClassifierKind : std::uint8_t { Svm, NaiveBayes };
std::string_view classifier_name(ClassifierKind kind);  // "svm", "nb"
std::optional<ClassifierKind> parse_classifier(std::string_view name);

// A trained classifier with everything needed to score raw tweets.
struct ModelBundle {
  ClassifierKind classifier = ClassifierKind::Svm;
  Preprocessor preprocessor;
  FeatureSpace space;
  std::optional<Scaler> scaler;
  std::optional<SvmModel> svm;
  std::optional<NbModel> nb;
  std::vector<std::pair<std::string, std::string>> metadata;

  // `v` is an unscaled vector in the feature space.
  Label predict(const SparseVector& v) const;
  Label predict(const Document& doc) const;
  Label predict(const AnnotatedTweet& tweet) const;
};

// JSON document:
//   format, version, classifier, metadata{},
//   preprocessing{names[], lexicon[{term, variants[]}],
//                 normalization{possessive[], child[], third_person[],
//                               placeholders{...}}},
//   features{ngram_min, ngram_max, min_df, values, clusters, structural,
//            vocabulary[], cluster_source, cluster_paths{token: path}},
//   scaler{min[], max[]} | null,
//   svm{kernel, gamma, cost, class_weights[], dimension, classes[],
//       pairs[{positive, negative, bias, iterations, converged, alpha[],
//              signs[], support_vectors[{indices[], values[]}]}]} | null,
//   nb{event_model, dimension, classes[], log_priors[], log_likelihoods[][],
//      means[][], variances[][]} | null
std::string serialize_model(const ModelBundle& model);
// Throws DataError on malformed documents or an unknown format version.
ModelBundle deserialize_model(std::string_view json_text);
// Standalone feature space: {format: "bdtweet-features", version, features{...}}
// with the same `features` object as the model file.
inline constexpr std::string_view kFeatureSpaceFormat = "bdtweet-features";
std::string serialize_feature_space(const FeatureSpace& space);
FeatureSpace deserialize_feature_space(std::string_view json_text);

void save_model(const ModelBundle& model, const std::filesystem::path& path);
ModelBundle load_model(const std::filesystem::path& path);

}  // namespace bdtweet

#endif  // BDTWEET_MODEL_IO_HPP_
