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

#ifndef BDTWEET_PIPELINE_HPP_
#define BDTWEET_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bdtweet/config.hpp"
#include "bdtweet/corpus.hpp"
#include "bdtweet/evaluation.hpp"
#include "bdtweet/feature_space.hpp"
#include "bdtweet/model_io.hpp"
#include "bdtweet/sampling.hpp"

namespace bdtweet {

// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

// Builds the preprocessor from the name and lexicon paths in `config`
// (either may be empty).
Preprocessor make_preprocessor(const PipelineConfig& config);
// Empty map when no cluster path is configured.
ClusterMap load_cluster_map(const PipelineConfig& config);

// Applies a text-level sampler (similar, near-fn, random, oversample). `none`
// and `smote` return the corpus unchanged with a pass-through report.
SampledCorpus sample_corpus(const Corpus& train, const SamplerOptions& options,
                            const std::vector<Tweet>& fn_tweets = {});

struct TrainResult {
  ModelBundle model;
  SamplingReport sampling;
  std::size_t training_instances = 0;
};

// preprocess -> sample -> featurize -> (SMOTE) -> (scale) -> fit.
TrainResult train_pipeline(const Corpus& train, const PipelineConfig& config,
                           const Preprocessor& preprocessor,
                           const ClusterMap& clusters,
                           const std::vector<Tweet>& fn_tweets = {});

struct EvaluationRun {
  std::vector<Label> predicted;
  EvalReport report;
};
EvaluationRun evaluate_model(const ModelBundle& model, const Corpus& test);

// Prediction file: `id  gold  predicted` with a header line.
std::string format_predictions(const Corpus& corpus,
                               const std::vector<Label>& predicted);
struct PredictionRow {
  std::string id;
  Label gold = Label::NonDefect;
  Label predicted = Label::NonDefect;
};
std::vector<PredictionRow> parse_predictions(std::string_view contents);

// Predictions aligned to `corpus` by id; every corpus id must be present.
std::vector<Label> align_predictions(const Corpus& corpus,
                                     const std::vector<PredictionRow>& rows);

// `feature  information_gain` rows with a header line.
std::string format_ranking(const std::vector<RankedFeature>& ranking);

}  // namespace bdtweet

#endif  // BDTWEET_PIPELINE_HPP_
