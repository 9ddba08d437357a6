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

#include "bdtweet/pipeline.hpp"

#include <cstdio>
#include <unordered_map>

#include "bdtweet/error.hpp"
#include "bdtweet/naive_bayes.hpp"
#include "bdtweet/parallel.hpp"
#include "bdtweet/svm.hpp"

namespace bdtweet {

namespace {

constexpr std::string_view kPredictionHeader = "id\tgold\tpredicted";

SampledCorpus pass_through(const Corpus& train, std::string method) {
  SampledCorpus out{train, {}};
  out.report.method = std::move(method);
  out.report.input = train.counts();
  out.report.output = out.report.input;
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

Preprocessor make_preprocessor(const PipelineConfig& config) {
  NameLexicon names;
  if (!config.names.empty()) names = load_name_lexicon(config.names);
  Lexicon lexicon;
  if (!config.lexicon.empty()) lexicon = load_lexicon(config.lexicon);
  return Preprocessor(std::move(names), config.normalization, std::move(lexicon));
}

ClusterMap load_cluster_map(const PipelineConfig& config) {
  if (config.clusters.empty() || !config.features.clusters) return {};
  return load_clusters(config.clusters);
}

SampledCorpus sample_corpus(const Corpus& train, const SamplerOptions& options,
                            const std::vector<Tweet>& fn_tweets) {
  switch (options.method) {
    case SamplerKind::None:
      return pass_through(train, "none");
    case SamplerKind::Smote:
      return pass_through(train, "smote");
    case SamplerKind::SimilarMajority:
      return undersample_similar_majority(train, SimilarityThreshold(options.k));
    case SamplerKind::NearFalseNegative:
      return undersample_near_fn(train, fn_tweets, SimilarityThreshold(options.k));
    case SamplerKind::Random:
      return undersample_random(train, options.target, options.seed);
    case SamplerKind::Oversample:
      return oversample_replacement(train, options.seed);
  }
  throw InvalidArgument("unknown sampler");
}

TrainResult train_pipeline(const Corpus& train, const PipelineConfig& config,
                           const Preprocessor& preprocessor,
                           const ClusterMap& clusters,
                           const std::vector<Tweet>& fn_tweets) {
  config.validate(false);
  if (train.empty()) throw InvalidArgument("training corpus is empty");
  SampledCorpus sampled = sample_corpus(train, config.sampler, fn_tweets);
  const auto docs = preprocessor.documents(sampled.corpus);
  // With oversampling the vocabulary comes from the distinct originals.
  const FeatureSpace space =
      config.sampler.method == SamplerKind::Oversample
          ? FeatureSpace::fit(preprocessor.documents(train), config.features,
                              clusters)
          : FeatureSpace::fit(docs, config.features, clusters);
  std::vector<SparseVector> vectors = space.vectorize(docs);
  std::vector<Label> labels = document_labels(docs);

  TrainResult result;
  result.sampling = std::move(sampled.report);
  if (config.sampler.method == SamplerKind::Smote) {
    SmoteResult s = smote(vectors, labels, config.sampler.neighbors,
                          config.sampler.seed);
    vectors = std::move(s.vectors);
    labels = std::move(s.labels);
    result.sampling = std::move(s.report);
  }
  result.training_instances = vectors.size();

  ModelBundle& model = result.model;
  model.classifier = config.classifier;
  model.preprocessor = preprocessor;
  model.space = space;
  if (config.classifier == ClassifierKind::Svm) {
    Scaler scaler = fit_scaler(vectors, space.dimension());
    for (auto& v : vectors) v = scaler.apply(v);
    model.svm = train_svm(vectors, labels, config.svm);
    model.scaler = std::move(scaler);
  } else {
    model.nb = train_nb(vectors, labels, config.nb_event_model);
  }
  model.metadata = {
      {"classifier", std::string(classifier_name(config.classifier))},
      {"sampler", std::string(sampler_name(config.sampler.method))},
      {"sampler_seed", std::to_string(config.sampler.seed)},
      {"training_instances", std::to_string(result.training_instances)},
      {"training_corpus_digest", digest_hex(format_corpus(train))},
      {"dimension", std::to_string(space.dimension())},
  };
  return result;
}

EvaluationRun evaluate_model(const ModelBundle& model, const Corpus& test) {
  EvaluationRun run;
  run.predicted.assign(test.size(), Label::NonDefect);
  parallel_for(test.size(),
               [&](std::size_t i) { run.predicted[i] = model.predict(test[i]); });
  run.report = evaluate(test.labels(), run.predicted);
  run.report.corpus_id = test.provenance();
  for (const auto& [k, v] : model.metadata) {
    if (k == "training_corpus_digest") run.report.model_id = v;
  }
  return run;
}

std::string format_predictions(const Corpus& corpus,
                               const std::vector<Label>& predicted) {
  if (predicted.size() != corpus.size()) {
    throw InvalidArgument("predictions not aligned with corpus");
  }
  std::string out(kPredictionHeader);
  out.push_back('\n');
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out += escape_field(corpus[i].tweet.id);
    out.push_back('\t');
    out += label_name(corpus[i].label);
    out.push_back('\t');
    out += label_name(predicted[i]);
    out.push_back('\n');
  }
  return out;
}

std::vector<PredictionRow> parse_predictions(std::string_view contents) {
  const auto lines = split_lines(contents);
  if (lines.empty() || lines[0] != kPredictionHeader) {
    throw DataError("unexpected prediction header at line 1");
  }
  std::vector<PredictionRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_tabs(lines[i]);
    const auto gold = f.size() == 3 ? parse_label(f[1]) : std::nullopt;
    const auto pred = f.size() == 3 ? parse_label(f[2]) : std::nullopt;
    if (!gold || !pred) {
      throw DataError("malformed prediction row at line " + std::to_string(i + 1));
    }
    rows.push_back({unescape_field(f[0]), *gold, *pred});
  }
  return rows;
}

std::vector<Label> align_predictions(const Corpus& corpus,
                                     const std::vector<PredictionRow>& rows) {
  std::unordered_map<std::string, Label> by_id;
  for (const auto& r : rows) by_id[r.id] = r.predicted;
  std::vector<Label> out;
  out.reserve(corpus.size());
  for (const auto& item : corpus.items()) {
    const auto it = by_id.find(item.tweet.id);
    if (it == by_id.end()) {
      throw DataError("no prediction for tweet '" + item.tweet.id + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

std::string format_ranking(const std::vector<RankedFeature>& ranking) {
  std::string out = "feature\tinformation_gain\n";
  char buf[64];
  for (const auto& r : ranking) {
    std::snprintf(buf, sizeof(buf), "%.9f", r.information_gain);
    out += r.name + '\t' + buf + '\n';
  }
  return out;
}

}  // namespace bdtweet
