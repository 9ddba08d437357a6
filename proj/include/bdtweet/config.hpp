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

#ifndef BDTWEET_CONFIG_HPP_
#define BDTWEET_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdtweet/feature_space.hpp"
#include "bdtweet/model_io.hpp"
#include "bdtweet/naive_bayes.hpp"
#include "bdtweet/normalize.hpp"
#include "bdtweet/svm.hpp"

namespace bdtweet {

enum class SamplerKind : std::uint8_t {
  None,
  SimilarMajority,  // "similar"
  NearFalseNegative,  // "near-fn"
  Random,  // "random"
  Oversample,  // "oversample"
  Smote,  // "smote"
};
std::string_view sampler_name(SamplerKind kind);
std::optional<SamplerKind> parse_sampler(std::string_view name);

struct SamplerOptions {
  SamplerKind method = SamplerKind::None;
  double k = 0.9;             // similar, near-fn
  std::size_t target = 0;     // random
  std::size_t neighbors = 5;  // smote
  std::uint64_t seed = 1;
};

struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path lexicon;
  std::filesystem::path names;
  std::filesystem::path clusters;
  std::filesystem::path model;
  std::filesystem::path fn_tweets;  // near-fn sampler input (corpus TSV)

  NormalizationConfig normalization;
  FeatureOptions features;
  SamplerOptions sampler;
  ClassifierKind classifier = ClassifierKind::Svm;
  SvmParams svm;
  NbEventModel nb_event_model = NbEventModel::Multinomial;

  double test_fraction = 0.2;
  double validation_fraction = 0.2;
  std::uint64_t seed = 1;

  // Parameter ranges; with `check_paths`, every non-empty path must exist.
  void validate(bool check_paths = true) const;
};

// Every accepted `section.key` name, in documentation order.
const std::vector<std::string>& config_keys();

// Applies one `section.key = value`; throws InvalidArgument on unknown keys
// or malformed values.
void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value);

// `section.key = value` lines; '#' starts a comment line; relative paths
// resolve against `base_dir`.
PipelineConfig parse_config(std::string_view contents,
                            const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);

// `key=value` command-line overrides applied in order.
void apply_overrides(PipelineConfig& config,
                     const std::vector<std::string>& overrides);

// Canonical `section.key = value` dump (sorted by key order above).
std::string format_config(const PipelineConfig& config);

}  // namespace bdtweet

#endif  // BDTWEET_CONFIG_HPP_
