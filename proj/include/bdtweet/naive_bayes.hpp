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

#ifndef BDTWEET_NAIVE_BAYES_HPP_
#define BDTWEET_NAIVE_BAYES_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bdtweet/corpus.hpp"
#include "bdtweet/features.hpp"

namespace bdtweet {

enum class NbEventModel : std::uint8_t { Multinomial, Gaussian };

std::string_view nb_event_model_name(NbEventModel m);
std::optional<NbEventModel> parse_nb_event_model(std::string_view name);

struct NbModel {
  NbEventModel event_model = NbEventModel::Multinomial;
  std::size_t dimension = 0;
  std::vector<Label> classes;  // present in training, class order
  std::vector<double> log_priors;
  // Multinomial: log P(feature | class) with add-one smoothing.
  std::vector<std::vector<double>> log_likelihoods;
  // Gaussian: per-class feature means and variances.
  std::vector<std::vector<double>> means;
  std::vector<std::vector<double>> variances;
};

// Multinomial: theta_cf = (sum of values of f in class c + 1) /
// (sum of all values in class c + V). Values must be non-negative.
NbModel train_nb(const std::vector<SparseVector>& vectors,
                 const std::vector<Label>& labels,
                 NbEventModel event_model = NbEventModel::Multinomial);

struct NbPrediction {
  Label label = Label::NonDefect;
  std::vector<std::pair<Label, double>> log_scores;
};

// Argmax of log prior + log likelihood; exact ties go to the lower class.
NbPrediction predict_nb(const NbModel& model, const SparseVector& v);

}  // namespace bdtweet

#endif  // BDTWEET_NAIVE_BAYES_HPP_
