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

#include "bdtweet/naive_bayes.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bdtweet/error.hpp"

namespace bdtweet {

namespace {

// Variance floor for the Gaussian event model (relative to the largest
// feature variance), so constant features do not produce infinite density.
constexpr double kVarianceFloor = 1e-9;

}  // namespace

std::string_view nb_event_model_name(NbEventModel m) {
  return m == NbEventModel::Multinomial ? "multinomial" : "gaussian";
}

std::optional<NbEventModel> parse_nb_event_model(std::string_view name) {
  if (name == "multinomial") return NbEventModel::Multinomial;
  if (name == "gaussian") return NbEventModel::Gaussian;
  return std::nullopt;
}

NbModel train_nb(const std::vector<SparseVector>& vectors,
                 const std::vector<Label>& labels, NbEventModel event_model) {
  if (vectors.empty()) throw InvalidArgument("naive bayes: empty training set");
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("naive bayes: vectors and labels differ in size");
  }
  NbModel model;
  model.event_model = event_model;
  model.dimension = vectors.front().dimension();
  const std::size_t v = model.dimension;

  ClassCounts counts{};
  for (Label l : labels) ++counts[label_index(l)];
  std::array<int, kNumLabels> slot{};
  for (Label l : kAllLabels) {
    slot[label_index(l)] = -1;
    if (counts[label_index(l)] == 0) continue;
    slot[label_index(l)] = static_cast<int>(model.classes.size());
    model.classes.push_back(l);
    model.log_priors.push_back(std::log(static_cast<double>(counts[label_index(l)]) /
                                        static_cast<double>(labels.size())));
  }
  const std::size_t k = model.classes.size();

  std::vector<std::vector<double>> sums(k, std::vector<double>(v, 0.0));
  std::vector<std::vector<double>> squares;
  if (event_model == NbEventModel::Gaussian) {
    squares.assign(k, std::vector<double>(v, 0.0));
  }
  for (std::size_t d = 0; d < vectors.size(); ++d) {
    const auto& vec = vectors[d];
    if (vec.dimension() != v) {
      throw InvalidArgument("naive bayes: vectors differ in dimension");
    }
    const auto c = static_cast<std::size_t>(slot[label_index(labels[d])]);
    for (std::size_t t = 0; t < vec.nnz(); ++t) {
      const double x = vec.values()[t];
      if (event_model == NbEventModel::Multinomial && x < 0.0) {
        throw InvalidArgument("naive bayes: multinomial model needs non-negative values");
      }
      sums[c][vec.indices()[t]] += x;
      if (!squares.empty()) squares[c][vec.indices()[t]] += x * x;
    }
  }

  if (event_model == NbEventModel::Multinomial) {
    model.log_likelihoods.assign(k, std::vector<double>(v, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
      double total = 0.0;
      for (double s : sums[c]) total += s;
      const double denom = total + static_cast<double>(v);
      for (std::size_t f = 0; f < v; ++f) {
        model.log_likelihoods[c][f] = std::log((sums[c][f] + 1.0) / denom);
      }
    }
    return model;
  }

  model.means.assign(k, std::vector<double>(v, 0.0));
  model.variances.assign(k, std::vector<double>(v, 0.0));
  double max_var = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double n = static_cast<double>(counts[label_index(model.classes[c])]);
    for (std::size_t f = 0; f < v; ++f) {
      const double mean = sums[c][f] / n;
      const double var = std::max(0.0, squares[c][f] / n - mean * mean);
      model.means[c][f] = mean;
      model.variances[c][f] = var;
      max_var = std::max(max_var, var);
    }
  }
  const double floor = kVarianceFloor * std::max(1.0, max_var);
  for (auto& row : model.variances) {
    for (double& var : row) var = std::max(var, floor);
  }
  return model;
}

NbPrediction predict_nb(const NbModel& model, const SparseVector& v) {
  if (v.dimension() != model.dimension) {
    throw InvalidArgument("naive bayes: vector dimension does not match model");
  }
  NbPrediction out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    double score = model.log_priors[c];
    if (model.event_model == NbEventModel::Multinomial) {
      for (std::size_t t = 0; t < v.nnz(); ++t) {
        score += v.values()[t] * model.log_likelihoods[c][v.indices()[t]];
      }
    } else {
      const auto& mean = model.means[c];
      const auto& var = model.variances[c];
      for (std::size_t f = 0; f < model.dimension; ++f) {
        const double d = v.at(static_cast<std::uint32_t>(f)) - mean[f];
        score -= 0.5 * (std::log(2.0 * std::numbers::pi * var[f]) + d * d / var[f]);
      }
    }
    out.log_scores.emplace_back(model.classes[c], score);
    if (c == 0 || score > best) {
      best = score;
      out.label = model.classes[c];
    }
  }
  return out;
}

}  // namespace bdtweet
