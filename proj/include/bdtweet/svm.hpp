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

#ifndef BDTWEET_SVM_HPP_
#define BDTWEET_SVM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bdtweet/corpus.hpp"
#include "bdtweet/features.hpp"
#include "bdtweet/kernel.hpp"

namespace bdtweet {

struct SvmParams {
  double cost = 100.0;
  std::optional<double> gamma;  // unset: 1 / dimension
  KernelType kernel = KernelType::Rbf;
  // Per-class multipliers of `cost`; unset entries default to N / (K * N_c)
  // over the K classes present in the training data.
  std::array<std::optional<double>, kNumLabels> class_weights{};
  double tolerance = 1e-3;
  std::size_t max_iterations = 10'000'000;
  std::size_t cache_bytes = std::size_t{64} << 20;

  void validate() const;
};

// Dual of one binary soft-margin problem with labels y in {+1, -1}:
//   min 1/2 a'Qa - e'a   s.t.  y'a = 0,  0 <= a_i <= upper_i,
// Q_ij = y_i y_j K(x_i, x_j).
struct SmoSolution {
  std::vector<double> alpha;
  double rho = 0.0;  // decision = sum a_i y_i K(x_i, x) - rho
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Sequential minimal optimization with maximal-violating-pair working-set
// selection; stops once max violation <= tolerance or after max_iterations.
// Kernel columns are held in an LRU cache bounded by cache_bytes.
SmoSolution solve_smo(const std::vector<const SparseVector*>& x,
                      const std::vector<std::int8_t>& y,
                      const std::vector<double>& upper, const Kernel& kernel,
                      double tolerance, std::size_t max_iterations,
                      std::size_t cache_bytes = std::size_t{64} << 20);

// One-vs-one sub-model; `positive` is the class with the lower index.
struct BinarySvm {
  Label positive = Label::Defect;
  Label negative = Label::NonDefect;
  std::vector<SparseVector> support_vectors;
  std::vector<double> alpha;       // > 0
  std::vector<std::int8_t> signs;  // +1 positive, -1 negative
  double bias = 0.0;               // = -rho
  std::size_t iterations = 0;
  bool converged = true;

  double decision(const SparseVector& v, const Kernel& kernel) const;
};

struct SvmModel {
  Kernel kernel;
  double cost = 100.0;
  std::array<double, kNumLabels> class_weights{};
  std::size_t dimension = 0;
  std::vector<Label> classes;
  std::vector<BinarySvm> pairs;
};

// Errors: fewer than two classes, empty inputs, size or dimension mismatch,
// non-finite values.
SvmModel train_svm(const std::vector<SparseVector>& vectors,
                   const std::vector<Label>& labels, const SvmParams& params);

// Trains one pair; throws InvalidArgument when either side is empty.
BinarySvm train_binary_svm(const std::vector<const SparseVector*>& positives,
                           const std::vector<const SparseVector*>& negatives,
                           Label positive, Label negative, double positive_cost,
                           double negative_cost, const Kernel& kernel,
                           const SvmParams& params);

struct SvmPrediction {
  Label label = Label::NonDefect;
  std::vector<double> decision_values;  // one per model pair
};

// One-vs-one vote; ties go to the larger summed |decision value| over the
// pairs each tied class won, then to the lower class index.
SvmPrediction predict_svm(const SvmModel& model, const SparseVector& v);

// Default class weights N / (K * N_c) for the present classes, 0 otherwise.
std::array<double, kNumLabels> inverse_frequency_weights(
    const std::vector<Label>& labels);

}  // namespace bdtweet

#endif  // BDTWEET_SVM_HPP_
