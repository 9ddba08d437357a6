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

#ifndef BDTWEET_SAMPLING_HPP_
#define BDTWEET_SAMPLING_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bdtweet/corpus.hpp"
#include "bdtweet/features.hpp"

namespace bdtweet {

// Levenshtein-ratio threshold k in (0, 1]; pairs with ratio > k are similar.
class SimilarityThreshold {
 public:
  explicit SimilarityThreshold(double k);
  double value() const { return k_; }

 private:
  double k_;
};

struct SamplingReport {
  std::string method;
  ClassCounts input{};
  ClassCounts output{};
  // Ordered parameter list (k, seed, neighbors, factor, ...).
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> warnings;

  std::size_t input_total() const;
  std::size_t output_total() const;
};

// `[sampling]` block of `key = value` lines; stable field order.
std::string format_sampling_report(const SamplingReport& report);

struct SampledCorpus {
  Corpus corpus;
  SamplingReport report;
};

// Method (i): majority tweets scanned in corpus order; one is dropped when its
// ratio to any earlier *retained* majority tweet exceeds k.
SampledCorpus undersample_similar_majority(const Corpus& train,
                                           SimilarityThreshold k);

// Method (ii): drops every majority tweet whose ratio to any of the given
// false-negative minority tweets exceeds k.
SampledCorpus undersample_near_fn(const Corpus& train,
                                  const std::vector<Tweet>& fn_minority,
                                  SimilarityThreshold k);

// Per majority tweet, the largest ratio to any false-negative tweet. Method
// (ii) removes exactly the tweets whose score exceeds k.
std::vector<double> near_fn_scores(const Corpus& train,
                                   const std::vector<Tweet>& fn_minority);

// Method (iii): seeded uniform removal of majority tweets down to
// `target_total` items.
SampledCorpus undersample_random(const Corpus& train, std::size_t target_total,
                                 std::uint64_t seed);

// Method (iv): each minority class becomes floor(N_maj / N_c) full copies of
// itself; copy r >= 2 of tweet `id` is named `id#r`.
SampledCorpus oversample_replacement(const Corpus& train, std::uint64_t seed);

struct ThresholdSweep {
  double k = 1.0;
  std::size_t size = 0;
};

// Bisects k in (0, 1] for the smallest threshold whose output size reaches
// `target_size` (sizes grow with k). `size_at` evaluates one threshold.
ThresholdSweep sweep_threshold(const std::function<std::size_t(double)>& size_at,
                               std::size_t target_size, int iterations = 30);

struct SmoteResult {
  // Originals in input order, then synthetic points class by class.
  std::vector<SparseVector> vectors;
  std::vector<Label> labels;
  SamplingReport report;
};

// Method (v): for each minority class c, every instance x yields
// floor(N_maj / N_c) - 1 synthetic points s = x + lambda * (nn - x), where nn
// is drawn from the k nearest same-class neighbours (Euclidean; ties by
// position) and lambda ~ U[0, 1). Randomness is seeded per class.
SmoteResult smote(const std::vector<SparseVector>& vectors,
                  const std::vector<Label>& labels, std::size_t k_neighbors,
                  std::uint64_t seed);

// x + lambda * (neighbor - x) over the union of both supports.
SparseVector smote_interpolate(const SparseVector& x,
                               const SparseVector& neighbor, double lambda);

// Indices of the k nearest vectors to members[self] among `members`
// (excluding self), nearest first, ties broken by position.
std::vector<std::size_t> nearest_neighbors(
    const std::vector<const SparseVector*>& members, std::size_t self,
    std::size_t k);

}  // namespace bdtweet

#endif  // BDTWEET_SAMPLING_HPP_
