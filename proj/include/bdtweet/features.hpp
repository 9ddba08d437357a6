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

#ifndef BDTWEET_FEATURES_HPP_
#define BDTWEET_FEATURES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bdtweet/corpus.hpp"

namespace bdtweet {

// Sorted (index, value) pairs over a fixed dimension.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}
  // Throws InvalidArgument unless indices are strictly increasing, inside the
  // dimension, and values finite.
  SparseVector(std::size_t dimension, std::vector<std::uint32_t> indices,
               std::vector<double> values);

  static SparseVector from_dense(const std::vector<double>& dense);

  std::size_t dimension() const { return dimension_; }
  std::size_t nnz() const { return indices_.size(); }
  const std::vector<std::uint32_t>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }

  // Value at `index` (0 when absent).
  double at(std::uint32_t index) const;
  std::vector<double> to_dense() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::uint32_t> indices_;
  std::vector<double> values_;
};

double dot(const SparseVector& a, const SparseVector& b);
double squared_distance(const SparseVector& a, const SparseVector& b);

enum class FeatureKind : std::uint8_t { NGram, Cluster, Structural };

std::string_view feature_kind_name(FeatureKind kind);

inline constexpr std::string_view kClusterPrefix = "cluster:";
inline constexpr std::string_view kCharLengthFeature = "struct:char_length";
inline constexpr std::string_view kWordLengthFeature = "struct:word_length";

FeatureKind kind_of_feature(std::string_view name);

// Dense column indices 0..V-1 assigned in lexicographic name order.
class Vocabulary {
 public:
  Vocabulary() = default;
  // `names` need not be sorted; duplicates throw InvalidArgument.
  Vocabulary(std::vector<std::string> names, std::size_t min_df);

  std::size_t size() const { return names_.size(); }
  std::size_t min_df() const { return min_df_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t index) const { return names_[index]; }
  FeatureKind kind(std::size_t index) const { return kinds_[index]; }
  // Column index or -1.
  std::int64_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<FeatureKind> kinds_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t min_df_ = 1;
};

// Every contiguous window of n tokens for n in [n_min, n_max], joined by a
// single space. Ordered by n, then position.
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        std::size_t n_min = 1,
                                        std::size_t n_max = 3);

struct ClusterMap {
  std::unordered_map<std::string, std::string> paths;  // token -> bit path
  std::string source;
  std::vector<std::string> warnings;

  // Keeps only tokens whose cluster feature is a vocabulary column.
  ClusterMap restricted_to(const Vocabulary& vocab) const;
};

// Lines of `bitstring<ws>token<ws>count`; later duplicates overwrite earlier
// ones and add a warning.
ClusterMap load_clusters(const std::filesystem::path& path);
ClusterMap parse_clusters(std::string_view contents, std::string source = {});

std::vector<std::string> cluster_features(const std::vector<std::string>& tokens,
                                          const ClusterMap& map);

// Lowercased whitespace tokens of the raw text with surrounding ASCII
// punctuation trimmed (except '#' and '@'); the token view the cluster
// vocabulary is keyed on.
std::vector<std::string> cluster_tokens(std::string_view raw_text);

struct StructuralFeatures {
  std::size_t char_length = 0;  // Unicode scalars
  std::size_t word_length = 0;  // whitespace-delimited tokens
  friend bool operator==(const StructuralFeatures&,
                         const StructuralFeatures&) = default;
};

StructuralFeatures structural_features(std::string_view raw_text);

// Features in at least `min_df` distinct documents. Structural columns are
// added unconditionally when `with_structural` is set.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::size_t min_df, bool with_structural = false);

enum class ValueMode : std::uint8_t { Binary, Count };

// n-gram / cluster columns get 1 (Binary) or the occurrence count (Count);
// structural columns get raw counts when `structural` is provided and the
// vocabulary has those columns. Unknown features are ignored.
SparseVector vectorize(const std::vector<std::string>& doc_features,
                       const StructuralFeatures* structural,
                       const Vocabulary& vocab,
                       ValueMode mode = ValueMode::Binary);

// Per-column min-max scaling learned from training vectors. Absent entries
// count as 0. Test values outside the training range are not clamped.
class Scaler {
 public:
  Scaler() = default;
  Scaler(std::vector<double> min, std::vector<double> max);

  std::size_t dimension() const { return min_.size(); }
  const std::vector<double>& min() const { return min_; }
  const std::vector<double>& max() const { return max_; }

  double scale(std::size_t column, double x) const;
  // Exact zeros are dropped from the output.
  SparseVector apply(const SparseVector& v) const;

 private:
  std::vector<double> min_;
  std::vector<double> max_;
  // Columns where an absent (zero) input maps to a non-zero output.
  std::vector<std::pair<std::uint32_t, double>> shifted_zero_;
};

Scaler fit_scaler(const std::vector<SparseVector>& train, std::size_t dimension);

struct RankedFeature {
  std::string name;
  double information_gain = 0.0;  // bits
};

// Binary-presence information gain per vocabulary column, sorted descending
// with ties broken by feature name.
std::vector<RankedFeature> information_gain(
    const std::vector<SparseVector>& vectors, const std::vector<Label>& labels,
    const Vocabulary& vocab);

double entropy_bits(const std::vector<double>& counts);

}  // namespace bdtweet

#endif  // BDTWEET_FEATURES_HPP_
