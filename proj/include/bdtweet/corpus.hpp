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

#ifndef BDTWEET_CORPUS_HPP_
#define BDTWEET_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bdtweet {

enum class Label : std::uint8_t { Defect = 0, PossibleDefect = 1, NonDefect = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::Defect, Label::PossibleDefect, Label::NonDefect};
// The class every imbalance treatment treats as "majority".
inline constexpr Label kMajorityLabel = Label::NonDefect;

inline constexpr std::size_t label_index(Label l) {
  return static_cast<std::size_t>(l);
}

// Serialized names: "defect", "possible_defect", "non_defect".
std::string_view label_name(Label l);
std::optional<Label> parse_label(std::string_view name);

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// start < end <= text.size(), both on UTF-8 character boundaries.
bool span_valid(std::string_view text, const Span& span);

struct Tweet {
  std::string id;
  std::string user_id;
  std::string text;
  friend bool operator==(const Tweet&, const Tweet&) = default;
};

struct AnnotatedTweet {
  Tweet tweet;
  Label label = Label::NonDefect;
  std::optional<Span> match_span;
  friend bool operator==(const AnnotatedTweet&, const AnnotatedTweet&) = default;
};

using ClassCounts = std::array<std::size_t, kNumLabels>;

// Ordered labeled tweets. Construction enforces unique ids.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<AnnotatedTweet> items, std::string provenance = {});

  const std::vector<AnnotatedTweet>& items() const { return items_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const AnnotatedTweet& operator[](std::size_t i) const { return items_[i]; }

  ClassCounts counts() const;
  std::vector<Label> labels() const;
  std::vector<Tweet> tweets() const;

 private:
  std::vector<AnnotatedTweet> items_;
  std::string provenance_;
};

struct ClassDistribution {
  ClassCounts counts{};
  std::array<double, kNumLabels> proportions{};
};

ClassDistribution class_distribution(const Corpus& corpus);

// Tab-separated corpus file:
//   id  user_id  label  text  span_start  span_end
// The span columns may be absent from the header or left empty per row.
// Text escapes: \t, \n, \r and \\.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view contents, std::string provenance = {});
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
std::string format_corpus(const Corpus& corpus);

std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view text);

struct HoldoutSplit {
  Corpus remainder;
  Corpus holdout;
};

// Per class with N_c items the holdout receives exactly ceil(fraction * N_c)
// items chosen by a seeded shuffle of that class; both parts keep corpus
// order.
HoldoutSplit stratified_split(const Corpus& corpus, double holdout_fraction,
                              std::uint64_t seed);

// Exact per-class holdout size used by stratified_split.
std::size_t holdout_count(std::size_t class_size, double fraction);

struct SplitResult {
  Corpus train;
  Corpus validation;
  Corpus test;
  std::uint64_t seed = 0;
};

// Test split first, then validation out of the remainder (sub-seeded).
SplitResult split_train_validation_test(const Corpus& corpus,
                                        double test_fraction,
                                        double validation_fraction,
                                        std::uint64_t seed);

double cohens_kappa(const std::vector<Label>& a, const std::vector<Label>& b);

// One annotator's labels for a set of tweets.
using Annotations = std::vector<AnnotatedTweet>;

// Keeps doubly annotated tweets whose labels agree plus singly annotated
// tweets. Order: annotator a's order, then tweets only b annotated.
Corpus filter_disagreements(const Annotations& a, const Annotations& b);

// Annotation-pair file: `id  label_a  label_b`; an empty label cell means the
// annotator did not label that tweet.
struct AnnotationPair {
  std::string id;
  std::optional<Label> a;
  std::optional<Label> b;
};
std::vector<AnnotationPair> load_annotation_pairs(
    const std::filesystem::path& path);
std::vector<AnnotationPair> parse_annotation_pairs(std::string_view contents);

// Splits on '\n', dropping a trailing '\r' per line and a final empty line.
std::vector<std::string_view> split_lines(std::string_view contents);
std::vector<std::string_view> split_tabs(std::string_view line);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace bdtweet

#endif  // BDTWEET_CORPUS_HPP_
