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

#include "bdtweet/feature_space.hpp"

#include <charconv>
#include <cmath>

#include "bdtweet/error.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

constexpr std::string_view kDocumentHeader = "id\tlabel\ttokens\ttext";

std::string at_line(std::size_t line) {
  return " at line " + std::to_string(line);
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

}  // namespace

void FeatureOptions::validate() const {
  if (ngram_min < 1 || ngram_min > ngram_max) {
    throw InvalidArgument("n-gram range must satisfy 1 <= min <= max");
  }
  if (min_df < 1) throw InvalidArgument("min_df must be at least 1");
}

std::string format_documents(const std::vector<Document>& docs) {
  std::string out(kDocumentHeader);
  out.push_back('\n');
  for (const auto& d : docs) {
    out += escape_field(d.id);
    out.push_back('\t');
    out += label_name(d.label);
    out.push_back('\t');
    for (std::size_t i = 0; i < d.tokens.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += d.tokens[i];
    }
    out.push_back('\t');
    out += escape_field(d.text);
    out.push_back('\n');
  }
  return out;
}

std::vector<Document> parse_documents(std::string_view contents) {
  const auto lines = split_lines(contents);
  if (lines.empty() || lines[0] != kDocumentHeader) {
    throw DataError("unexpected document header at line 1");
  }
  std::vector<Document> docs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 4) {
      throw DataError("expected 4 columns, found " +
                      std::to_string(fields.size()) + at_line(i + 1));
    }
    Document d;
    d.id = unescape_field(fields[0]);
    const auto label = parse_label(fields[1]);
    if (!label) throw DataError("unknown label" + at_line(i + 1));
    d.label = *label;
    d.tokens = utf8::split_whitespace(fields[2]);
    d.text = unescape_field(fields[3]);
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<Document> load_documents(const std::filesystem::path& path) {
  return parse_documents(read_file(path));
}

std::vector<Label> document_labels(const std::vector<Document>& docs) {
  std::vector<Label> labels;
  labels.reserve(docs.size());
  for (const auto& d : docs) labels.push_back(d.label);
  return labels;
}

Preprocessor::Preprocessor(NameLexicon names, NormalizationConfig config,
                           Lexicon lexicon)
    : names_(std::move(names)),
      config_(std::move(config)),
      lexicon_(std::move(lexicon)) {
  config_.validate();
  if (!lexicon_.empty()) {
    matchers_ = std::make_shared<const MatcherSet>(compile_matchers(lexicon_));
  }
}

std::optional<Span> Preprocessor::span_for(const AnnotatedTweet& tweet) const {
  if (tweet.match_span) return tweet.match_span;
  if (!matchers_) return std::nullopt;
  const std::vector<Tweet> one{tweet.tweet};
  const auto matches = post_filter(one, matchers_->match(tweet.tweet));
  if (matches.empty()) return std::nullopt;
  return matches.front().span;
}

Document Preprocessor::document(const AnnotatedTweet& tweet) const {
  Document d;
  d.id = tweet.tweet.id;
  d.label = tweet.label;
  d.tokens =
      classic_normalize(tweet.tweet, span_for(tweet), names_, config_).tokens;
  d.text = tweet.tweet.text;
  return d;
}

std::vector<Document> Preprocessor::documents(const Corpus& corpus) const {
  std::vector<Document> docs;
  docs.reserve(corpus.size());
  for (const auto& item : corpus.items()) docs.push_back(document(item));
  return docs;
}

FeatureSpace::FeatureSpace(FeatureOptions options, ClusterMap clusters,
                           Vocabulary vocab)
    : options_(options), clusters_(std::move(clusters)), vocab_(std::move(vocab)) {
  options_.validate();
}

FeatureSpace FeatureSpace::fit(const std::vector<Document>& train,
                               const FeatureOptions& options,
                               const ClusterMap& clusters) {
  options.validate();
  FeatureSpace probe(options, clusters, Vocabulary{});
  std::vector<std::vector<std::string>> docs;
  docs.reserve(train.size());
  for (const auto& d : train) docs.push_back(probe.features(d));
  Vocabulary vocab = build_vocabulary(docs, options.min_df, options.structural);
  ClusterMap kept = options.clusters ? clusters.restricted_to(vocab) : ClusterMap{};
  kept.source = clusters.source;
  return FeatureSpace(options, std::move(kept), std::move(vocab));
}

std::vector<std::string> FeatureSpace::features(const Document& doc) const {
  auto out = extract_ngrams(doc.tokens, options_.ngram_min, options_.ngram_max);
  if (options_.clusters && !clusters_.paths.empty()) {
    auto c = cluster_features(cluster_tokens(doc.text), clusters_);
    out.insert(out.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  }
  return out;
}

SparseVector FeatureSpace::vectorize(const Document& doc) const {
  const StructuralFeatures s = structural_features(doc.text);
  return bdtweet::vectorize(features(doc), options_.structural ? &s : nullptr,
                            vocab_, options_.values);
}

std::vector<SparseVector> FeatureSpace::vectorize(
    const std::vector<Document>& docs) const {
  std::vector<SparseVector> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(vectorize(d));
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw InvalidArgument("cannot format number");
  return std::string(buf, ptr);
}

std::string format_vectors(const LabeledVectors& data) {
  if (data.ids.size() != data.vectors.size() ||
      data.labels.size() != data.vectors.size()) {
    throw InvalidArgument("vector table columns differ in length");
  }
  std::string out = "dimension\t" + std::to_string(data.dimension) + '\n';
  for (std::size_t i = 0; i < data.vectors.size(); ++i) {
    const auto& v = data.vectors[i];
    out += escape_field(data.ids[i]);
    out.push_back('\t');
    out += label_name(data.labels[i]);
    out.push_back('\t');
    for (std::size_t j = 0; j < v.nnz(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(v.indices()[j]);
      out.push_back(':');
      out += format_double(v.values()[j]);
    }
    out.push_back('\n');
  }
  return out;
}

LabeledVectors parse_vectors(std::string_view contents) {
  const auto lines = split_lines(contents);
  LabeledVectors data;
  if (lines.empty()) throw DataError("vector file is empty");
  const auto head = split_tabs(lines[0]);
  if (head.size() != 2 || head[0] != "dimension" ||
      !parse_number(head[1], data.dimension)) {
    throw DataError("expected 'dimension<TAB>V' at line 1");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 3) {
      throw DataError("expected 3 columns, found " +
                      std::to_string(fields.size()) + at_line(i + 1));
    }
    const auto label = parse_label(fields[1]);
    if (!label) throw DataError("unknown label" + at_line(i + 1));
    std::vector<std::uint32_t> idx;
    std::vector<double> val;
    for (const auto& entry : utf8::split_whitespace(fields[2])) {
      const auto colon = entry.find(':');
      std::uint32_t j = 0;
      double x = 0.0;
      if (colon == std::string::npos ||
          !parse_number(std::string_view(entry).substr(0, colon), j) ||
          !parse_number(std::string_view(entry).substr(colon + 1), x)) {
        throw DataError("malformed entry '" + entry + "'" + at_line(i + 1));
      }
      idx.push_back(j);
      val.push_back(x);
    }
    try {
      data.vectors.emplace_back(data.dimension, std::move(idx), std::move(val));
    } catch (const InvalidArgument& e) {
      throw DataError(std::string(e.what()) + at_line(i + 1));
    }
    data.ids.push_back(unescape_field(fields[0]));
    data.labels.push_back(*label);
  }
  return data;
}

LabeledVectors load_vectors(const std::filesystem::path& path) {
  return parse_vectors(read_file(path));
}

}  // namespace bdtweet
