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

#include "bdtweet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bdtweet/error.hpp"
#include "bdtweet/rng.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

constexpr std::string_view kHeaderWithSpan =
    "id\tuser_id\tlabel\ttext\tspan_start\tspan_end";
constexpr std::string_view kHeaderNoSpan = "id\tuser_id\tlabel\ttext";

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::string at_line(std::size_t line) {
  return " at line " + std::to_string(line);
}

}  // namespace

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Splits on '\n', dropping a trailing '\r' per line and a final empty line.
std::vector<std::string_view> split_lines(std::string_view contents) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string_view label_name(Label l) {
  switch (l) {
    case Label::Defect:
      return "defect";
    case Label::PossibleDefect:
      return "possible_defect";
    case Label::NonDefect:
      return "non_defect";
  }
  return "non_defect";
}

std::optional<Label> parse_label(std::string_view name) {
  for (Label l : kAllLabels) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

bool span_valid(std::string_view text, const Span& span) {
  return span.start < span.end && span.end <= text.size() &&
         utf8::is_boundary(text, span.start) &&
         utf8::is_boundary(text, span.end);
}

Corpus::Corpus(std::vector<AnnotatedTweet> items, std::string provenance)
    : items_(std::move(items)), provenance_(std::move(provenance)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(items_.size());
  for (const auto& item : items_) {
    if (item.tweet.id.empty()) throw DataError("empty tweet id");
    if (!seen.insert(item.tweet.id).second) {
      throw DataError("duplicate tweet id '" + item.tweet.id + "'");
    }
    if (item.match_span && !span_valid(item.tweet.text, *item.match_span)) {
      throw DataError("invalid span for tweet '" + item.tweet.id + "'");
    }
  }
}

ClassCounts Corpus::counts() const {
  ClassCounts c{};
  for (const auto& item : items_) ++c[label_index(item.label)];
  return c;
}

std::vector<Label> Corpus::labels() const {
  std::vector<Label> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.label);
  return out;
}

std::vector<Tweet> Corpus::tweets() const {
  std::vector<Tweet> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.tweet);
  return out;
}

ClassDistribution class_distribution(const Corpus& corpus) {
  ClassDistribution d;
  d.counts = corpus.counts();
  if (corpus.empty()) return d;
  const double n = static_cast<double>(corpus.size());
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    d.proportions[c] = static_cast<double>(d.counts[c]) / n;
  }
  return d;
}

std::string escape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    const char next = text[++i];
    switch (next) {
      case 't':
        out.push_back('\t');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case 'r':
        out.push_back('\r');
        break;
      case '\\':
        out.push_back('\\');
        break;
      default:
        out.push_back('\\');
        out.push_back(next);
    }
  }
  return out;
}

Corpus parse_corpus(std::string_view contents, std::string provenance) {
  const auto lines = split_lines(contents);
  if (lines.empty()) throw DataError("corpus file is empty (missing header)");
  bool with_span = false;
  if (lines[0] == kHeaderWithSpan) {
    with_span = true;
  } else if (lines[0] != kHeaderNoSpan) {
    throw DataError("unexpected corpus header at line 1");
  }
  const std::size_t columns = with_span ? 6 : 4;

  std::vector<AnnotatedTweet> items;
  items.reserve(lines.size() - 1);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != columns) {
      throw DataError("expected " + std::to_string(columns) +
                      " columns, found " + std::to_string(fields.size()) +
                      at_line(line_no));
    }
    AnnotatedTweet item;
    item.tweet.id = unescape_field(fields[0]);
    item.tweet.user_id = unescape_field(fields[1]);
    item.tweet.text = unescape_field(fields[3]);
    if (item.tweet.id.empty()) throw DataError("empty id" + at_line(line_no));
    const auto label = parse_label(fields[2]);
    if (!label) throw DataError("unknown label" + at_line(line_no));
    item.label = *label;
    if (with_span && !(fields[4].empty() && fields[5].empty())) {
      const auto s = parse_size(fields[4]);
      const auto e = parse_size(fields[5]);
      if (!s || !e) throw DataError("invalid span" + at_line(line_no));
      Span span{*s, *e};
      if (!span_valid(item.tweet.text, span)) {
        throw DataError("invalid span" + at_line(line_no));
      }
      item.match_span = span;
    }
    if (!seen.insert(item.tweet.id).second) {
      throw DataError("duplicate id '" + item.tweet.id + "'" +
                      at_line(line_no));
    }
    items.push_back(std::move(item));
  }
  return Corpus(std::move(items), std::move(provenance));
}

Corpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

std::string format_corpus(const Corpus& corpus) {
  std::string out(kHeaderWithSpan);
  out.push_back('\n');
  for (const auto& item : corpus.items()) {
    out += escape_field(item.tweet.id);
    out.push_back('\t');
    out += escape_field(item.tweet.user_id);
    out.push_back('\t');
    out += label_name(item.label);
    out.push_back('\t');
    out += escape_field(item.tweet.text);
    out.push_back('\t');
    if (item.match_span) {
      out += std::to_string(item.match_span->start);
      out.push_back('\t');
      out += std::to_string(item.match_span->end);
    } else {
      out.push_back('\t');
    }
    out.push_back('\n');
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, format_corpus(corpus));
}

std::size_t holdout_count(std::size_t class_size, double fraction) {
  // The epsilon keeps exact products such as 0.2 * 10 from rounding up to 3.
  const double raw = fraction * static_cast<double>(class_size);
  const auto count = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::min(count, class_size);
}

HoldoutSplit stratified_split(const Corpus& corpus, double holdout_fraction,
                              std::uint64_t seed) {
  if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
    throw InvalidArgument("holdout fraction must lie in (0, 1)");
  }
  std::array<std::vector<std::size_t>, kNumLabels> by_class;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    by_class[label_index(corpus[i].label)].push_back(i);
  }
  Rng rng(seed);
  std::vector<bool> in_holdout(corpus.size(), false);
  for (auto& members : by_class) {
    if (members.empty()) continue;
    rng.shuffle(std::span<std::size_t>(members));
    const std::size_t take = holdout_count(members.size(), holdout_fraction);
    for (std::size_t k = 0; k < take; ++k) in_holdout[members[k]] = true;
  }
  std::vector<AnnotatedTweet> rest;
  std::vector<AnnotatedTweet> held;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (in_holdout[i] ? held : rest).push_back(corpus[i]);
  }
  return {Corpus(std::move(rest), corpus.provenance()),
          Corpus(std::move(held), corpus.provenance())};
}

SplitResult split_train_validation_test(const Corpus& corpus,
                                        double test_fraction,
                                        double validation_fraction,
                                        std::uint64_t seed) {
  auto outer = stratified_split(corpus, test_fraction, mix_seed(seed, 0));
  auto inner =
      stratified_split(outer.remainder, validation_fraction, mix_seed(seed, 1));
  return {std::move(inner.remainder), std::move(inner.holdout),
          std::move(outer.holdout), seed};
}

double cohens_kappa(const std::vector<Label>& a, const std::vector<Label>& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("kappa: sequences differ in length");
  }
  if (a.empty()) throw InvalidArgument("kappa: empty sequences");
  // Integer arithmetic: kappa = (N*agree - sum a_k b_k) / (N^2 - sum a_k b_k).
  ClassCounts ma{};
  ClassCounts mb{};
  std::int64_t agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++ma[label_index(a[i])];
    ++mb[label_index(b[i])];
    if (a[i] == b[i]) ++agree;
  }
  const auto n = static_cast<std::int64_t>(a.size());
  std::int64_t chance = 0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    chance += static_cast<std::int64_t>(ma[c]) * static_cast<std::int64_t>(mb[c]);
  }
  const std::int64_t denom = n * n - chance;
  if (denom == 0) return 1.0;  // p_e == 1 forces p_o == 1
  return static_cast<double>(n * agree - chance) / static_cast<double>(denom);
}

Corpus filter_disagreements(const Annotations& a, const Annotations& b) {
  std::unordered_map<std::string_view, const AnnotatedTweet*> b_by_id;
  for (const auto& item : b) b_by_id.emplace(item.tweet.id, &item);
  std::unordered_set<std::string_view> a_ids;
  std::vector<AnnotatedTweet> kept;
  for (const auto& item : a) {
    a_ids.insert(item.tweet.id);
    auto it = b_by_id.find(item.tweet.id);
    if (it == b_by_id.end() || it->second->label == item.label) {
      kept.push_back(item);
    }
  }
  for (const auto& item : b) {
    if (!a_ids.contains(item.tweet.id)) kept.push_back(item);
  }
  return Corpus(std::move(kept));
}

std::vector<AnnotationPair> parse_annotation_pairs(std::string_view contents) {
  const auto lines = split_lines(contents);
  if (lines.empty() || lines[0] != "id\tlabel_a\tlabel_b") {
    throw DataError("unexpected annotation header at line 1");
  }
  std::vector<AnnotationPair> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 3) {
      throw DataError("expected 3 columns" + at_line(line_no));
    }
    AnnotationPair p;
    p.id = unescape_field(fields[0]);
    if (p.id.empty()) throw DataError("empty id" + at_line(line_no));
    for (int k = 1; k <= 2; ++k) {
      if (fields[k].empty()) continue;
      const auto l = parse_label(fields[k]);
      if (!l) throw DataError("unknown label" + at_line(line_no));
      (k == 1 ? p.a : p.b) = *l;
    }
    if (!p.a && !p.b) throw DataError("row has no labels" + at_line(line_no));
    if (!seen.insert(p.id).second) {
      throw DataError("duplicate id '" + p.id + "'" + at_line(line_no));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<AnnotationPair> load_annotation_pairs(
    const std::filesystem::path& path) {
  return parse_annotation_pairs(read_file(path));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

}  // namespace bdtweet
