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

#include "bdtweet/lexicon.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bdtweet/error.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

bool is_separator(char c) { return c == '-' || utf8::is_ascii_space(c); }

bool is_handle_char(char c) {
  return utf8::is_ascii_alpha(c) || utf8::is_ascii_digit(c) || c == '_';
}

std::vector<std::string> pattern_words(std::string_view surface) {
  std::vector<std::string> words;
  std::string current;
  for (char c : surface) {
    if (is_separator(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(utf8::to_lower(c));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace

Lexicon::Lexicon(std::vector<LexiconTerm> terms) : terms_(std::move(terms)) {
  std::unordered_set<std::string> seen;
  for (auto& term : terms_) {
    term.canonical = std::string(utf8::trim(term.canonical));
    if (term.canonical.empty()) throw DataError("empty lexicon term");
    for (auto& v : term.variants) {
      v = std::string(utf8::trim(v));
      if (v.empty()) {
        throw DataError("empty variant for term '" + term.canonical + "'");
      }
    }
    if (!seen.insert(utf8::ascii_lower(term.canonical)).second) {
      throw DataError("duplicate lexicon term '" + term.canonical + "'");
    }
  }
}

Lexicon parse_lexicon(std::string_view contents) {
  std::vector<LexiconTerm> terms;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    const std::string_view line = utf8::trim(contents.substr(start, nl - start));
    start = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    LexiconTerm term;
    std::size_t field_start = 0;
    bool first = true;
    for (;;) {
      const std::size_t bar = line.find('|', field_start);
      const std::string_view field = line.substr(
          field_start, bar == std::string_view::npos ? std::string_view::npos
                                                     : bar - field_start);
      if (first) {
        term.canonical = std::string(field);
        first = false;
      } else if (!utf8::trim(field).empty()) {
        term.variants.emplace_back(field);
      }
      if (bar == std::string_view::npos) break;
      field_start = bar + 1;
    }
    terms.push_back(std::move(term));
  }
  if (terms.empty()) throw DataError("lexicon has no terms");
  return Lexicon(std::move(terms));
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_file(path));
}

MatcherSet compile_matchers(const Lexicon& lexicon) {
  if (lexicon.empty()) throw InvalidArgument("cannot compile an empty lexicon");
  MatcherSet set;
  std::unordered_set<std::string> seen_surfaces;
  for (std::size_t t = 0; t < lexicon.size(); ++t) {
    const auto& term = lexicon.terms()[t];
    set.canonical_.push_back(term.canonical);
    std::vector<std::string_view> surfaces{term.canonical};
    for (const auto& v : term.variants) surfaces.push_back(v);
    for (auto surface : surfaces) {
      auto words = pattern_words(surface);
      if (words.empty()) {
        throw DataError("lexicon entry '" + std::string(surface) +
                        "' compiles to an empty pattern");
      }
      std::string key;
      for (const auto& w : words) key += w + ' ';
      // A surface shared by two terms stays with the first one.
      if (!seen_surfaces.insert(key).second) continue;
      const auto first = static_cast<unsigned char>(words.front().front());
      set.by_first_byte_[first].push_back(set.patterns_.size());
      set.patterns_.push_back({std::move(words), t});
    }
  }
  return set;
}

std::size_t MatcherSet::match_at(const Pattern& p, std::string_view lowered,
                                 std::size_t start) {
  std::size_t pos = start;
  for (std::size_t w = 0; w < p.words.size(); ++w) {
    if (w > 0) {
      const std::size_t sep_start = pos;
      while (pos < lowered.size() && is_separator(lowered[pos])) ++pos;
      if (pos == sep_start) return 0;
    }
    const auto& word = p.words[w];
    if (lowered.compare(pos, word.size(), word) != 0) return 0;
    pos += word.size();
  }
  // Trailing boundary: a word character cannot be followed by another.
  if (is_word_char(lowered[pos - 1]) && pos < lowered.size() &&
      is_word_char(lowered[pos])) {
    return 0;
  }
  if (!utf8::is_boundary(lowered, pos)) return 0;
  return pos;
}

std::vector<MatchResult> MatcherSet::match(const Tweet& tweet) const {
  std::vector<MatchResult> out;
  const std::string lowered = utf8::ascii_lower(tweet.text);
  std::size_t i = 0;
  while (i < lowered.size()) {
    const auto& candidates =
        by_first_byte_[static_cast<unsigned char>(lowered[i])];
    const bool boundary_before =
        i == 0 || !is_word_char(lowered[i - 1]) || !is_word_char(lowered[i]);
    std::size_t best_end = 0;
    std::size_t best_pattern = 0;
    if (boundary_before && !candidates.empty()) {
      for (std::size_t idx : candidates) {
        const std::size_t end = match_at(patterns_[idx], lowered, i);
        if (end > best_end) {
          best_end = end;
          best_pattern = idx;
        }
      }
    }
    if (best_end == 0) {
      ++i;
      continue;
    }
    MatchResult m;
    m.tweet_id = tweet.id;
    m.term = canonical_[patterns_[best_pattern].term_index];
    m.span = {i, best_end};
    m.surface = tweet.text.substr(i, best_end - i);
    out.push_back(std::move(m));
    i = best_end;
  }
  return out;
}

std::vector<MatchResult> match_corpus(const std::vector<Tweet>& tweets,
                                      const MatcherSet& matchers) {
  std::vector<MatchResult> out;
  for (const auto& tweet : tweets) {
    auto found = matchers.match(tweet);
    std::move(found.begin(), found.end(), std::back_inserter(out));
  }
  return out;
}

bool is_retweet(std::string_view text) { return text.starts_with("RT @"); }

std::vector<Span> username_and_url_tokens(std::string_view text) {
  std::vector<Span> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '@' && i + 1 < text.size() && is_handle_char(text[i + 1])) {
      std::size_t e = i + 1;
      while (e < text.size() && is_handle_char(text[e])) ++e;
      tokens.push_back({i, e});
      i = e;
      continue;
    }
    const std::string_view rest = text.substr(i);
    const std::size_t scheme = rest.starts_with("http://")    ? 7
                               : rest.starts_with("https://") ? 8
                                                              : 0;
    if (scheme > 0 && i + scheme < text.size() &&
        !utf8::is_ascii_space(text[i + scheme])) {
      std::size_t e = i + scheme;
      while (e < text.size() && !utf8::is_ascii_space(text[e])) ++e;
      tokens.push_back({i, e});
      i = e;
      continue;
    }
    ++i;
  }
  return tokens;
}

std::vector<MatchResult> post_filter(const std::vector<Tweet>& tweets,
                                     const std::vector<MatchResult>& matches) {
  std::unordered_map<std::string_view, const Tweet*> by_id;
  for (const auto& t : tweets) by_id.emplace(t.id, &t);
  std::unordered_map<std::string_view, std::vector<Span>> token_cache;
  std::vector<MatchResult> kept;
  for (const auto& m : matches) {
    auto it = by_id.find(m.tweet_id);
    if (it == by_id.end()) {
      throw InvalidArgument("match refers to unknown tweet '" + m.tweet_id +
                            "'");
    }
    const Tweet& tweet = *it->second;
    if (is_retweet(tweet.text)) continue;
    auto [cached, fresh] = token_cache.try_emplace(tweet.id);
    if (fresh) cached->second = username_and_url_tokens(tweet.text);
    const bool inside_token = std::any_of(
        cached->second.begin(), cached->second.end(), [&](const Span& tok) {
          return tok.start <= m.span.start && m.span.end <= tok.end;
        });
    if (!inside_token) kept.push_back(m);
  }
  return kept;
}

std::vector<TermClassFrequency> term_class_frequency_report(
    const Corpus& corpus, const Lexicon& lexicon) {
  std::vector<TermClassFrequency> table;
  std::unordered_map<std::string, std::size_t> row_of;
  for (const auto& term : lexicon.terms()) {
    row_of.emplace(term.canonical, table.size());
    table.push_back({term.canonical, {}});
  }
  if (lexicon.empty() || corpus.empty()) return table;
  const MatcherSet matchers = compile_matchers(lexicon);
  for (const auto& item : corpus.items()) {
    std::unordered_set<std::size_t> rows;
    for (const auto& m : matchers.match(item.tweet)) rows.insert(row_of.at(m.term));
    for (std::size_t r : rows) ++table[r].counts[label_index(item.label)];
  }
  return table;
}

}  // namespace bdtweet
