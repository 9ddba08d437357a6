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

#ifndef BDTWEET_LEXICON_HPP_
#define BDTWEET_LEXICON_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bdtweet/corpus.hpp"

namespace bdtweet {

struct LexiconTerm {
  std::string canonical;
  std::vector<std::string> variants;
};

class Lexicon {
 public:
  Lexicon() = default;
  // Throws DataError on empty terms or case-insensitive duplicate canonicals.
  explicit Lexicon(std::vector<LexiconTerm> terms);

  const std::vector<LexiconTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<LexiconTerm> terms_;
};

// One canonical term per line, variants appended with '|', '#' comment lines.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(std::string_view contents);

struct MatchResult {
  std::string tweet_id;
  std::string term;  // canonical
  Span span;
  std::string surface;
  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Case-insensitive, word-boundary-anchored matchers for every term and
// variant. Words of a pattern match across any run of whitespace or hyphens.
// At a given start offset the longest pattern wins; ties go to the earlier
// lexicon entry.
class MatcherSet {
 public:
  // Matches within one text, left to right, non-overlapping.
  std::vector<MatchResult> match(const Tweet& tweet) const;

  std::size_t pattern_count() const { return patterns_.size(); }

 private:
  friend MatcherSet compile_matchers(const Lexicon& lexicon);

  struct Pattern {
    std::vector<std::string> words;  // lowercased
    std::size_t term_index = 0;
  };

  // Returns the end offset of a match of `p` at `start` in `lowered`, or 0.
  static std::size_t match_at(const Pattern& p, std::string_view lowered,
                              std::size_t start);

  std::vector<std::string> canonical_;
  std::vector<Pattern> patterns_;
  // Pattern indices keyed by the first byte of the pattern.
  std::array<std::vector<std::size_t>, 256> by_first_byte_;
};

MatcherSet compile_matchers(const Lexicon& lexicon);

std::vector<MatchResult> match_corpus(const std::vector<Tweet>& tweets,
                                      const MatcherSet& matchers);

// Retweets start with "RT @".
bool is_retweet(std::string_view text);

// Byte ranges of `@name` tokens ([A-Za-z0-9_]+) and http(s):// URL tokens.
std::vector<Span> username_and_url_tokens(std::string_view text);

// Drops matches in retweets and matches lying inside a username or URL token.
std::vector<MatchResult> post_filter(const std::vector<Tweet>& tweets,
                                     const std::vector<MatchResult>& matches);

struct TermClassFrequency {
  std::string term;
  ClassCounts counts{};
};

// For each canonical term (lexicon order), the number of tweets per class
// with at least one match of that term.
std::vector<TermClassFrequency> term_class_frequency_report(
    const Corpus& corpus, const Lexicon& lexicon);

}  // namespace bdtweet

#endif  // BDTWEET_LEXICON_HPP_
