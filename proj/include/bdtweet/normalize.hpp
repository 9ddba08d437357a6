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

#ifndef BDTWEET_NORMALIZE_HPP_
#define BDTWEET_NORMALIZE_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bdtweet/corpus.hpp"

namespace bdtweet {

// Lowercased given names, single tokens.
class NameLexicon {
 public:
  NameLexicon() = default;
  explicit NameLexicon(std::set<std::string> names);

  bool contains(std::string_view lowered) const;
  const std::set<std::string, std::less<>>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::set<std::string, std::less<>> names_;
};

NameLexicon load_name_lexicon(const std::filesystem::path& path);
NameLexicon parse_name_lexicon(std::string_view contents);

struct Placeholders {
  std::string user = "<user>";
  std::string url = "<url>";
  std::string name = "<name>";
  std::string bdterm = "<bdterm>";
  std::string poss = "<poss>";
  std::string child = "<child>";
  std::string third_person = "<thirdperson>";
};

struct NormalizationConfig {
  std::set<std::string, std::less<>> possessive_pronouns{"my", "our"};
  std::set<std::string, std::less<>> child_terms{
      "son",  "daughter", "child", "baby",    "kid",
      "boy",  "girl",     "twins", "toddler", "newborn"};
  std::set<std::string, std::less<>> third_person_pronouns{
      "she", "he", "her", "him", "his", "hers"};
  Placeholders placeholders;

  // Throws InvalidArgument unless placeholders are non-empty, whitespace
  // free, pairwise distinct and wrapped in '<' '>'.
  void validate() const;
};

struct NormalizedText {
  std::string id;
  std::vector<std::string> tokens;

  std::string joined() const;
};

// Classic pipeline, in order:
//   1. matched span -> bdterm placeholder
//   2. @usernames and http(s) URLs -> user / url placeholders
//   3. capitalized tokens found in the name lexicon -> name placeholder
//   4. lowercase
//   5. delete non-alphabetic characters (tokens left empty are dropped)
//   6. possessive / child / third-person tokens -> their placeholders
//   7. Porter-stem the remaining tokens
// Placeholders are isolated as their own tokens and never modified; input
// tokens already spelled as a placeholder pass through unchanged.
NormalizedText classic_normalize(const Tweet& tweet,
                                 const std::optional<Span>& match_span,
                                 const NameLexicon& names,
                                 const NormalizationConfig& config);

// Embedding-style pipeline, in order: usernames -> <user>, URLs -> <url>;
// spaces around '/'; digit runs -> <number>; runs of >= 2 identical
// punctuation marks -> the mark + <repeat>; letter runs longer than 3 cut
// to 2 with <elong> after the word; '#' -> <hashtag>; whitespace tokenize;
// lowercase. Emoji and other pictographic symbols become their own tokens.
NormalizedText embedding_normalize(const Tweet& tweet);

}  // namespace bdtweet

#endif  // BDTWEET_NORMALIZE_HPP_
