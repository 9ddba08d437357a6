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

#ifndef BDTWEET_TESTS_SUPPORT_FIXTURES_HPP_
#define BDTWEET_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "bdtweet/corpus.hpp"

namespace bdtweet::testing {

inline AnnotatedTweet tweet(std::string id, std::string text,
                            Label label = Label::NonDefect) {
  AnnotatedTweet t;
  t.tweet.id = std::move(id);
  t.tweet.user_id = "u1";
  t.tweet.text = std::move(text);
  t.label = label;
  return t;
}

// Corpus with the given per-class sizes; ids "c<class>_<n>", items
// interleaved round-robin across classes.
inline Corpus corpus_with_counts(std::size_t defect, std::size_t possible,
                                 std::size_t non_defect) {
  const std::size_t want[3] = {defect, possible, non_defect};
  std::size_t made[3] = {0, 0, 0};
  std::vector<AnnotatedTweet> items;
  bool more = true;
  while (more) {
    more = false;
    for (std::size_t c = 0; c < 3; ++c) {
      if (made[c] < want[c]) {
        const std::string id = "c" + std::to_string(c) + "_" + std::to_string(made[c]);
        items.push_back(tweet(id, "text " + id, kAllLabels[c]));
        ++made[c];
        more = true;
      }
    }
  }
  return Corpus(std::move(items));
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("bdtweet_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace bdtweet::testing

#endif  // BDTWEET_TESTS_SUPPORT_FIXTURES_HPP_
