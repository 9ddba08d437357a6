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


#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bdtweet/corpus.hpp"
#include "bdtweet/error.hpp"
#include "bdtweet/normalize.hpp"
#include "bdtweet/rng.hpp"
#include "bdtweet/utf8.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"

namespace bdtweet {
namespace {

using testing::golden_names;
using testing::GoldenCase;

std::vector<GoldenCase> load_golden() { return testing::load_golden(testing::golden_path()); }

Tweet make_tweet(const std::string& text) { return Tweet{"t", "u", text}; }

std::string run_case(const GoldenCase& c) { return testing::normalize_golden(c, c.text, true); }

std::string second_pass(const GoldenCase& c, const std::string& output) {
  return testing::normalize_golden(c, output, false);
}

TEST(NormalizationGolden, FileHasEnoughCases) {
  const auto cases = load_golden();
  EXPECT_GE(cases.size(), 25u);
  std::size_t classic = 0;
  for (const auto& c : cases) classic += c.pipeline == "classic";
  EXPECT_GT(classic, 10u);
  EXPECT_GT(cases.size() - classic, 10u);
}

TEST(NormalizationGolden, ByteExact) {
  for (const auto& c : load_golden()) {
    EXPECT_EQ(run_case(c), c.expected) << c.pipeline << ": " << c.text;
  }
}

TEST(NormalizationGolden, IdempotentOnOutputs) {
  for (const auto& c : load_golden()) {
    EXPECT_EQ(second_pass(c, c.expected), c.expected) << c.pipeline << ": " << c.text;
  }
}

TEST(NameLexicon, LowercasedAndDeduplicated) {
  EXPECT_EQ(parse_name_lexicon("Emma\nNoah\n").names(),
            (std::set<std::string, std::less<>>{"emma", "noah"}));
  EXPECT_EQ(parse_name_lexicon("Emma\nEmma\n# comment\n\n").size(), 1u);
  EXPECT_THROW(parse_name_lexicon(""), DataError);
  EXPECT_THROW(parse_name_lexicon("# nothing\n"), DataError);
}

TEST(NameLexicon, LoadFromFile) {
  const auto dir = testing::scratch_dir("names");
  {
    std::ofstream f(dir / "names.txt");
    f << "Liam\nOlivia\nliam\n";
  }
  const NameLexicon names = load_name_lexicon(dir / "names.txt");
  EXPECT_EQ(names.size(), 2u);
  EXPECT_TRUE(names.contains("olivia"));
  EXPECT_THROW(load_name_lexicon(dir / "missing.txt"), DataError);
}

TEST(ClassicNormalize, NamesOnlyWhenCapitalized) {
  const NameLexicon names = golden_names();
  const NormalizationConfig cfg;
  EXPECT_EQ(classic_normalize(make_tweet("Will said grace"), std::nullopt,
                              parse_name_lexicon("will\ngrace\n"), cfg)
                .joined(),
            "<name> said grace");
  EXPECT_EQ(classic_normalize(make_tweet("emma EMMA"), std::nullopt, names, cfg).joined(),
            "emma <name>");
}

TEST(ClassicNormalize, CustomTokenSets) {
  NormalizationConfig cfg;
  cfg.possessive_pronouns = {"your"};
  cfg.child_terms = {"grandson"};
  cfg.third_person_pronouns = {"they"};
  EXPECT_EQ(classic_normalize(make_tweet("your grandson and my son they said"),
                              std::nullopt, NameLexicon{}, cfg)
                .joined(),
            "<poss> <child> and my son <thirdperson> said");
}

TEST(ClassicNormalize, CustomPlaceholders) {
  NormalizationConfig cfg;
  cfg.placeholders.bdterm = "<defect>";
  cfg.placeholders.user = "<at>";
  const std::string text = "@amy her clubfoot";
  EXPECT_EQ(classic_normalize(make_tweet(text), Span{9, 17}, NameLexicon{}, cfg).joined(),
            "<at> <thirdperson> <defect>");
}

TEST(ClassicNormalize, SpanInsideWordIsIsolated) {
  const std::string text = "sad#gastroschisis!";
  const auto out = classic_normalize(make_tweet(text), Span{4, 17}, NameLexicon{},
                                     NormalizationConfig{});
  EXPECT_EQ(out.joined(), "sad <bdterm>");
}

TEST(ClassicNormalize, KeepsId) {
  const Tweet tw{"id-9", "u", "Hello"};
  EXPECT_EQ(classic_normalize(tw, std::nullopt, NameLexicon{}, NormalizationConfig{}).id,
            "id-9");
}

TEST(NormalizationConfig, Validate) {
  NormalizationConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.placeholders.child = "child";
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.placeholders.child = "<poss>";
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.placeholders.child = "<a b>";
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.placeholders.child = "";
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

// Random tweets assembled from pieces that exercise every rule.
std::string random_text(Rng& rng, bool placeholders = true) {
  static const std::vector<std::string> pieces = {
      "Emma", "Noah's", "my", "Our", "kids", "babies", "running", "diagnosed",
      "relational", "@bob", "@x_1:", "http://t.co/a", "https://x.y/z?q=1", "#CHD",
      "sooooo", "!!!", "?!", "3/4", "10", "😍😍", "👍🏽", "...", "a--b", "caresses",
      "HE", "Grace", "ponies", "generalizations", "<user>", "<url>", "<bdterm>",
      "<number>", "<hashtag>", "<elong>", "<repeat>", "hopefully", "toys", "\t", "é"};
  std::string out;
  const std::size_t n = 1 + rng.below(12);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += rng.below(4) == 0 ? "" : " ";
    const std::string& piece = pieces[rng.below(pieces.size())];
    if (!placeholders && piece.front() == '<') continue;
    out += piece;
  }
  return out;
}

TEST(NormalizeProperties, IdempotentAndDeterministic) {
  Rng rng(99);
  const NameLexicon names = golden_names();
  const NormalizationConfig cfg;
  for (int i = 0; i < 2000; ++i) {
    const Tweet tw = make_tweet(random_text(rng));
    const auto classic = classic_normalize(tw, std::nullopt, names, cfg);
    EXPECT_EQ(classic.tokens, classic_normalize(tw, std::nullopt, names, cfg).tokens);
    EXPECT_EQ(classic_normalize(make_tweet(classic.joined()), std::nullopt, names, cfg)
                  .joined(),
              classic.joined())
        << tw.text;
    const auto emb = embedding_normalize(tw);
    EXPECT_EQ(embedding_normalize(make_tweet(emb.joined())).joined(), emb.joined())
        << tw.text;
  }
}

TEST(NormalizeProperties, ClassicAlphabet) {
  Rng rng(5);
  const NameLexicon names = golden_names();
  for (int i = 0; i < 1000; ++i) {
    const auto out =
        classic_normalize(make_tweet(random_text(rng)), std::nullopt, names, {});
    for (const auto& tok : out.tokens) {
      ASSERT_FALSE(tok.empty());
      const bool placeholder = tok.front() == '<' && tok.back() == '>';
      const std::string_view core =
          placeholder ? std::string_view(tok).substr(1, tok.size() - 2) : tok;
      for (char ch : core) EXPECT_TRUE(ch >= 'a' && ch <= 'z') << tok;
    }
  }
}

TEST(NormalizeProperties, SpanGivesExactlyOneBdterm) {
  Rng rng(17);
  const NameLexicon names = golden_names();
  for (int i = 0; i < 1000; ++i) {
    const std::string prefix = random_text(rng, false);
    const std::string text = prefix + " cleft palate " + random_text(rng, false);
    const Span span{prefix.size() + 1, prefix.size() + 13};
    const auto out = classic_normalize(make_tweet(text), span, names, {});
    EXPECT_EQ(std::count(out.tokens.begin(), out.tokens.end(), "<bdterm>"), 1)
        << text;
  }
}

TEST(EmbeddingNormalize, PictographsKeptWhole) {
  const auto out = embedding_normalize(make_tweet("love👨‍👩‍👧it"));
  EXPECT_EQ(out.tokens, (std::vector<std::string>{"love", "👨‍👩‍👧", "it"}));
}

}  // namespace
}  // namespace bdtweet
