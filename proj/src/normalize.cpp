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

#include "bdtweet/normalize.hpp"

#include <algorithm>
#include <array>

#include "bdtweet/error.hpp"
#include "bdtweet/lexicon.hpp"
#include "bdtweet/porter_stemmer.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

// A token under construction. `fixed` pieces (placeholders and isolated
// marks) are emitted verbatim by every later rule.
struct Piece {
  std::string text;
  bool fixed = false;
};

using Pieces = std::vector<Piece>;

// Splits every non-fixed piece with `splitter`, which appends to `out` the
// replacement pieces for one piece.
template <typename Splitter>
Pieces split_pieces(const Pieces& in, Splitter splitter) {
  Pieces out;
  for (const auto& p : in) {
    if (p.fixed) {
      out.push_back(p);
    } else {
      splitter(p.text, out);
    }
  }
  return out;
}

void push_text(Pieces& out, std::string_view text) {
  if (!text.empty()) out.push_back({std::string(text), false});
}

void split_handles_and_urls(std::string_view text, Pieces& out,
                            std::string_view user, std::string_view url) {
  std::size_t pos = 0;
  for (const Span& tok : username_and_url_tokens(text)) {
    push_text(out, text.substr(pos, tok.start - pos));
    out.push_back({std::string(text[tok.start] == '@' ? user : url), true});
    pos = tok.end;
  }
  push_text(out, text.substr(pos));
}

std::string strip_non_alpha(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c >= 'a' && c <= 'z') out.push_back(c);
  }
  return out;
}

bool is_capitalized_name(std::string_view token, const NameLexicon& names,
                         std::string& lowered) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && !utf8::is_ascii_alpha(token[b])) ++b;
  while (e > b && !utf8::is_ascii_alpha(token[e - 1])) --e;
  if (b == e || !utf8::is_ascii_upper(token[b])) return false;
  // The leading/trailing trim may only have removed ASCII punctuation.
  for (std::size_t i = 0; i < token.size(); ++i) {
    const bool inner = i >= b && i < e;
    if (inner && !utf8::is_ascii_alpha(token[i])) return false;
    if (!inner && static_cast<unsigned char>(token[i]) >= 0x80) return false;
  }
  lowered = utf8::ascii_lower(token.substr(b, e - b));
  return names.contains(lowered);
}

constexpr std::array<std::string_view, 6> kEmbeddingPlaceholders = {
    "<user>", "<url>", "<number>", "<repeat>", "<elong>", "<hashtag>"};

bool is_pictographic(char32_t cp) {
  return (cp >= 0x2190 && cp <= 0x2BFF) || (cp >= 0x1F000 && cp <= 0x1FAFF);
}

bool is_emoji_modifier(char32_t cp) {
  return cp == 0xFE0F || cp == 0x200D || (cp >= 0x1F3FB && cp <= 0x1F3FF);
}

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

void split_pictographs(std::string_view text, Pieces& out) {
  const auto cps = utf8::decode(text);
  std::string run;
  std::string emoji;
  char32_t prev = 0;
  auto flush_run = [&] {
    push_text(out, run);
    run.clear();
  };
  auto flush_emoji = [&] {
    if (!emoji.empty()) out.push_back({emoji, true});
    emoji.clear();
  };
  for (char32_t cp : cps) {
    const bool attaches =
        !emoji.empty() && (is_emoji_modifier(cp) || prev == 0x200D);
    if (attaches) {
      utf8::append(emoji, cp);
    } else if (is_pictographic(cp)) {
      flush_run();
      flush_emoji();
      utf8::append(emoji, cp);
    } else {
      flush_emoji();
      utf8::append(run, cp);
    }
    prev = cp;
  }
  flush_run();
  flush_emoji();
}

void split_slashes(std::string_view text, Pieces& out) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '/') continue;
    push_text(out, text.substr(pos, i - pos));
    out.push_back({"/", true});
    pos = i + 1;
  }
  push_text(out, text.substr(pos));
}

void split_numbers(std::string_view text, Pieces& out) {
  std::size_t pos = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!utf8::is_ascii_digit(text[i])) {
      ++i;
      continue;
    }
    push_text(out, text.substr(pos, i - pos));
    while (i < text.size() && utf8::is_ascii_digit(text[i])) ++i;
    out.push_back({"<number>", true});
    pos = i;
  }
  push_text(out, text.substr(pos));
}

void split_repeats(std::string_view text, Pieces& out) {
  std::size_t pos = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    std::size_t e = i + 1;
    while (e < text.size() && text[e] == c) ++e;
    if (c != '#' && is_ascii_punct(c) && e - i >= 2) {
      push_text(out, text.substr(pos, i - pos));
      out.push_back({std::string(1, c), true});
      out.push_back({"<repeat>", true});
      pos = e;
    }
    i = e;
  }
  push_text(out, text.substr(pos));
}

void split_elongations(std::string_view text, Pieces& out) {
  std::string shortened;
  bool elongated = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    std::size_t e = i + 1;
    while (e < text.size() && text[e] == c) ++e;
    const std::size_t run = e - i;
    if (utf8::is_ascii_alpha(c) && run > 3) {
      shortened.append(2, c);
      elongated = true;
    } else {
      shortened.append(text.substr(i, run));
    }
    i = e;
  }
  push_text(out, shortened);
  if (elongated) out.push_back({"<elong>", true});
}

void split_hashtags(std::string_view text, Pieces& out) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '#') continue;
    push_text(out, text.substr(pos, i - pos));
    out.push_back({"<hashtag>", true});
    pos = i + 1;
  }
  push_text(out, text.substr(pos));
}

}  // namespace

NameLexicon::NameLexicon(std::set<std::string> names) {
  for (const auto& n : names) names_.insert(utf8::ascii_lower(utf8::trim(n)));
  names_.erase("");
  if (names_.empty()) throw DataError("name lexicon is empty");
  for (const auto& n : names_) {
    if (std::any_of(n.begin(), n.end(), utf8::is_ascii_space)) {
      throw DataError("name '" + n + "' contains whitespace");
    }
  }
}

bool NameLexicon::contains(std::string_view lowered) const {
  return names_.find(lowered) != names_.end();
}

NameLexicon parse_name_lexicon(std::string_view contents) {
  std::set<std::string> names;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    const auto line = utf8::trim(contents.substr(start, nl - start));
    start = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    names.emplace(line);
  }
  if (names.empty()) throw DataError("name lexicon is empty");
  return NameLexicon(std::move(names));
}

NameLexicon load_name_lexicon(const std::filesystem::path& path) {
  return parse_name_lexicon(read_file(path));
}

void NormalizationConfig::validate() const {
  const std::array<const std::string*, 7> all = {
      &placeholders.user,  &placeholders.url,   &placeholders.name,
      &placeholders.bdterm, &placeholders.poss, &placeholders.child,
      &placeholders.third_person};
  std::set<std::string_view> seen;
  for (const std::string* p : all) {
    if (p->size() < 3 || p->front() != '<' || p->back() != '>') {
      throw InvalidArgument("placeholder '" + *p +
                            "' must be of the form <word>");
    }
    if (std::any_of(p->begin(), p->end(), utf8::is_ascii_space)) {
      throw InvalidArgument("placeholder '" + *p + "' contains whitespace");
    }
    if (!seen.insert(*p).second) {
      throw InvalidArgument("placeholder '" + *p + "' is used twice");
    }
  }
}

std::string NormalizedText::joined() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

namespace {

// Steps 6-7 applied until the token stops changing, so that a stem which is
// itself stemmable, or which lands on a listed token, is settled in one pass.
std::string normalize_word(std::string word, const NormalizationConfig& config) {
  const Placeholders& ph = config.placeholders;
  for (int round = 0; round < 8; ++round) {
    if (config.possessive_pronouns.contains(word)) return ph.poss;
    if (config.child_terms.contains(word)) return ph.child;
    if (config.third_person_pronouns.contains(word)) return ph.third_person;
    std::string stem = porter_stem(word);
    if (stem == word) break;
    word = std::move(stem);
  }
  return word;
}

}  // namespace

NormalizedText classic_normalize(const Tweet& tweet,
                                 const std::optional<Span>& match_span,
                                 const NameLexicon& names,
                                 const NormalizationConfig& config) {
  const Placeholders& ph = config.placeholders;
  const std::string_view text = tweet.text;

  Pieces pieces;
  if (match_span) {
    if (!span_valid(text, *match_span)) {
      throw InvalidArgument("invalid span for tweet '" + tweet.id + "'");
    }
    push_text(pieces, text.substr(0, match_span->start));
    pieces.push_back({ph.bdterm, true});
    push_text(pieces, text.substr(match_span->end));
  } else {
    push_text(pieces, text);
  }

  pieces = split_pieces(pieces, [&](std::string_view t, Pieces& out) {
    split_handles_and_urls(t, out, ph.user, ph.url);
  });

  const std::array<const std::string*, 7> known = {
      &ph.user, &ph.url,  &ph.name,        &ph.bdterm,
      &ph.poss, &ph.child, &ph.third_person};
  auto is_placeholder = [&](std::string_view tok) {
    return std::any_of(known.begin(), known.end(),
                       [&](const std::string* p) { return *p == tok; });
  };

  // Whitespace tokenization; steps 3-7 are token-local.
  Pieces tokens;
  for (const auto& p : pieces) {
    if (p.fixed) {
      tokens.push_back(p);
      continue;
    }
    for (auto& tok : utf8::split_whitespace(p.text)) {
      const bool fixed = is_placeholder(tok);
      tokens.push_back({std::move(tok), fixed});
    }
  }

  NormalizedText out;
  out.id = tweet.id;
  std::string lowered_name;
  for (auto& tok : tokens) {
    if (tok.fixed) {
      out.tokens.push_back(std::move(tok.text));
      continue;
    }
    if (is_capitalized_name(tok.text, names, lowered_name)) {
      out.tokens.push_back(ph.name);
      continue;
    }
    std::string word = strip_non_alpha(utf8::ascii_lower(tok.text));
    if (word.empty()) continue;
    out.tokens.push_back(normalize_word(std::move(word), config));
  }
  return out;
}

NormalizedText embedding_normalize(const Tweet& tweet) {
  NormalizedText out;
  out.id = tweet.id;
  for (const auto& raw : utf8::split_whitespace(tweet.text)) {
    const bool known =
        std::find(kEmbeddingPlaceholders.begin(), kEmbeddingPlaceholders.end(),
                  raw) != kEmbeddingPlaceholders.end();
    if (known) {
      out.tokens.push_back(raw);
      continue;
    }
    Pieces pieces{{raw, false}};
    pieces = split_pieces(pieces, [](std::string_view t, Pieces& o) {
      split_handles_and_urls(t, o, "<user>", "<url>");
    });
    pieces = split_pieces(pieces, split_pictographs);
    pieces = split_pieces(pieces, split_slashes);
    pieces = split_pieces(pieces, split_numbers);
    pieces = split_pieces(pieces, split_repeats);
    pieces = split_pieces(pieces, split_elongations);
    pieces = split_pieces(pieces, split_hashtags);
    for (auto& p : pieces) {
      out.tokens.push_back(p.fixed ? std::move(p.text)
                                   : utf8::ascii_lower(p.text));
    }
  }
  return out;
}

}  // namespace bdtweet
