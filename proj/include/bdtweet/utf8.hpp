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

#ifndef BDTWEET_UTF8_HPP_
#define BDTWEET_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bdtweet::utf8 {

// Decodes to Unicode scalars. Invalid sequences decode one byte at a time as
// U+FFFD so every input has a well-defined scalar count.
std::vector<char32_t> decode(std::string_view text);

void append(std::string& out, char32_t cp);

std::size_t scalar_count(std::string_view text);

// True when `offset` is 0, text.size(), or the start of a UTF-8 sequence.
bool is_boundary(std::string_view text, std::size_t offset);

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}
inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline char to_lower(char c) {
  return is_ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

// ASCII-only lowercasing; non-ASCII bytes are copied unchanged so byte offsets
// are preserved.
std::string ascii_lower(std::string_view text);

std::string_view trim(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace bdtweet::utf8

#endif  // BDTWEET_UTF8_HPP_
