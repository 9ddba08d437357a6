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

#include "bdtweet/levenshtein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bdtweet/utf8.hpp"

namespace bdtweet {

std::size_t levenshtein_distance(std::u32string_view a,
                                 std::u32string_view b) {
  return levenshtein_distance_bounded(a, b,
                                      std::numeric_limits<std::size_t>::max() - 1);
}

std::size_t levenshtein_distance_bounded(std::u32string_view a,
                                         std::u32string_view b,
                                         std::size_t limit) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t diff = a.size() - b.size();
  if (diff > limit) return limit + 1;
  if (b.empty()) return a.size();

  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    std::size_t row_min = row[0];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t up = row[j + 1];
      const std::size_t cost = a[i] == b[j] ? 0 : 1;
      row[j + 1] = std::min({up + 1, row[j] + 1, diag + cost});
      diag = up;
      row_min = std::min(row_min, row[j + 1]);
    }
    // Row minima never decrease, so the final distance is at least row_min.
    if (row_min > limit) return limit + 1;
  }
  return std::min(row[b.size()], limit + 1);
}

double levenshtein_ratio(std::u32string_view a, std::u32string_view b) {
  const std::size_t lensum = a.size() + b.size();
  if (lensum == 0) return 1.0;
  const std::size_t dist = levenshtein_distance(a, b);
  return static_cast<double>(lensum - dist) / static_cast<double>(lensum);
}

double levenshtein_ratio(std::string_view a, std::string_view b) {
  const auto da = utf8::decode(a);
  const auto db = utf8::decode(b);
  return levenshtein_ratio(std::u32string_view(da.data(), da.size()),
                           std::u32string_view(db.data(), db.size()));
}

double levenshtein_ratio_upper_bound(std::size_t len_a, std::size_t len_b) {
  const std::size_t lensum = len_a + len_b;
  if (lensum == 0) return 1.0;
  const std::size_t diff = len_a > len_b ? len_a - len_b : len_b - len_a;
  return static_cast<double>(lensum - diff) / static_cast<double>(lensum);
}

bool levenshtein_ratio_exceeds(std::u32string_view a, std::u32string_view b,
                               double k) {
  const std::size_t lensum = a.size() + b.size();
  if (lensum == 0) return 1.0 > k;
  if (!(levenshtein_ratio_upper_bound(a.size(), b.size()) > k)) return false;
  // ratio > k  <=>  dist < lensum * (1 - k); search up to the largest
  // distance that could still satisfy it, then confirm with the exact ratio.
  const double cap = static_cast<double>(lensum) * (1.0 - k);
  const std::size_t limit =
      cap <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(cap));
  const std::size_t dist = levenshtein_distance_bounded(a, b, limit);
  if (dist > limit) return false;
  const double ratio =
      static_cast<double>(lensum - dist) / static_cast<double>(lensum);
  return ratio > k;
}

}  // namespace bdtweet
