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

#ifndef BDTWEET_LEVENSHTEIN_HPP_
#define BDTWEET_LEVENSHTEIN_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace bdtweet {

// Unit-cost insert/delete/substitute distance over Unicode scalars.
std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);

// Like levenshtein_distance but gives up once the distance is known to
// exceed `limit`, returning limit + 1.
std::size_t levenshtein_distance_bounded(std::u32string_view a,
                                         std::u32string_view b,
                                         std::size_t limit);

// (lensum - lendist) / lensum with lengths in Unicode scalars; 1 when both
// strings are empty.
double levenshtein_ratio(std::string_view a, std::string_view b);
double levenshtein_ratio(std::u32string_view a, std::u32string_view b);

// Upper bound (lensum - |len_a - len_b|) / lensum used to skip pairs.
double levenshtein_ratio_upper_bound(std::size_t len_a, std::size_t len_b);

// True iff levenshtein_ratio(a, b) > k, without computing the full distance
// when the bound or an early cutoff settles it.
bool levenshtein_ratio_exceeds(std::u32string_view a, std::u32string_view b,
                               double k);

}  // namespace bdtweet

#endif  // BDTWEET_LEVENSHTEIN_HPP_
