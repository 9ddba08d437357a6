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

#ifndef BDTWEET_PORTER_STEMMER_HPP_
#define BDTWEET_PORTER_STEMMER_HPP_

#include <string>
#include <string_view>

namespace bdtweet {

// Porter (1980) suffix stripping, steps 1a through 5b, following Martin
// Porter's reference C implementation (including its "bli"->"ble" and
// "logi"->"log" step-2 rules). Input must be lowercase ASCII letters; words
// of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace bdtweet

#endif  // BDTWEET_PORTER_STEMMER_HPP_
