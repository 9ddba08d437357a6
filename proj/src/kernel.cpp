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

#include "bdtweet/kernel.hpp"

#include <cmath>

namespace bdtweet {

std::string_view kernel_name(KernelType type) {
  return type == KernelType::Rbf ? "rbf" : "linear";
}

std::optional<KernelType> parse_kernel(std::string_view name) {
  if (name == "rbf") return KernelType::Rbf;
  if (name == "linear") return KernelType::Linear;
  return std::nullopt;
}

double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma) {
  return std::exp(-gamma * squared_distance(x, y));
}

}  // namespace bdtweet
