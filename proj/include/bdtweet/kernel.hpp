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

#ifndef BDTWEET_KERNEL_HPP_
#define BDTWEET_KERNEL_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "bdtweet/features.hpp"

namespace bdtweet {

enum class KernelType : std::uint8_t { Rbf, Linear };

std::string_view kernel_name(KernelType type);
std::optional<KernelType> parse_kernel(std::string_view name);

// exp(-gamma * |x - y|^2)
double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma);

struct Kernel {
  KernelType type = KernelType::Rbf;
  double gamma = 1.0;

  double operator()(const SparseVector& x, const SparseVector& y) const {
    return type == KernelType::Rbf ? rbf_kernel(x, y, gamma) : dot(x, y);
  }
};

}  // namespace bdtweet

#endif  // BDTWEET_KERNEL_HPP_
