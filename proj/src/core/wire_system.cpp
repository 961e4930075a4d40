// Copyright 2026 The auxq Authors
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

#include "auxq/core/wire_system.hpp"

#include <stdexcept>
#include <string>

namespace auxq {

WireSystem::WireSystem(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("WireSystem: at least one wire is required");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument(
          "WireSystem: wire dimension must be >= 2, got " + std::to_string(d));
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t w = dims_.size(); w-- > 0;) {
    strides_[w] = total_dim_;
    total_dim_ *= static_cast<std::size_t>(dims_[w]);
  }
}

std::vector<int> WireSystem::index_to_digits(std::size_t index) const {
  if (index >= total_dim_) {
    throw std::out_of_range("index_to_digits: index " + std::to_string(index) +
                            " outside [0, " + std::to_string(total_dim_) + ")");
  }
  std::vector<int> digits(dims_.size());
  for (std::size_t w = 0; w < dims_.size(); ++w) {
    digits[w] = static_cast<int>(index / strides_[w]);
    index %= strides_[w];
  }
  return digits;
}

std::size_t WireSystem::digits_to_index(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) {
    throw std::invalid_argument("digits_to_index: digit count does not match wire count");
  }
  std::size_t index = 0;
  for (std::size_t w = 0; w < dims_.size(); ++w) {
    if (digits[w] < 0 || digits[w] >= dims_[w]) {
      throw std::out_of_range("digits_to_index: digit out of range on wire " +
                              std::to_string(w));
    }
    index += static_cast<std::size_t>(digits[w]) * strides_[w];
  }
  return index;
}

}  // namespace auxq
