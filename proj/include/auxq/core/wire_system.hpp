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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace auxq {

/**
 * Ordered collection of wires with per-wire dimensions.
 *
 * Basis indices are mixed-radix numbers with wire 0 as the most significant
 * digit, so a ket written left to right (control first) reads off directly as
 * a digit tuple.
 */
class WireSystem {
 public:
  explicit WireSystem(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t num_wires() const { return dims_.size(); }
  std::size_t total_dim() const { return total_dim_; }
  int dim(std::size_t wire) const { return dims_.at(wire); }
  /// Index distance between neighbouring levels of `wire`.
  std::size_t stride(std::size_t wire) const { return strides_.at(wire); }

  std::vector<int> index_to_digits(std::size_t index) const;
  std::size_t digits_to_index(std::span<const int> digits) const;

  bool operator==(const WireSystem& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_dim_ = 1;
};

}  // namespace auxq
