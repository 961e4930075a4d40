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
#include <utility>
#include <vector>

#include "auxq/core/types.hpp"

namespace auxq {

bool is_unitary(const CMatrix& m, double tol = kTolerance);

/// Square complex matrix that is unitary to within `kTolerance`.
class UnitaryMatrix {
 public:
  /// Throws std::invalid_argument when `entries` is not square or not unitary.
  explicit UnitaryMatrix(CMatrix entries);

  static UnitaryMatrix identity(std::size_t dim);
  /// Permutation matrix sending basis state `j` to `image[j]`.
  static UnitaryMatrix permutation(const std::vector<std::size_t>& image);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  UnitaryMatrix adjoint() const;
  /// Matrix product `*this * rhs`, i.e. `rhs` is applied first.
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

 private:
  struct Trusted {};
  UnitaryMatrix(CMatrix entries, Trusted) : entries_(std::move(entries)) {}

  CMatrix entries_;
};

struct MatrixComparison {
  bool equal = false;
  double max_deviation = 0.0;
};

/// Exact entrywise comparison (no global-phase freedom).
MatrixComparison matrices_equal(const CMatrix& a, const CMatrix& b, double tol = kTolerance);

}  // namespace auxq
