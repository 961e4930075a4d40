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

#include "auxq/core/unitary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace auxq {

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const CMatrix gram = m.adjoint() * m;
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  return (gram - id).cwiseAbs().maxCoeff() <= tol;
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
  }
  if (!is_unitary(entries_)) {
    throw std::invalid_argument("UnitaryMatrix: matrix is not unitary within tolerance");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(CMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::permutation(const std::vector<std::size_t>& image) {
  const auto n = static_cast<Eigen::Index>(image.size());
  if (n == 0) throw std::invalid_argument("UnitaryMatrix::permutation: empty image");
  CMatrix m = CMatrix::Zero(n, n);
  std::vector<bool> hit(image.size(), false);
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[j] >= image.size() || hit[image[j]]) {
      throw std::invalid_argument("UnitaryMatrix::permutation: image is not a bijection");
    }
    hit[image[j]] = true;
    m(static_cast<Eigen::Index>(image[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  // A bijection needs no numerical unitarity check.
  return UnitaryMatrix(std::move(m), Trusted{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(entries_.adjoint()); }

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.dim() != dim()) {
    throw std::invalid_argument("UnitaryMatrix product: dimension mismatch");
  }
  return UnitaryMatrix(entries_ * rhs.entries_);
}

MatrixComparison matrices_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrices_equal: shape mismatch (" + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
  MatrixComparison result;
  result.max_deviation = a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
  result.equal = result.max_deviation <= tol;
  return result;
}

}  // namespace auxq
