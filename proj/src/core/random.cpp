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

#include "auxq/core/random.hpp"

#include <cmath>

namespace auxq {

namespace {

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = Complex(normal(rng), normal(rng));
  }
  return m;
}

}  // namespace

UnitaryMatrix random_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  const CMatrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return UnitaryMatrix(std::move(q));
}

CVector random_state_vector(std::size_t dim, Rng& rng) {
  CVector v = ginibre(static_cast<Eigen::Index>(dim), 1, rng).col(0);
  return v / v.norm();
}

}  // namespace auxq
