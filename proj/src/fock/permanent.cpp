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

#include "auxq/fock/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace auxq::fock {

Complex permanent(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("permanent: matrix must be square");
  if (m.rows() > kMaxPermanentDim) throw std::invalid_argument("permanent: matrix too large");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<Eigen::Index> sigma(n);
  std::iota(sigma.begin(), sigma.end(), Eigen::Index{0});
  Complex sum = 0.0;
  do {
    Complex term = 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), sigma[i]);
    sum += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

}  // namespace auxq::fock
