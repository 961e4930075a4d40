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

#include "auxq/optics/interferometer.hpp"

#include <algorithm>
#include <cstring>

namespace auxq::optics {

UnitaryMatrix InterferometerSpec::compile() const {
  const auto n = static_cast<Eigen::Index>(basis.size());
  CMatrix u = CMatrix::Identity(n, n);
  for (const auto& e : elements) u = element_matrix(e, basis) * u;
  return UnitaryMatrix(std::move(u));
}

std::size_t InterferometerSpec::count(const char* kind) const {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(),
                    [kind](const OpticalElement& e) { return std::strcmp(kind_name(e), kind) == 0; }));
}

}  // namespace auxq::optics
