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

#include "auxq/optics/resources.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace auxq::optics {

ResourceEstimate resource_calculator(int n) {
  if (n < 1 || n > kMaxResourceN) {
    throw std::invalid_argument("resource_calculator: n must be in 1.." +
                                std::to_string(kMaxResourceN) + ", got " + std::to_string(n));
  }
  ResourceEstimate r;
  r.n = n;
  r.probability_denominator = std::uint64_t{1} << (4 * n + 1);
  r.success_probability = std::ldexp(1.0, -(4 * n + 1));
  r.pbs_count = 2 * n;
  r.cnot_count = 2 * (n - 1);
  r.pswap_count = 3;
  return r;
}

}  // namespace auxq::optics
