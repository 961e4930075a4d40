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

#include <cstdint>

namespace auxq::optics {

/// Closed-form costs of the optical n-controlled Fredkin; nothing is simulated.
struct ResourceEstimate {
  int n = 0;
  /// Success probability is exactly 1 / probability_denominator = 2^-(4n+1).
  std::uint64_t probability_denominator = 0;
  double success_probability = 0.0;
  int pbs_count = 0;
  int cnot_count = 0;
  int pswap_count = 0;
};

inline constexpr int kMaxResourceN = 15;

/// Throws std::invalid_argument unless 1 <= n <= kMaxResourceN.
ResourceEstimate resource_calculator(int n);

}  // namespace auxq::optics
