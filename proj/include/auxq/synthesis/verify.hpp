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

#include "auxq/core/circuit.hpp"

namespace auxq::synthesis {

struct SynthesisReport {
  int n = 0;
  bool verified = false;
  double max_deviation = 0.0;
  double leakage = 0.0;
  std::size_t two_qubit_count = 0;
  std::size_t single_qudit_count = 0;
  int carrier_dim = 0;
};

/// Every wire restricted to {0, 1}.
LevelSelection qubit_levels(const WireSystem& system);

/**
 * Builds the n-controlled Fredkin, projects it onto the all-qubit subspace by
 * running each computational basis state through the gate list, and compares
 * the block with the truth-table oracle. The full carrier unitary is never
 * materialized, so n = 8 stays small.
 */
SynthesisReport verify_synthesis(int n);

}  // namespace auxq::synthesis
