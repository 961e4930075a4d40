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
#include <functional>
#include <vector>

#include "auxq/core/random.hpp"
#include "auxq/core/unitary.hpp"
#include "auxq/optics/fredkin_chain.hpp"
#include "auxq/optics/interferometer.hpp"

namespace auxq::optics {

/// Probability and corrected logical block of one accepted event.
struct HeraldedEvent {
  double probability = 0.0;
  CVector corrected;
};

/// Maps a logical input to every accepted event.
using PostSelectedGate = std::function<std::vector<HeraldedEvent>(const CVector&)>;

PostSelectedGate pswap_gate(const InterferometerSpec& spec, bool feedforward);
PostSelectedGate fredkin_gate(const FredkinChain& chain);

struct FidelityReport {
  std::size_t trials = 0;
  /// Smallest |<ideal|corrected>|^2 over all events with nonzero probability.
  double min_fidelity = 1.0;
  double mean_probability = 0.0;
  double std_probability = 0.0;
  double min_probability = 0.0;
  double max_probability = 0.0;
  std::vector<double> probabilities;
};

/// |<a|b>|^2 / (|a|^2 |b|^2); 0 when either vector vanishes.
double state_fidelity(const CVector& a, const CVector& b);

/// Random normalized logical inputs drawn from `rng`.
FidelityReport gate_fidelity(const PostSelectedGate& gate, const UnitaryMatrix& ideal,
                             std::size_t trials, Rng& rng);

}  // namespace auxq::optics
