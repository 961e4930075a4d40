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
#include <string>
#include <vector>

#include "auxq/core/types.hpp"
#include "auxq/optics/elements.hpp"
#include "auxq/optics/photon_state.hpp"

namespace auxq::optics {

/// A detector group; `readout[v]` is the channel that reads logical value v.
struct DetectionArm {
  std::string name;
  Encoding readout;
};

/// A logical output slot (carrier, target, ...) and the arms that can serve it.
struct Role {
  std::string name;
  std::vector<DetectionArm> arms;
};

/// Feedforward element applied to the photon found in `role`'s arm.
struct Correction {
  std::size_t role = 0;
  OpticalElement element;
};

/// One accepted coincidence: an arm per role, plus the correction it triggers.
struct AcceptedPattern {
  std::vector<std::size_t> arms;
  std::vector<Correction> corrections;
};

struct PostSelectionOutcome {
  std::vector<std::size_t> arms;
  /// Arm name per role.
  std::vector<std::string> pattern;
  /// Logical dimension per role, most significant first.
  std::vector<int> block_dims;
  CVector amplitude_block;
  double probability = 0.0;
  std::vector<Correction> correction;
};

/// Every combination of arms, without corrections.
std::vector<AcceptedPattern> all_patterns(const std::vector<Role>& roles);

/**
 * Coincidence amplitudes for each accepted pattern.
 *
 * Detectors do not see photon labels, so the amplitude of finding one photon
 * on each role's readout channel is summed over every assignment of photons
 * to roles. Throws std::invalid_argument when arms share a channel or the
 * role count differs from the photon count.
 */
std::vector<PostSelectionOutcome> enumerate_outcomes(const PhotonState& state,
                                                     const std::vector<Role>& roles,
                                                     const std::vector<AcceptedPattern>& accepted);

/// The outcome's block after its corrections; an empty list leaves it unchanged.
CVector apply_feedforward(const PostSelectionOutcome& outcome, const std::vector<Role>& roles,
                          const ChannelBasis& basis);

double total_probability(const std::vector<PostSelectionOutcome>& outcomes);

}  // namespace auxq::optics
