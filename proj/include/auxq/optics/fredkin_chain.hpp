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

#include <array>
#include <string>
#include <vector>

#include "auxq/optics/interferometer.hpp"
#include "auxq/optics/photon_state.hpp"
#include "auxq/optics/postselect.hpp"

namespace auxq::optics {

/**
 * One partial-swap pass of the three-photon Fredkin gate.
 *
 * Photons are always listed (c, t1, t2). `encodings` place the incoming
 * logical block on input channels, `roles` read it back after `device`, and
 * only `accepted` coincidences continue. A photon not taking part sits on a
 * hold mode that the device leaves alone.
 */
struct ChainStage {
  std::string name;
  InterferometerSpec device;
  std::vector<Encoding> encodings;
  std::vector<Role> roles;
  std::vector<AcceptedPattern> accepted;
};

struct FredkinChain {
  ChannelBasis basis;
  std::vector<ChainStage> stages;
};

/// Leftmost PBS and p-swap on (c, t2); p-swap on (c, t1); p-swap on (c, t2) and the merging PBS.
FredkinChain build_fredkin_interferometer();

std::vector<std::string> fredkin_modes();

/// One heralded path through all stages.
struct ChainRecord {
  /// Accepted pattern name per stage, e.g. "(9,t1,11)".
  std::vector<std::string> stage_patterns;
  /// Final arm of c, stage-2 arm of t1, final arm of t2.
  std::array<std::string, 3> label;
  /// Final stage outcome with the accumulated amplitude block over (c, t1, t2).
  PostSelectionOutcome outcome;
  CVector corrected;
};

/// Runs an 8-dim logical input (index c*4 + t1*2 + t2) through every stage.
std::vector<ChainRecord> run_fredkin_chain(const FredkinChain& chain, const CVector& logical);

}  // namespace auxq::optics
