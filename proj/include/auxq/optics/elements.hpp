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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "auxq/core/types.hpp"
#include "auxq/optics/channel.hpp"

namespace auxq::optics {

/**
 * One beam crossing a polarizing beam splitter. H goes straight (a -> t,
 * b -> r) and V crosses (a -> r, b -> t), with no phase on either path.
 * A missing second input or reflected output means that beam is not used.
 */
struct PbsPass {
  std::string in_a;
  std::optional<std::string> in_b;
  std::string out_t;
  std::optional<std::string> out_r;
};

/// A cube may carry several parallel beams.
struct Pbs {
  std::vector<PbsPass> passes;
};

/// Half-wave plate at `angle_deg`, placed on every listed mode.
struct Hwp {
  std::vector<std::string> ports;
  double angle_deg = 0.0;
};

/// Phase e^{i phi} on both polarizations of every listed mode.
struct PhaseShift {
  std::vector<std::string> ports;
  double phi_rad = 0.0;
};

using OpticalElement = std::variant<Pbs, Hwp, PhaseShift>;

const char* kind_name(const OpticalElement& e);

/// Jones matrix on (H, V): [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
CMatrix hwp_matrix(double angle_deg);

/**
 * Channel-space matrix of a single element.
 *
 * Beam splitters give a partial channel map that is closed into a
 * permutation: channels the map neither reads nor writes stay put, and
 * written-but-unread channels take the read-but-unwritten ones in basis
 * order. Throws std::invalid_argument on unknown or duplicated ports.
 */
CMatrix element_matrix(const OpticalElement& e, const ChannelBasis& basis);

}  // namespace auxq::optics
