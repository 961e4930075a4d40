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
#include <span>

#include "auxq/core/gate.hpp"
#include "auxq/core/types.hpp"
#include "auxq/core/wire_system.hpp"

namespace auxq {

/// Pure state over a mixed-radix wire system.
class MixedRadixState {
 public:
  MixedRadixState(WireSystem system, CVector amplitudes);

  /// Computational basis state |digits>.
  static MixedRadixState basis(const WireSystem& system, std::span<const int> digits);
  static MixedRadixState basis_index(const WireSystem& system, std::size_t index);

  const WireSystem& system() const { return system_; }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }
  double norm() const { return amplitudes_.norm(); }

 private:
  WireSystem system_;
  CVector amplitudes_;
};

/// Applies the gate's embedded unitary. Throws on dimension mismatch.
MixedRadixState apply_gate(const MixedRadixState& state, const GateOp& gate);

/// In-place variant used by the simulators; `amplitudes` is indexed by `system`.
void apply_gate_inplace(const WireSystem& system, CVector& amplitudes, const GateOp& gate);

}  // namespace auxq
