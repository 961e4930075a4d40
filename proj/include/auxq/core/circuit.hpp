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
#include <vector>

#include "auxq/core/gate.hpp"
#include "auxq/core/state.hpp"
#include "auxq/core/unitary.hpp"
#include "auxq/core/wire_system.hpp"

namespace auxq {

/// Ordered gate list over a fixed wire system. Gates apply front to back.
class Circuit {
 public:
  explicit Circuit(WireSystem system) : system_(std::move(system)) {}

  const WireSystem& system() const { return system_; }
  const std::vector<GateOp>& gates() const { return gates_; }

  /// Appends a gate; throws std::invalid_argument if it does not fit the system.
  Circuit& add(GateOp gate);

  std::size_t count(GateTag tag) const;

 private:
  WireSystem system_;
  std::vector<GateOp> gates_;
};

MixedRadixState run_circuit(const Circuit& circuit, const MixedRadixState& input);

/// Product of the embedded gate unitaries in application order.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

struct SubspaceProjection {
  CMatrix block;
  /// Largest norm, over kept columns, of the amplitude that lands outside the kept set.
  double leakage = 0.0;
  /// Basis indices (in the full system) of the kept states, in mixed-radix order.
  std::vector<std::size_t> kept_indices;

  bool block_is_unitary(double tol = kTolerance) const { return leakage <= tol; }
};

/// Kept levels per wire; each list must be non-empty and within range.
using LevelSelection = std::vector<std::vector<int>>;

std::vector<std::size_t> kept_basis_indices(const WireSystem& system, const LevelSelection& kept);

SubspaceProjection project_to_subspace(const UnitaryMatrix& u, const WireSystem& system,
                                       const LevelSelection& kept_levels);

/// Same result as projecting circuit_unitary(), but evolves only the kept
/// columns, so it stays cheap when the full unitary would not fit in memory.
SubspaceProjection project_circuit_to_subspace(const Circuit& circuit,
                                               const LevelSelection& kept_levels);

}  // namespace auxq
