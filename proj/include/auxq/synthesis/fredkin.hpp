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

#include "auxq/core/circuit.hpp"
#include "auxq/core/unitary.hpp"

namespace auxq::synthesis {

/// Carrier level pairs used by the parking ladder for n controls:
/// (0,2), (1,3), (0,4), (1,5), ... ending at level n+1.
std::vector<std::pair<int, int>> parking_exchanges(int n);

/// Qutrit-assisted Fredkin on dims (3, 2, 2): X_A, three partial swaps, X_A.
Circuit build_fredkin3();

/**
 * n-controlled Fredkin on dims (n+2, 2 x (n-1), 2, 2).
 *
 * Wire 0 is the first control, widened to n+2 levels. The remaining controls
 * follow, then the two targets. A CNOT/level-exchange ladder parks the carrier
 * in an auxiliary level unless every control is |1>, the three partial swaps
 * run, and the mirrored ladder restores the controls.
 */
Circuit build_n_controlled_fredkin(int n);

/// 8x8 controlled swap on (c, t1, t2).
UnitaryMatrix reference_fredkin();

/// Swap of the last two qubits iff all n leading qubits are |1>, on n+2 qubits.
UnitaryMatrix reference_n_controlled_fredkin(int n);

/// Image of every basis index under the n-controlled Fredkin permutation.
std::vector<std::size_t> n_controlled_fredkin_permutation(int n);

}  // namespace auxq::synthesis
