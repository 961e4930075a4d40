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

#include "auxq/core/gate.hpp"

namespace auxq::synthesis {

/**
 * Qudit-qubit partial swap on (carrier, target).
 *
 * Swaps the two wires on span{|0>,|1>} x span{|0>,|1>} and acts as the
 * identity whenever the carrier sits in an auxiliary level (>= 2), for any
 * carrier dimension. Tagged two-qubit.
 */
GateOp make_partial_swap(int carrier_dim, std::size_t carrier_wire = 0,
                         std::size_t target_wire = 1);

/// Single-qudit permutation |a> <-> |b>, identity on the other levels.
GateOp make_level_exchange(int carrier_dim, int a, int b, std::size_t wire = 0);

/// Qubit-controlled exchange of target levels a <-> b, firing on control |1>.
/// With a 2-level target and (a, b) = (0, 1) this is the usual CNOT.
GateOp make_qubit_level_cnot(int target_dim, int a, int b, std::size_t control_wire = 0,
                             std::size_t target_wire = 1);

}  // namespace auxq::synthesis
