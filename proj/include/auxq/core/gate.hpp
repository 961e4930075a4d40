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

#include "auxq/core/unitary.hpp"
#include "auxq/core/wire_system.hpp"

namespace auxq {

/// Counting class of a gate. Assigned by the constructor that built the gate.
enum class GateTag { SingleQudit, TwoQubit, Other };

const char* to_string(GateTag tag);

/**
 * A unitary bound to an ordered list of wires.
 *
 * The local matrix is indexed in the mixed radix of `local_dims`, with the
 * first listed wire most significant. Wires need not be ascending.
 */
class GateOp {
 public:
  GateOp(std::string name, std::vector<std::size_t> wires, std::vector<int> local_dims,
         UnitaryMatrix matrix, GateTag tag);

  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& wires() const { return wires_; }
  const std::vector<int>& local_dims() const { return local_dims_; }
  const UnitaryMatrix& matrix() const { return matrix_; }
  GateTag tag() const { return tag_; }

  /// True when every wire exists in `system` with the matching dimension.
  bool compatible_with(const WireSystem& system) const;

 private:
  std::string name_;
  std::vector<std::size_t> wires_;
  std::vector<int> local_dims_;
  UnitaryMatrix matrix_;
  GateTag tag_;
};

}  // namespace auxq
