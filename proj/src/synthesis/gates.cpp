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

#include "auxq/synthesis/gates.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace auxq::synthesis {

GateOp make_partial_swap(int carrier_dim, std::size_t carrier_wire, std::size_t target_wire) {
  if (carrier_dim < 3) {
    throw std::invalid_argument("make_partial_swap: carrier dimension must be >= 3, got " +
                                std::to_string(carrier_dim));
  }
  // Local index = carrier * 2 + target.
  const auto dim = static_cast<std::size_t>(carrier_dim) * 2;
  std::vector<std::size_t> image(dim);
  for (std::size_t i = 0; i < dim; ++i) image[i] = i;
  image[0 * 2 + 1] = 1 * 2 + 0;  // |01> -> |10>
  image[1 * 2 + 0] = 0 * 2 + 1;  // |10> -> |01>
  return GateOp("p-swap", {carrier_wire, target_wire}, {carrier_dim, 2},
                UnitaryMatrix::permutation(image), GateTag::TwoQubit);
}

GateOp make_level_exchange(int carrier_dim, int a, int b, std::size_t wire) {
  if (carrier_dim < 2 || a == b || a < 0 || b < 0 || a >= carrier_dim || b >= carrier_dim) {
    throw std::invalid_argument("make_level_exchange: invalid levels " + std::to_string(a) +
                                ", " + std::to_string(b) + " for dimension " +
                                std::to_string(carrier_dim));
  }
  std::vector<std::size_t> image(static_cast<std::size_t>(carrier_dim));
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  image[static_cast<std::size_t>(a)] = static_cast<std::size_t>(b);
  image[static_cast<std::size_t>(b)] = static_cast<std::size_t>(a);
  return GateOp("X(" + std::to_string(a) + "<->" + std::to_string(b) + ")", {wire},
                {carrier_dim}, UnitaryMatrix::permutation(image), GateTag::SingleQudit);
}

GateOp make_qubit_level_cnot(int target_dim, int a, int b, std::size_t control_wire,
                             std::size_t target_wire) {
  if (target_dim < 2 || a == b || a < 0 || b < 0 || a >= target_dim || b >= target_dim) {
    throw std::invalid_argument("make_qubit_level_cnot: invalid target levels");
  }
  const auto d = static_cast<std::size_t>(target_dim);
  std::vector<std::size_t> image(2 * d);
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  image[d + static_cast<std::size_t>(a)] = d + static_cast<std::size_t>(b);
  image[d + static_cast<std::size_t>(b)] = d + static_cast<std::size_t>(a);
  return GateOp("CNOT(" + std::to_string(a) + "<->" + std::to_string(b) + ")",
                {control_wire, target_wire}, {2, target_dim}, UnitaryMatrix::permutation(image),
                GateTag::TwoQubit);
}

}  // namespace auxq::synthesis
