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

#include "auxq/core/gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace auxq {

const char* to_string(GateTag tag) {
  switch (tag) {
    case GateTag::SingleQudit:
      return "single-qudit";
    case GateTag::TwoQubit:
      return "two-qubit";
    case GateTag::Other:
      return "other";
  }
  return "other";
}

GateOp::GateOp(std::string name, std::vector<std::size_t> wires, std::vector<int> local_dims,
               UnitaryMatrix matrix, GateTag tag)
    : name_(std::move(name)),
      wires_(std::move(wires)),
      local_dims_(std::move(local_dims)),
      matrix_(std::move(matrix)),
      tag_(tag) {
  if (wires_.empty() || wires_.size() != local_dims_.size()) {
    throw std::invalid_argument("GateOp " + name_ + ": wires and local_dims must be non-empty and aligned");
  }
  std::vector<std::size_t> sorted = wires_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("GateOp " + name_ + ": wires must be distinct");
  }
  std::size_t product = 1;
  for (int d : local_dims_) {
    if (d < 2) throw std::invalid_argument("GateOp " + name_ + ": local dimension < 2");
    product *= static_cast<std::size_t>(d);
  }
  if (product != matrix_.dim()) {
    throw std::invalid_argument("GateOp " + name_ + ": matrix dimension does not match local dims");
  }
}

bool GateOp::compatible_with(const WireSystem& system) const {
  for (std::size_t k = 0; k < wires_.size(); ++k) {
    if (wires_[k] >= system.num_wires()) return false;
    if (system.dim(wires_[k]) != local_dims_[k]) return false;
  }
  return true;
}

}  // namespace auxq
