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

#include "auxq/core/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace auxq {

MixedRadixState::MixedRadixState(WireSystem system, CVector amplitudes)
    : system_(std::move(system)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != system_.total_dim()) {
    throw std::invalid_argument("MixedRadixState: amplitude count does not match total_dim");
  }
}

MixedRadixState MixedRadixState::basis(const WireSystem& system, std::span<const int> digits) {
  return basis_index(system, system.digits_to_index(digits));
}

MixedRadixState MixedRadixState::basis_index(const WireSystem& system, std::size_t index) {
  if (index >= system.total_dim()) throw std::out_of_range("basis_index: index out of range");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(system.total_dim()));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return MixedRadixState(system, std::move(amps));
}

void apply_gate_inplace(const WireSystem& system, CVector& amplitudes, const GateOp& gate) {
  if (!gate.compatible_with(system)) {
    throw std::invalid_argument("apply_gate: gate " + gate.name() +
                                " is not compatible with the wire system");
  }
  if (static_cast<std::size_t>(amplitudes.size()) != system.total_dim()) {
    throw std::invalid_argument("apply_gate: amplitude count does not match the wire system");
  }
  const auto& wires = gate.wires();
  const auto& local_dims = gate.local_dims();
  const std::size_t local_dim = gate.matrix().dim();

  // Offset of every local basis state relative to a base index.
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    std::size_t rem = l;
    std::size_t offset = 0;
    for (std::size_t k = wires.size(); k-- > 0;) {
      const auto d = static_cast<std::size_t>(local_dims[k]);
      offset += (rem % d) * system.stride(wires[k]);
      rem /= d;
    }
    offsets[l] = offset;
  }

  // Base indices: every gate wire at digit 0, other wires free.
  std::vector<std::size_t> bases{0};
  for (std::size_t w = 0; w < system.num_wires(); ++w) {
    if (std::find(wires.begin(), wires.end(), w) != wires.end()) continue;
    const std::size_t n = bases.size();
    for (int k = 1; k < system.dim(w); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        bases.push_back(bases[i] + static_cast<std::size_t>(k) * system.stride(w));
      }
    }
  }

  // Gate matrices here are mostly permutations, so only nonzeros are visited.
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };
  const CMatrix& u = gate.matrix().entries();
  std::vector<Entry> entries;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      if (u(r, c) != Complex(0.0, 0.0)) {
        entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), u(r, c)});
      }
    }
  }

  CVector local(static_cast<Eigen::Index>(local_dim));
  CVector out(static_cast<Eigen::Index>(local_dim));
  for (std::size_t base : bases) {
    for (std::size_t l = 0; l < local_dim; ++l) {
      local(static_cast<Eigen::Index>(l)) = amplitudes(static_cast<Eigen::Index>(base + offsets[l]));
    }
    out.setZero();
    for (const auto& e : entries) {
      out(static_cast<Eigen::Index>(e.row)) += e.value * local(static_cast<Eigen::Index>(e.col));
    }
    for (std::size_t l = 0; l < local_dim; ++l) {
      amplitudes(static_cast<Eigen::Index>(base + offsets[l])) = out(static_cast<Eigen::Index>(l));
    }
  }
}

MixedRadixState apply_gate(const MixedRadixState& state, const GateOp& gate) {
  CVector amps = state.amplitudes();
  apply_gate_inplace(state.system(), amps, gate);
  return MixedRadixState(state.system(), std::move(amps));
}

}  // namespace auxq
