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

#include "auxq/core/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auxq {

Circuit& Circuit::add(GateOp gate) {
  if (!gate.compatible_with(system_)) {
    throw std::invalid_argument("Circuit::add: gate " + gate.name() +
                                " does not match the wire dimensions");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

std::size_t Circuit::count(GateTag tag) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [tag](const GateOp& g) { return g.tag() == tag; }));
}

MixedRadixState run_circuit(const Circuit& circuit, const MixedRadixState& input) {
  if (!(input.system() == circuit.system())) {
    throw std::invalid_argument("run_circuit: state and circuit use different wire systems");
  }
  CVector amps = input.amplitudes();
  for (const auto& gate : circuit.gates()) apply_gate_inplace(circuit.system(), amps, gate);
  return MixedRadixState(circuit.system(), std::move(amps));
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
  const auto n = static_cast<Eigen::Index>(circuit.system().total_dim());
  CMatrix u = CMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    CVector column = u.col(col);
    for (const auto& gate : circuit.gates()) apply_gate_inplace(circuit.system(), column, gate);
    u.col(col) = column;
  }
  return UnitaryMatrix(std::move(u));
}

std::vector<std::size_t> kept_basis_indices(const WireSystem& system, const LevelSelection& kept) {
  if (kept.size() != system.num_wires()) {
    throw std::invalid_argument("project_to_subspace: one level list per wire is required");
  }
  for (std::size_t w = 0; w < kept.size(); ++w) {
    if (kept[w].empty()) throw std::invalid_argument("project_to_subspace: empty kept set");
    for (int level : kept[w]) {
      if (level < 0 || level >= system.dim(w)) {
        throw std::out_of_range("project_to_subspace: kept level out of range");
      }
    }
  }
  std::vector<std::size_t> indices;
  std::vector<std::size_t> cursor(kept.size(), 0);
  std::vector<int> digits(kept.size());
  while (true) {
    for (std::size_t w = 0; w < kept.size(); ++w) digits[w] = kept[w][cursor[w]];
    indices.push_back(system.digits_to_index(digits));
    std::size_t w = kept.size();
    while (w > 0) {
      --w;
      if (++cursor[w] < kept[w].size()) break;
      cursor[w] = 0;
      if (w == 0) return indices;
    }
  }
}

namespace {

template <typename ColumnFn>
SubspaceProjection project_columns(const std::vector<std::size_t>& kept, ColumnFn column_of,
                                   std::size_t total_dim) {
  SubspaceProjection result;
  result.kept_indices = kept;
  std::vector<bool> is_kept(total_dim, false);
  for (std::size_t idx : kept) is_kept[idx] = true;
  const auto k = static_cast<Eigen::Index>(kept.size());
  result.block = CMatrix::Zero(k, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const CVector column = column_of(kept[static_cast<std::size_t>(c)]);
    for (Eigen::Index r = 0; r < k; ++r) {
      result.block(r, c) = column(static_cast<Eigen::Index>(kept[static_cast<std::size_t>(r)]));
    }
    // Summed directly over the discarded rows; 1 - |kept|^2 would lose precision.
    double lost = 0.0;
    for (std::size_t r = 0; r < total_dim; ++r) {
      if (!is_kept[r]) lost += std::norm(column(static_cast<Eigen::Index>(r)));
    }
    result.leakage = std::max(result.leakage, std::sqrt(lost));
  }
  return result;
}

}  // namespace

SubspaceProjection project_to_subspace(const UnitaryMatrix& u, const WireSystem& system,
                                       const LevelSelection& kept_levels) {
  if (u.dim() != system.total_dim()) {
    throw std::invalid_argument("project_to_subspace: unitary does not match the wire system");
  }
  const auto kept = kept_basis_indices(system, kept_levels);
  return project_columns(
      kept, [&u](std::size_t idx) { return CVector(u.entries().col(static_cast<Eigen::Index>(idx))); },
      system.total_dim());
}

SubspaceProjection project_circuit_to_subspace(const Circuit& circuit,
                                               const LevelSelection& kept_levels) {
  const auto kept = kept_basis_indices(circuit.system(), kept_levels);
  return project_columns(
      kept,
      [&circuit](std::size_t idx) {
        return run_circuit(circuit, MixedRadixState::basis_index(circuit.system(), idx))
            .amplitudes();
      },
      circuit.system().total_dim());
}

}  // namespace auxq
