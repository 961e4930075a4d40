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

#include "auxq/synthesis/verify.hpp"

#include <stdexcept>

#include "auxq/synthesis/fredkin.hpp"

namespace auxq::synthesis {

LevelSelection qubit_levels(const WireSystem& system) {
  return LevelSelection(system.num_wires(), std::vector<int>{0, 1});
}

SynthesisReport verify_synthesis(int n) {
  if (n < 1) throw std::invalid_argument("verify_synthesis: n must be >= 1");
  const Circuit circuit = build_n_controlled_fredkin(n);
  const SubspaceProjection proj = project_circuit_to_subspace(circuit, qubit_levels(circuit.system()));
  const UnitaryMatrix oracle = reference_n_controlled_fredkin(n);
  const MatrixComparison cmp = matrices_equal(proj.block, oracle.entries());

  SynthesisReport report;
  report.n = n;
  report.max_deviation = cmp.max_deviation;
  report.leakage = proj.leakage;
  report.two_qubit_count = circuit.count(GateTag::TwoQubit);
  report.single_qudit_count = circuit.count(GateTag::SingleQudit);
  report.carrier_dim = circuit.system().dim(0);
  const auto un = static_cast<std::size_t>(n);
  report.verified = cmp.equal && proj.leakage <= kTolerance &&
                    report.two_qubit_count == 2 * un + 1 && report.single_qudit_count == 2 * un &&
                    report.carrier_dim == n + 2;
  return report;
}

}  // namespace auxq::synthesis
