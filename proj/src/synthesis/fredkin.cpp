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

#include "auxq/synthesis/fredkin.hpp"

#include <stdexcept>
#include <string>

#include "auxq/synthesis/gates.hpp"

namespace auxq::synthesis {

std::vector<std::pair<int, int>> parking_exchanges(int n) {
  if (n < 1) throw std::invalid_argument("parking_exchanges: n must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k) pairs.emplace_back(k % 2 == 1 ? 0 : 1, k + 1);
  return pairs;
}

Circuit build_fredkin3() { return build_n_controlled_fredkin(1); }

Circuit build_n_controlled_fredkin(int n) {
  if (n < 1) {
    throw std::invalid_argument("build_n_controlled_fredkin: n must be >= 1, got " +
                                std::to_string(n));
  }
  const int carrier_dim = n + 2;
  std::vector<int> dims{carrier_dim};
  for (int k = 2; k <= n; ++k) dims.push_back(2);
  dims.push_back(2);
  dims.push_back(2);
  Circuit circuit{WireSystem(dims)};

  const std::size_t carrier = 0;
  const auto t1 = static_cast<std::size_t>(n);
  const auto t2 = static_cast<std::size_t>(n + 1);
  const auto exchanges = parking_exchanges(n);

  // Ladder step k (k >= 2): control c_k flips the active pair, then the level
  // that is now inactive is parked in k+1.
  std::vector<GateOp> ladder;
  ladder.push_back(make_level_exchange(carrier_dim, exchanges[0].first, exchanges[0].second));
  for (int k = 2; k <= n; ++k) {
    const auto control = static_cast<std::size_t>(k - 1);
    ladder.push_back(make_qubit_level_cnot(carrier_dim, 0, 1, control, carrier));
    const auto& [level, aux] = exchanges[static_cast<std::size_t>(k - 1)];
    ladder.push_back(make_level_exchange(carrier_dim, level, aux));
  }

  for (const auto& g : ladder) circuit.add(g);
  circuit.add(make_partial_swap(carrier_dim, carrier, t2));
  circuit.add(make_partial_swap(carrier_dim, carrier, t1));
  circuit.add(make_partial_swap(carrier_dim, carrier, t2));
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) circuit.add(*it);
  return circuit;
}

std::vector<std::size_t> n_controlled_fredkin_permutation(int n) {
  if (n < 1) throw std::invalid_argument("reference_n_controlled_fredkin: n must be >= 1");
  const std::size_t dim = std::size_t{1} << (n + 2);
  const std::size_t controls_mask = (dim - 1) & ~std::size_t{3};
  std::vector<std::size_t> image(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const bool fire = (i & controls_mask) == controls_mask;
    const std::size_t t1 = (i >> 1) & 1;
    const std::size_t t2 = i & 1;
    image[i] = fire ? (i & ~std::size_t{3}) | (t2 << 1) | t1 : i;
  }
  return image;
}

UnitaryMatrix reference_n_controlled_fredkin(int n) {
  return UnitaryMatrix::permutation(n_controlled_fredkin_permutation(n));
}

UnitaryMatrix reference_fredkin() { return reference_n_controlled_fredkin(1); }

}  // namespace auxq::synthesis
