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

#include "auxq/optics/fredkin_chain.hpp"
#include "auxq/optics/interferometer.hpp"

namespace auxq::fock {

struct CertificationReport {
  std::string spec;
  int photons = 0;
  std::size_t inputs = 0;
  std::size_t patterns_checked = 0;
  double max_deviation = 0.0;
  bool passed = false;
};

/**
 * For every input (one channel per photon, all distinct) and every output
 * set of distinct channels, compares the permanent amplitude with the
 * labelled-photon amplitude summed over photon-to-channel assignments.
 */
CertificationReport certify_coincidence_equivalence(
    const optics::InterferometerSpec& spec, const std::vector<std::vector<optics::Channel>>& inputs);

/// The six logical basis inputs of the partial swap.
CertificationReport certify_pswap(const optics::InterferometerSpec& spec);

/**
 * Reruns the heralded chain with bosonic amplitudes only: each stage maps
 * Fock amplitudes on the encoded inputs to the accepted readout
 * configurations, and the corrected blocks are compared record by record
 * with the labelled-photon run, for the eight logical basis inputs.
 */
CertificationReport certify_fredkin_chain(const optics::FredkinChain& chain);

}  // namespace auxq::fock
