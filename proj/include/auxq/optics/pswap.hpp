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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "auxq/optics/interferometer.hpp"
#include "auxq/optics/photon_state.hpp"
#include "auxq/optics/postselect.hpp"

namespace auxq::optics {

/// Carrier levels carried by the optical partial swap: 0 = H_d, 1 = V_d, 2 = H_u.
inline constexpr int kPswapCarrierDim = 3;

/// Spatial modes in netlist order.
std::vector<std::string> pswap_modes();

/// Six PBS and eight HWP elements between inputs u, d, t and outputs 9, 9', 10, 10', 11, 12.
std::vector<OpticalElement> pswap_elements();

InterferometerSpec build_pswap_interferometer();

Encoding pswap_carrier_encoding();
Encoding pswap_target_encoding();

/// Carrier arms "9" and "10" read {H, V, H'} as {0, 1, 2}; target arms "11" and "12" read {H, V}.
std::vector<Role> pswap_roles();

enum class PswapFamily { A9_11 = 0, A10_12 = 1, A9_12 = 2, A10_11 = 3 };
inline constexpr std::array<PswapFamily, 4> kPswapFamilies{
    PswapFamily::A9_11, PswapFamily::A10_12, PswapFamily::A9_12, PswapFamily::A10_11};

/// Arm indices into `pswap_roles()` for a family.
AcceptedPattern pswap_pattern(PswapFamily f, bool with_correction);

/// (9,11) and (10,12) always; (9,12) and (10,11) with a pi phase on 9 or 10 when `feedforward`.
std::vector<AcceptedPattern> pswap_patterns(bool feedforward);

/// Two-photon state for a 6-dim logical vector indexed carrier * 2 + target.
PhotonState pswap_input(const CVector& logical);

std::vector<PostSelectionOutcome> run_pswap(const InterferometerSpec& spec, const CVector& logical,
                                            bool feedforward);

/// Logical (carrier, target) pairs in table row and column order.
const std::array<std::array<int, 2>, 6>& table1_row_inputs();
const std::array<std::array<int, 2>, 6>& table1_column_outputs();

struct Table1Cell {
  double probability = 0.0;
  /// Sign of the real coincidence amplitude; 0 when the cell is empty.
  int sign = 0;
};

/// cells[row][family][column].
struct Table1 {
  std::array<std::array<std::array<Table1Cell, 6>, 4>, 6> cells{};
};

/// Coincidence probabilities for the six logical basis inputs, every family, no correction.
Table1 table1(const InterferometerSpec& spec);

/// Detector label such as "H9'" or "V12" for a family column.
std::string table1_column_label(PswapFamily f, std::size_t column, bool carrier);

std::string table1_row_label(std::size_t row);

const char* family_name(PswapFamily f);

}  // namespace auxq::optics
