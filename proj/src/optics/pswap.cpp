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

#include "auxq/optics/pswap.hpp"

#include <numbers>
#include <stdexcept>

namespace auxq::optics {

namespace {

constexpr Polarization H = Polarization::H;
constexpr Polarization V = Polarization::V;

PbsPass pass(std::string a, std::optional<std::string> b, std::string t,
             std::optional<std::string> r) {
  return PbsPass{std::move(a), std::move(b), std::move(t), std::move(r)};
}

}  // namespace

std::vector<std::string> pswap_modes() {
  return {"u", "d", "t", "1'", "1", "2", "3", "4", "5", "6", "7", "8", "8'", "9", "9'", "10",
          "10'", "11", "12"};
}

std::vector<OpticalElement> pswap_elements() {
  const auto none = std::nullopt;
  return {
      Pbs{{pass("d", none, "1", "2"), pass("u", none, "1'", none)}},
      Pbs{{pass("t", none, "4", "3")}},
      Hwp{{"1"}, 45.0},
      Hwp{{"2"}, 45.0},
      Hwp{{"3"}, 67.5},
      Hwp{{"4"}, 22.5},
      Pbs{{pass("3", "2", "5", "6")}},
      Pbs{{pass("4", "1", "7", "8"), pass("1'", none, "8'", none)}},
      Hwp{{"5", "6"}, 67.5},
      Hwp{{"8'", "7", "8"}, 22.5},
      Pbs{{pass("8", "5", "9", "10"), pass("8'", none, "9'", "10'")}},
      Pbs{{pass("7", "6", "11", "12")}},
      Hwp{{"10'", "10"}, 45.0},
      Hwp{{"12"}, 45.0},
  };
}

InterferometerSpec build_pswap_interferometer() {
  return InterferometerSpec{"pswap", ChannelBasis::from_modes(pswap_modes()), pswap_elements()};
}

Encoding pswap_carrier_encoding() { return {{"d", H}, {"d", V}, {"u", H}}; }

Encoding pswap_target_encoding() { return {{"t", H}, {"t", V}}; }

std::vector<Role> pswap_roles() {
  Role carrier{"carrier",
               {DetectionArm{"9", {{"9", H}, {"9", V}, {"9'", H}}},
                DetectionArm{"10", {{"10", H}, {"10", V}, {"10'", H}}}}};
  Role target{"target", {DetectionArm{"11", {{"11", H}, {"11", V}}},
                         DetectionArm{"12", {{"12", H}, {"12", V}}}}};
  return {carrier, target};
}

AcceptedPattern pswap_pattern(PswapFamily f, bool with_correction) {
  const PhaseShift flip9{{"9"}, std::numbers::pi};
  const PhaseShift flip10{{"10"}, std::numbers::pi};
  switch (f) {
    case PswapFamily::A9_11:
      return {{0, 0}, {}};
    case PswapFamily::A10_12:
      return {{1, 1}, {}};
    case PswapFamily::A9_12:
      return {{0, 1}, with_correction ? std::vector<Correction>{{0, flip9}} : std::vector<Correction>{}};
    case PswapFamily::A10_11:
      return {{1, 0}, with_correction ? std::vector<Correction>{{0, flip10}} : std::vector<Correction>{}};
  }
  throw std::invalid_argument("pswap_pattern: unknown family");
}

std::vector<AcceptedPattern> pswap_patterns(bool feedforward) {
  std::vector<AcceptedPattern> out{pswap_pattern(PswapFamily::A9_11, true),
                                   pswap_pattern(PswapFamily::A10_12, true)};
  if (feedforward) {
    out.push_back(pswap_pattern(PswapFamily::A9_12, true));
    out.push_back(pswap_pattern(PswapFamily::A10_11, true));
  }
  return out;
}

PhotonState pswap_input(const CVector& logical) {
  return PhotonState::from_logical({"c", "t"}, ChannelBasis::from_modes(pswap_modes()),
                                   {pswap_carrier_encoding(), pswap_target_encoding()}, logical);
}

std::vector<PostSelectionOutcome> run_pswap(const InterferometerSpec& spec, const CVector& logical,
                                            bool feedforward) {
  const PhotonState out = propagate(pswap_input(logical), spec);
  return enumerate_outcomes(out, pswap_roles(), pswap_patterns(feedforward));
}

const std::array<std::array<int, 2>, 6>& table1_row_inputs() {
  static const std::array<std::array<int, 2>, 6> rows{
      {{2, 0}, {2, 1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  return rows;
}

const std::array<std::array<int, 2>, 6>& table1_column_outputs() {
  static const std::array<std::array<int, 2>, 6> cols{
      {{2, 0}, {2, 1}, {0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  return cols;
}

Table1 table1(const InterferometerSpec& spec) {
  Table1 t;
  std::vector<AcceptedPattern> families;
  for (auto f : kPswapFamilies) families.push_back(pswap_pattern(f, false));
  for (std::size_t row = 0; row < 6; ++row) {
    const auto [c_in, t_in] = table1_row_inputs()[row];
    CVector logical = CVector::Zero(6);
    logical(c_in * 2 + t_in) = 1.0;
    const PhotonState out = propagate(pswap_input(logical), spec);
    const auto outcomes = enumerate_outcomes(out, pswap_roles(), families);
    for (std::size_t f = 0; f < 4; ++f) {
      for (std::size_t col = 0; col < 6; ++col) {
        const auto [c_out, t_out] = table1_column_outputs()[col];
        const Complex amp = outcomes[f].amplitude_block(c_out * 2 + t_out);
        Table1Cell& cell = t.cells[row][f][col];
        cell.probability = std::norm(amp);
        cell.sign = cell.probability <= 1e-24 ? 0 : (amp.real() < 0.0 ? -1 : 1);
      }
    }
  }
  return t;
}

std::string table1_column_label(PswapFamily f, std::size_t column, bool carrier) {
  const auto pattern = pswap_pattern(f, false);
  const auto roles = pswap_roles();
  const auto [c_out, t_out] = table1_column_outputs().at(column);
  const Channel ch = carrier
                         ? roles[0].arms[pattern.arms[0]].readout[static_cast<std::size_t>(c_out)]
                         : roles[1].arms[pattern.arms[1]].readout[static_cast<std::size_t>(t_out)];
  return std::string(to_string(ch.pol)) + ch.mode;
}

std::string table1_row_label(std::size_t row) {
  const auto [c_in, t_in] = table1_row_inputs().at(row);
  const Channel c = pswap_carrier_encoding()[static_cast<std::size_t>(c_in)];
  return std::string(to_string(c.pol)) + c.mode + (t_in == 0 ? "H" : "V");
}

const char* family_name(PswapFamily f) {
  switch (f) {
    case PswapFamily::A9_11:
      return "(9,11)";
    case PswapFamily::A10_12:
      return "(10,12)";
    case PswapFamily::A9_12:
      return "(9,12)";
    case PswapFamily::A10_11:
      return "(10,11)";
  }
  return "?";
}

}  // namespace auxq::optics
