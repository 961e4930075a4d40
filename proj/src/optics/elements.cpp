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

#include "auxq/optics/elements.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace auxq::optics {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

CMatrix pbs_matrix(const Pbs& pbs, const ChannelBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<std::optional<std::size_t>> image(n);
  std::vector<bool> written(n, false);
  auto link = [&](const std::string& from, Polarization pol, const std::string& to) {
    const std::size_t s = basis.index_of(from, pol);
    const std::size_t t = basis.index_of(to, pol);
    if (image[s] || written[t]) {
      throw std::invalid_argument("PBS: channel " + to_string(basis.at(written[t] ? t : s)) +
                                  " used twice");
    }
    image[s] = t;
    written[t] = true;
  };

  std::set<std::string> inputs;
  for (const auto& p : pbs.passes) {
    if (!inputs.insert(p.in_a).second || (p.in_b && !inputs.insert(*p.in_b).second)) {
      throw std::invalid_argument("PBS: duplicate input port");
    }
    if (p.out_r && *p.out_r == p.out_t) throw std::invalid_argument("PBS: duplicate output port");
    if (p.in_b && *p.in_b == p.in_a) throw std::invalid_argument("PBS: duplicate input port");
    link(p.in_a, Polarization::H, p.out_t);
    if (p.out_r) link(p.in_a, Polarization::V, *p.out_r);
    if (p.in_b) {
      if (p.out_r) link(*p.in_b, Polarization::H, *p.out_r);
      link(*p.in_b, Polarization::V, p.out_t);
    }
  }

  // Close the partial injection into a permutation.
  std::vector<std::size_t> free_targets;
  for (std::size_t s = 0; s < n; ++s) {
    if (image[s] && !written[s]) free_targets.push_back(s);
  }
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (image[s]) continue;
    image[s] = written[s] ? free_targets.at(next++) : s;
  }

  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < n; ++s) {
    m(static_cast<Eigen::Index>(*image[s]), static_cast<Eigen::Index>(s)) = 1.0;
  }
  return m;
}

void check_unique(const std::vector<std::string>& ports, const char* what) {
  std::set<std::string> seen(ports.begin(), ports.end());
  if (seen.size() != ports.size()) {
    throw std::invalid_argument(std::string(what) + ": duplicate port");
  }
}

}  // namespace

const char* kind_name(const OpticalElement& e) {
  return std::visit(Overloaded{[](const Pbs&) { return "pbs"; }, [](const Hwp&) { return "hwp"; },
                               [](const PhaseShift&) { return "phase"; }},
                    e);
}

CMatrix hwp_matrix(double angle_deg) {
  const double t = 2.0 * angle_deg * std::numbers::pi / 180.0;
  CMatrix m(2, 2);
  m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
  return m;
}

CMatrix element_matrix(const OpticalElement& e, const ChannelBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  return std::visit(
      Overloaded{
          [&](const Pbs& pbs) { return pbs_matrix(pbs, basis); },
          [&](const Hwp& hwp) {
            check_unique(hwp.ports, "HWP");
            CMatrix m = CMatrix::Identity(n, n);
            const CMatrix j = hwp_matrix(hwp.angle_deg);
            for (const auto& port : hwp.ports) {
              const auto h = static_cast<Eigen::Index>(basis.index_of(port, Polarization::H));
              const auto v = static_cast<Eigen::Index>(basis.index_of(port, Polarization::V));
              m(h, h) = j(0, 0);
              m(h, v) = j(0, 1);
              m(v, h) = j(1, 0);
              m(v, v) = j(1, 1);
            }
            return m;
          },
          [&](const PhaseShift& ps) {
            check_unique(ps.ports, "phase shifter");
            CMatrix m = CMatrix::Identity(n, n);
            const Complex phase = std::polar(1.0, ps.phi_rad);
            for (const auto& port : ps.ports) {
              for (auto pol : {Polarization::H, Polarization::V}) {
                const auto i = static_cast<Eigen::Index>(basis.index_of(port, pol));
                m(i, i) = phase;
              }
            }
            return m;
          }},
      e);
}

}  // namespace auxq::optics
