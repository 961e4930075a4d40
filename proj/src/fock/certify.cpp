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

#include "auxq/fock/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "auxq/fock/fock.hpp"
#include "auxq/optics/photon_state.hpp"
#include "auxq/optics/postselect.hpp"
#include "auxq/optics/pswap.hpp"

namespace auxq::fock {

using namespace auxq::optics;

CertificationReport certify_coincidence_equivalence(
    const InterferometerSpec& spec, const std::vector<std::vector<Channel>>& inputs) {
  CertificationReport report;
  report.spec = spec.name;
  report.inputs = inputs.size();
  const UnitaryMatrix u = spec.compile();
  const std::size_t nc = spec.basis.size();
  for (const auto& in : inputs) {
    const std::size_t k = in.size();
    report.photons = static_cast<int>(k);
    std::vector<std::string> labels;
    std::vector<Encoding> enc;
    for (std::size_t p = 0; p < k; ++p) {
      labels.push_back("p" + std::to_string(p));
      enc.push_back({in[p], in[p]});
    }
    // A one-hot logical block on value 0 of every photon.
    CVector block = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << k));
    block(0) = 1.0;
    const PhotonState out = propagate(PhotonState::from_logical(labels, spec.basis, enc, block), spec);
    const FockConfiguration in_cfg = FockConfiguration::from_channels(spec.basis, in);
    if (*std::max_element(in_cfg.occupations().begin(), in_cfg.occupations().end()) > 1) {
      throw std::invalid_argument("certify: input photons must occupy distinct channels");
    }

    // Every k-subset of channels, ascending.
    std::vector<bool> pick(nc, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<std::size_t> chosen(k), assign(k);
    do {
      std::size_t j = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (pick[c]) chosen[j++] = c;
      }
      Complex labelled = 0.0;
      std::iota(assign.begin(), assign.end(), std::size_t{0});
      do {
        std::vector<std::size_t> idx(k);
        for (std::size_t p = 0; p < k; ++p) idx[p] = chosen[assign[p]];
        labelled += out.amplitude(std::span<const std::size_t>(idx));
      } while (std::next_permutation(assign.begin(), assign.end()));
      const Complex bosonic =
          bosonic_amplitude(u.entries(), in_cfg, FockConfiguration::from_indices(nc, chosen));
      report.max_deviation = std::max(report.max_deviation, std::abs(bosonic - labelled));
      ++report.patterns_checked;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  report.passed = report.max_deviation <= kTolerance;
  return report;
}

CertificationReport certify_pswap(const InterferometerSpec& spec) {
  std::vector<std::vector<Channel>> inputs;
  for (const auto& c : pswap_carrier_encoding()) {
    for (const auto& t : pswap_target_encoding()) inputs.push_back({c, t});
  }
  return certify_coincidence_equivalence(spec, inputs);
}

namespace {

struct FockBranch {
  CVector block;
};

std::vector<int> digits_of(std::size_t i, const std::vector<int>& dims) {
  std::vector<int> v(dims.size());
  for (std::size_t r = dims.size(); r-- > 0;) {
    v[r] = static_cast<int>(i % static_cast<std::size_t>(dims[r]));
    i /= static_cast<std::size_t>(dims[r]);
  }
  return v;
}

}  // namespace

CertificationReport certify_fredkin_chain(const FredkinChain& chain) {
  CertificationReport report;
  report.spec = "fredkin3";
  report.photons = 3;
  report.inputs = 8;
  std::vector<UnitaryMatrix> compiled;
  for (const auto& s : chain.stages) compiled.push_back(s.device.compile());
  const std::size_t nc = chain.basis.size();

  for (int b = 0; b < 8; ++b) {
    CVector logical = CVector::Zero(8);
    logical(b) = 1.0;
    std::vector<FockBranch> live{{logical}};
    for (std::size_t si = 0; si < chain.stages.size(); ++si) {
      const auto& stage = chain.stages[si];
      const CMatrix& u = compiled[si].entries();
      std::vector<int> in_dims;
      for (const auto& e : stage.encodings) in_dims.push_back(static_cast<int>(e.size()));
      std::vector<int> out_dims;
      for (const auto& r : stage.roles) out_dims.push_back(static_cast<int>(r.arms.front().readout.size()));
      std::size_t out_size = 1;
      for (int d : out_dims) out_size *= static_cast<std::size_t>(d);

      std::vector<FockBranch> next;
      for (const auto& branch : live) {
        // Encoded Fock amplitudes; encodings sit on distinct modes, so no bunching here.
        std::vector<std::pair<FockConfiguration, Complex>> inputs;
        for (Eigen::Index i = 0; i < branch.block.size(); ++i) {
          if (branch.block(i) == Complex(0.0, 0.0)) continue;
          const auto v = digits_of(static_cast<std::size_t>(i), in_dims);
          std::vector<Channel> chans;
          for (std::size_t p = 0; p < v.size(); ++p) {
            chans.push_back(stage.encodings[p][static_cast<std::size_t>(v[p])]);
          }
          inputs.emplace_back(FockConfiguration::from_channels(chain.basis, chans), branch.block(i));
        }
        for (const auto& pattern : stage.accepted) {
          PostSelectionOutcome o;
          o.arms = pattern.arms;
          o.block_dims = out_dims;
          o.correction = pattern.corrections;
          o.amplitude_block = CVector::Zero(static_cast<Eigen::Index>(out_size));
          for (std::size_t j = 0; j < out_size; ++j) {
            const auto v = digits_of(j, out_dims);
            std::vector<std::size_t> idx;
            for (std::size_t r = 0; r < v.size(); ++r) {
              idx.push_back(chain.basis.index_of(
                  stage.roles[r].arms[pattern.arms[r]].readout[static_cast<std::size_t>(v[r])]));
            }
            const auto out_cfg = FockConfiguration::from_indices(nc, idx);
            Complex amp = 0.0;
            for (const auto& [cfg, a] : inputs) amp += a * bosonic_amplitude(u, cfg, out_cfg);
            o.amplitude_block(static_cast<Eigen::Index>(j)) = amp;
          }
          next.push_back({apply_feedforward(o, stage.roles, chain.basis)});
        }
      }
      live = std::move(next);
    }

    const auto records = run_fredkin_chain(chain, logical);
    if (records.size() != live.size()) {
      throw std::logic_error("certify_fredkin_chain: record counts differ between models");
    }
    for (std::size_t r = 0; r < records.size(); ++r) {
      report.max_deviation = std::max(
          report.max_deviation, (records[r].corrected - live[r].block).cwiseAbs().maxCoeff());
      ++report.patterns_checked;
    }
  }
  report.passed = report.max_deviation <= kTolerance;
  return report;
}

}  // namespace auxq::fock
