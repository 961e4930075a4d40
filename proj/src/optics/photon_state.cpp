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

#include "auxq/optics/photon_state.hpp"

#include <numeric>
#include <stdexcept>

namespace auxq::optics {

namespace {

WireSystem system_for(const std::vector<ChannelBasis>& bases) {
  std::vector<int> dims;
  for (const auto& b : bases) {
    if (b.size() < 2) throw std::invalid_argument("PhotonState: a photon needs at least 2 channels");
    dims.push_back(static_cast<int>(b.size()));
  }
  return WireSystem(std::move(dims));
}

}  // namespace

PhotonState::PhotonState(std::vector<std::string> labels, std::vector<ChannelBasis> bases,
                         CVector amplitudes)
    : labels_(std::move(labels)),
      bases_(std::move(bases)),
      tensor_(system_for(bases_), std::move(amplitudes)) {
  if (labels_.size() != bases_.size()) {
    throw std::invalid_argument("PhotonState: one channel basis per photon is required");
  }
}

PhotonState PhotonState::from_logical(std::vector<std::string> labels, const ChannelBasis& basis,
                                      const std::vector<Encoding>& encodings,
                                      const CVector& block) {
  if (encodings.size() != labels.size()) {
    throw std::invalid_argument("PhotonState::from_logical: one encoding per photon is required");
  }
  std::vector<int> logical_dims;
  for (const auto& e : encodings) logical_dims.push_back(static_cast<int>(e.size()));
  const WireSystem logical(logical_dims);
  if (static_cast<std::size_t>(block.size()) != logical.total_dim()) {
    throw std::invalid_argument("PhotonState::from_logical: block size does not match encodings");
  }
  std::vector<ChannelBasis> bases(labels.size(), basis);
  const WireSystem physical = system_for(bases);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(physical.total_dim()));
  std::vector<int> digits(labels.size());
  for (std::size_t i = 0; i < logical.total_dim(); ++i) {
    const auto values = logical.index_to_digits(i);
    for (std::size_t k = 0; k < values.size(); ++k) {
      digits[k] = static_cast<int>(basis.index_of(encodings[k][static_cast<std::size_t>(values[k])]));
    }
    amps(static_cast<Eigen::Index>(physical.digits_to_index(digits))) +=
        block(static_cast<Eigen::Index>(i));
  }
  return PhotonState(std::move(labels), std::move(bases), std::move(amps));
}

Complex PhotonState::amplitude(std::span<const std::size_t> channels) const {
  if (channels.size() != num_photons()) {
    throw std::invalid_argument("PhotonState::amplitude: one channel per photon is required");
  }
  std::vector<int> digits(channels.begin(), channels.end());
  return tensor_.amplitude(tensor_.system().digits_to_index(digits));
}

Complex PhotonState::amplitude(const std::vector<Channel>& channels) const {
  if (channels.size() != num_photons()) {
    throw std::invalid_argument("PhotonState::amplitude: one channel per photon is required");
  }
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < channels.size(); ++k) idx.push_back(bases_[k].index_of(channels[k]));
  return amplitude(std::span<const std::size_t>(idx));
}

PhotonState propagate(const PhotonState& state, const UnitaryMatrix& u, const ChannelBasis& basis,
                      const std::vector<std::size_t>& photons) {
  if (u.dim() != basis.size()) {
    throw std::invalid_argument("propagate: unitary does not match the channel basis");
  }
  CVector amps = state.amplitudes();
  const WireSystem& system = state.tensor().system();
  const auto dim = static_cast<int>(basis.size());
  for (std::size_t p : photons) {
    if (p >= state.num_photons()) throw std::out_of_range("propagate: photon index out of range");
    if (!(state.bases()[p] == basis)) {
      throw std::invalid_argument("propagate: photon " + state.labels()[p] +
                                  " does not use the interferometer channels");
    }
    apply_gate_inplace(system, amps, GateOp("U", {p}, {dim}, u, GateTag::Other));
  }
  return PhotonState(state.labels(), state.bases(), std::move(amps));
}

PhotonState propagate(const PhotonState& state, const InterferometerSpec& spec) {
  std::vector<std::size_t> all(state.num_photons());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return propagate(state, spec.compile(), spec.basis, all);
}

}  // namespace auxq::optics
