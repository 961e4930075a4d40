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
#include <span>
#include <string>
#include <vector>

#include "auxq/core/state.hpp"
#include "auxq/core/unitary.hpp"
#include "auxq/optics/channel.hpp"
#include "auxq/optics/interferometer.hpp"

namespace auxq::optics {

/// Channel assigned to each logical value of one photon, e.g. {(d,H), (d,V), (u,H)}.
using Encoding = std::vector<Channel>;

/**
 * Joint amplitude tensor over labelled (distinguishable) photons. Photon k
 * is wire k of a mixed-radix system whose dimension is the size of that
 * photon's channel basis.
 */
class PhotonState {
 public:
  PhotonState(std::vector<std::string> labels, std::vector<ChannelBasis> bases, CVector amplitudes);

  /// Places logical amplitude `block[v_0, v_1, ...]` on channels (enc_0[v_0], enc_1[v_1], ...).
  static PhotonState from_logical(std::vector<std::string> labels, const ChannelBasis& basis,
                                  const std::vector<Encoding>& encodings, const CVector& block);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ChannelBasis>& bases() const { return bases_; }
  std::size_t num_photons() const { return labels_.size(); }
  const MixedRadixState& tensor() const { return tensor_; }
  const CVector& amplitudes() const { return tensor_.amplitudes(); }
  double norm() const { return tensor_.norm(); }

  /// Amplitude with photon k in channel index `channels[k]` of its basis.
  Complex amplitude(std::span<const std::size_t> channels) const;
  Complex amplitude(const std::vector<Channel>& channels) const;

 private:
  std::vector<std::string> labels_;
  std::vector<ChannelBasis> bases_;
  MixedRadixState tensor_;
};

/// Applies `u` to each listed photon; every listed photon must use `basis`.
PhotonState propagate(const PhotonState& state, const UnitaryMatrix& u, const ChannelBasis& basis,
                      const std::vector<std::size_t>& photons);

/// Compiles `spec` and applies it to every photon.
PhotonState propagate(const PhotonState& state, const InterferometerSpec& spec);

}  // namespace auxq::optics
