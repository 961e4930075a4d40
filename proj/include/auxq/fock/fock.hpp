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
#include <vector>

#include "auxq/core/types.hpp"
#include "auxq/optics/channel.hpp"

namespace auxq::fock {

/// Occupation number per channel of a basis, in basis order.
class FockConfiguration {
 public:
  explicit FockConfiguration(std::vector<int> occupations);

  /// One photon per listed channel index; repeats add up.
  static FockConfiguration from_indices(std::size_t num_channels,
                                        const std::vector<std::size_t>& indices);
  static FockConfiguration from_channels(const optics::ChannelBasis& basis,
                                         const std::vector<optics::Channel>& channels);

  const std::vector<int>& occupations() const { return occupations_; }
  int total_photons() const { return total_; }
  std::size_t num_channels() const { return occupations_.size(); }
  /// Channel index repeated by its occupation, ascending.
  std::vector<std::size_t> expanded() const;

  bool operator==(const FockConfiguration&) const = default;
  bool operator<(const FockConfiguration& o) const { return occupations_ < o.occupations_; }

 private:
  std::vector<int> occupations_;
  int total_ = 0;
};

/**
 * <out| U |in> for bosons: perm(U[out rows, in cols]) divided by
 * sqrt(prod n_in! * prod n_out!). Throws std::invalid_argument when photon
 * counts or channel counts disagree.
 */
Complex bosonic_amplitude(const CMatrix& u, const FockConfiguration& in,
                          const FockConfiguration& out);

/// Every configuration of `photons` bosons over `num_channels` channels.
std::vector<FockConfiguration> all_configurations(std::size_t num_channels, int photons);

}  // namespace auxq::fock
