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

#include "auxq/fock/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "auxq/fock/permanent.hpp"

namespace auxq::fock {

FockConfiguration::FockConfiguration(std::vector<int> occupations)
    : occupations_(std::move(occupations)) {
  for (int n : occupations_) {
    if (n < 0) throw std::invalid_argument("FockConfiguration: negative occupation");
    total_ += n;
  }
}

FockConfiguration FockConfiguration::from_indices(std::size_t num_channels,
                                                  const std::vector<std::size_t>& indices) {
  std::vector<int> occ(num_channels, 0);
  for (std::size_t i : indices) {
    if (i >= num_channels) throw std::out_of_range("FockConfiguration: channel out of range");
    ++occ[i];
  }
  return FockConfiguration(std::move(occ));
}

FockConfiguration FockConfiguration::from_channels(const optics::ChannelBasis& basis,
                                                   const std::vector<optics::Channel>& channels) {
  std::vector<std::size_t> idx;
  for (const auto& c : channels) idx.push_back(basis.index_of(c));
  return from_indices(basis.size(), idx);
}

std::vector<std::size_t> FockConfiguration::expanded() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    for (int k = 0; k < occupations_[i]; ++k) out.push_back(i);
  }
  return out;
}

Complex bosonic_amplitude(const CMatrix& u, const FockConfiguration& in,
                          const FockConfiguration& out) {
  if (in.total_photons() != out.total_photons()) {
    throw std::invalid_argument("bosonic_amplitude: photon numbers differ");
  }
  if (static_cast<Eigen::Index>(in.num_channels()) != u.cols() ||
      static_cast<Eigen::Index>(out.num_channels()) != u.rows()) {
    throw std::invalid_argument("bosonic_amplitude: configuration does not match the unitary");
  }
  const auto cols = in.expanded();
  const auto rows = out.expanded();
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix sub(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      sub(r, c) = u(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)]),
                    static_cast<Eigen::Index>(cols[static_cast<std::size_t>(c)]));
    }
  }
  double norm = 1.0;
  for (const auto* cfg : {&in, &out}) {
    for (int k : cfg->occupations()) norm *= std::tgamma(static_cast<double>(k) + 1.0);
  }
  return permanent(sub) / std::sqrt(norm);
}

std::vector<FockConfiguration> all_configurations(std::size_t num_channels, int photons) {
  if (photons < 0) throw std::invalid_argument("all_configurations: negative photon number");
  std::vector<FockConfiguration> out;
  std::vector<int> occ(num_channels, 0);
  // Compositions of `photons` into num_channels parts, in lexicographic order.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == num_channels) {
      occ[pos] = left;
      out.emplace_back(occ);
      return;
    }
    for (int k = left; k >= 0; --k) {
      occ[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (num_channels == 0) {
    if (photons == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(rec, 0, photons);
  return out;
}

}  // namespace auxq::fock
