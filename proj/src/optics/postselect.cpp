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

#include "auxq/optics/postselect.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>


namespace auxq::optics {

namespace {

void check_roles(const std::vector<Role>& roles) {
  std::set<std::pair<std::string, int>> seen;
  for (const auto& role : roles) {
    if (role.arms.empty()) throw std::invalid_argument("role " + role.name + " has no arms");
    const std::size_t width = role.arms.front().readout.size();
    for (const auto& arm : role.arms) {
      if (arm.readout.size() != width || width < 1) {
        throw std::invalid_argument("role " + role.name + ": arms must share one logical dimension");
      }
      for (const auto& c : arm.readout) {
        if (!seen.insert({c.mode, static_cast<int>(c.pol)}).second) {
          throw std::invalid_argument("overlapping detection arms at channel " + to_string(c));
        }
      }
    }
  }
}

}  // namespace

std::vector<AcceptedPattern> all_patterns(const std::vector<Role>& roles) {
  std::vector<AcceptedPattern> out{AcceptedPattern{}};
  for (const auto& role : roles) {
    std::vector<AcceptedPattern> next;
    for (const auto& p : out) {
      for (std::size_t a = 0; a < role.arms.size(); ++a) {
        auto q = p;
        q.arms.push_back(a);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<PostSelectionOutcome> enumerate_outcomes(const PhotonState& state,
                                                     const std::vector<Role>& roles,
                                                     const std::vector<AcceptedPattern>& accepted) {
  check_roles(roles);
  const std::size_t n = roles.size();
  if (n != state.num_photons()) {
    throw std::invalid_argument("enumerate_outcomes: need exactly one role per photon");
  }
  std::vector<int> dims;
  for (const auto& role : roles) dims.push_back(static_cast<int>(role.arms.front().readout.size()));

  std::vector<PostSelectionOutcome> outcomes;
  for (const auto& pattern : accepted) {
    if (pattern.arms.size() != n) {
      throw std::invalid_argument("enumerate_outcomes: pattern needs one arm per role");
    }
    PostSelectionOutcome out;
    out.arms = pattern.arms;
    out.block_dims = dims;
    out.correction = pattern.corrections;
    for (std::size_t r = 0; r < n; ++r) out.pattern.push_back(roles[r].arms.at(pattern.arms[r]).name);

    std::size_t block_size = 1;
    for (int d : dims) block_size *= static_cast<std::size_t>(d);
    out.amplitude_block = CVector::Zero(static_cast<Eigen::Index>(block_size));

    std::vector<int> values(n, 0);
    std::vector<std::size_t> channels(n);
    for (std::size_t i = 0; i < block_size; ++i) {
      // Logical values, most significant role first.
      std::size_t rem = i;
      for (std::size_t r = n; r-- > 0;) {
        values[r] = static_cast<int>(rem % static_cast<std::size_t>(dims[r]));
        rem /= static_cast<std::size_t>(dims[r]);
      }
      std::vector<std::size_t> assign(n);  // assign[r] = photon in role r
      std::iota(assign.begin(), assign.end(), std::size_t{0});
      Complex amp = 0.0;
      do {
        bool valid = true;
        for (std::size_t r = 0; r < n && valid; ++r) {
          const std::size_t p = assign[r];
          const auto& ch = roles[r].arms[pattern.arms[r]].readout[static_cast<std::size_t>(values[r])];
          const auto idx = state.bases()[p].find(ch);
          if (!idx) valid = false;
          else channels[p] = *idx;
        }
        if (valid) amp += state.amplitude(std::span<const std::size_t>(channels));
      } while (std::next_permutation(assign.begin(), assign.end()));
      out.amplitude_block(static_cast<Eigen::Index>(i)) = amp;
    }
    out.probability = out.amplitude_block.squaredNorm();
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

CVector apply_feedforward(const PostSelectionOutcome& outcome, const std::vector<Role>& roles,
                          const ChannelBasis& basis) {
  CVector block = outcome.amplitude_block;
  const auto& dims = outcome.block_dims;
  for (const auto& c : outcome.correction) {
    if (c.role >= roles.size() || c.role >= dims.size()) {
      throw std::out_of_range("apply_feedforward: role out of range");
    }
    const auto& readout = roles[c.role].arms.at(outcome.arms.at(c.role)).readout;
    const CMatrix m = element_matrix(c.element, basis);
    const auto d = static_cast<Eigen::Index>(readout.size());
    std::vector<Eigen::Index> idx;
    for (const auto& ch : readout) idx.push_back(static_cast<Eigen::Index>(basis.index_of(ch)));
    CMatrix local(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index s = 0; s < d; ++s) local(r, s) = m(idx[r], idx[s]);
    }

    Eigen::Index stride = 1;
    for (std::size_t k = c.role + 1; k < dims.size(); ++k) stride *= dims[k];
    CVector fiber(d);
    for (Eigen::Index base = 0; base < block.size(); ++base) {
      if ((base / stride) % d != 0) continue;
      for (Eigen::Index v = 0; v < d; ++v) fiber(v) = block(base + v * stride);
      fiber = (local * fiber).eval();
      for (Eigen::Index v = 0; v < d; ++v) block(base + v * stride) = fiber(v);
    }
  }
  return block;
}

double total_probability(const std::vector<PostSelectionOutcome>& outcomes) {
  double p = 0.0;
  for (const auto& o : outcomes) p += o.probability;
  return p;
}

}  // namespace auxq::optics
