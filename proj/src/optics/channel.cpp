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

#include "auxq/optics/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace auxq::optics {

const char* to_string(Polarization p) { return p == Polarization::H ? "H" : "V"; }

std::string to_string(const Channel& c) { return c.mode + ":" + to_string(c.pol); }

ChannelBasis::ChannelBasis(std::vector<Channel> channels) : channels_(std::move(channels)) {
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    for (std::size_t j = i + 1; j < channels_.size(); ++j) {
      if (channels_[i] == channels_[j]) {
        throw std::invalid_argument("ChannelBasis: duplicate channel " + to_string(channels_[i]));
      }
    }
  }
}

ChannelBasis ChannelBasis::from_modes(const std::vector<std::string>& modes) {
  std::vector<Channel> channels;
  channels.reserve(2 * modes.size());
  for (const auto& m : modes) {
    channels.push_back({m, Polarization::H});
    channels.push_back({m, Polarization::V});
  }
  return ChannelBasis(std::move(channels));
}

std::optional<std::size_t> ChannelBasis::find(const Channel& c) const {
  auto it = std::find(channels_.begin(), channels_.end(), c);
  if (it == channels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - channels_.begin());
}

std::size_t ChannelBasis::index_of(const Channel& c) const {
  auto idx = find(c);
  if (!idx) throw std::invalid_argument("ChannelBasis: unknown channel " + to_string(c));
  return *idx;
}

bool ChannelBasis::has_mode(const std::string& mode) const {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const Channel& c) { return c.mode == mode; });
}

std::vector<std::string> ChannelBasis::modes() const {
  std::vector<std::string> out;
  for (const auto& c : channels_) {
    if (std::find(out.begin(), out.end(), c.mode) == out.end()) out.push_back(c.mode);
  }
  return out;
}

}  // namespace auxq::optics
