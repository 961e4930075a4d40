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
#include <optional>
#include <string>
#include <vector>

namespace auxq::optics {

enum class Polarization { H, V };

const char* to_string(Polarization p);

struct Channel {
  std::string mode;
  Polarization pol = Polarization::H;

  bool operator==(const Channel&) const = default;
};

std::string to_string(const Channel& c);

/// Ordered, duplicate-free list of channels.
class ChannelBasis {
 public:
  ChannelBasis() = default;
  explicit ChannelBasis(std::vector<Channel> channels);

  /// (m, H), (m, V) for every mode, in the given order.
  static ChannelBasis from_modes(const std::vector<std::string>& modes);

  const std::vector<Channel>& channels() const { return channels_; }
  std::size_t size() const { return channels_.size(); }
  const Channel& at(std::size_t i) const { return channels_.at(i); }

  std::optional<std::size_t> find(const Channel& c) const;
  /// Throws std::invalid_argument for an unknown channel.
  std::size_t index_of(const Channel& c) const;
  std::size_t index_of(const std::string& mode, Polarization pol) const {
    return index_of(Channel{mode, pol});
  }
  bool has_mode(const std::string& mode) const;
  std::vector<std::string> modes() const;

  bool operator==(const ChannelBasis&) const = default;

 private:
  std::vector<Channel> channels_;
};

}  // namespace auxq::optics
