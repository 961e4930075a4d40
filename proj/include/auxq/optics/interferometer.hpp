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
#include <string>
#include <vector>

#include "auxq/core/unitary.hpp"
#include "auxq/optics/channel.hpp"
#include "auxq/optics/elements.hpp"

namespace auxq::optics {

/// Ordered optical elements over one channel set (inputs and outputs share it).
struct InterferometerSpec {
  std::string name;
  ChannelBasis basis;
  std::vector<OpticalElement> elements;

  /// Product of element matrices in order, first element applied first.
  UnitaryMatrix compile() const;

  std::size_t count(const char* kind) const;
};

}  // namespace auxq::optics
