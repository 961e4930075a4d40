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

#include "auxq/core/types.hpp"

namespace auxq::fock {

inline constexpr int kMaxPermanentDim = 8;

/// Permanent by direct expansion over permutations. The 0x0 permanent is 1.
/// Throws std::invalid_argument for non-square input or size above kMaxPermanentDim.
Complex permanent(const CMatrix& m);

}  // namespace auxq::fock
