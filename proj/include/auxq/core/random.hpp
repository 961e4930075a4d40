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
#include <cstdint>
#include <random>

#include "auxq/core/types.hpp"
#include "auxq/core/unitary.hpp"

namespace auxq {

using Rng = std::mt19937_64;

/// Seed used by the CLI and the acceptance suite when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20260117;

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
UnitaryMatrix random_unitary(std::size_t dim, Rng& rng);

/// Uniformly random normalized vector.
CVector random_state_vector(std::size_t dim, Rng& rng);

}  // namespace auxq
