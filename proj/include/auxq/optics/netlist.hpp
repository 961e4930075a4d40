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

#include <string>

#include <json.hpp>

#include "auxq/optics/fredkin_chain.hpp"
#include "auxq/optics/interferometer.hpp"

namespace auxq::optics {

inline constexpr const char* kNetlistSchemaVersion = "1.0";

nlohmann::json element_to_json(const OpticalElement& e);
OpticalElement element_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const InterferometerSpec& spec);
/// Throws std::invalid_argument on a wrong kind or schema version.
InterferometerSpec spec_from_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const FredkinChain& chain);
FredkinChain chain_from_json(const nlohmann::json& j);

/// Built-in netlist by gate name ("pswap" or "fredkin3"); throws on anything else.
nlohmann::json builtin_netlist(const std::string& gate);

}  // namespace auxq::optics
