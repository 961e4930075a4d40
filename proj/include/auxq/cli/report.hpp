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

#include <optional>
#include <string>

#include <json.hpp>

namespace auxq::cli {

inline constexpr const char* kSchemaVersion = "1.0";

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);
  bool operator==(const ReportDocument&) const = default;
};

/// "m/2^k" in lowest terms when `x` is within 1e-12 of such a value with k <= 24;
/// "0" for |x| <= 1e-12.
std::optional<std::string> dyadic_fraction(double x);

/// Value rounded to a 1e-12 grid so reports do not carry rounding noise.
double clean(double x);

/// {"fraction": "1/8" or null, "decimal": 0.125}
nlohmann::json probability_json(double p);

}  // namespace auxq::cli
