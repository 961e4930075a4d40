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

#include "auxq/cli/report.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace auxq::cli {

using nlohmann::json;

json ReportDocument::to_json() const {
  return {{"schema_version", schema_version},
          {"command", command},
          {"parameters", parameters},
          {"results", results},
          {"tolerances", tolerances}};
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<std::string>();
  if (d.schema_version != kSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema_version " + d.schema_version);
  }
  d.command = j.at("command").get<std::string>();
  d.parameters = j.at("parameters");
  d.results = j.at("results");
  d.tolerances = j.at("tolerances");
  return d;
}

std::optional<std::string> dyadic_fraction(double x) {
  constexpr double kTol = 1e-12;
  if (!std::isfinite(x)) return std::nullopt;
  if (std::abs(x) <= kTol) return "0";
  for (int k = 0; k <= 24; ++k) {
    const double scaled = std::ldexp(x, k);
    const double m = std::round(scaled);
    if (std::abs(x - std::ldexp(m, -k)) <= kTol) {
      const auto num = static_cast<std::int64_t>(m);
      if (k == 0) return std::to_string(num);
      return std::to_string(num) + "/" + std::to_string(std::int64_t{1} << k);
    }
  }
  return std::nullopt;
}

double clean(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

json probability_json(double p) {
  const auto f = dyadic_fraction(p);
  return {{"fraction", f ? json(*f) : json(nullptr)}, {"decimal", clean(p)}};
}

}  // namespace auxq::cli
