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

#include "auxq/optics/netlist.hpp"

#include <stdexcept>

#include "auxq/optics/pswap.hpp"

namespace auxq::optics {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

json opt(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

json channel_to_json(const Channel& c) { return {{"mode", c.mode}, {"pol", to_string(c.pol)}}; }

Channel channel_from_json(const json& j) {
  const auto pol = j.at("pol").get<std::string>();
  if (pol != "H" && pol != "V") throw std::invalid_argument("netlist: bad polarization " + pol);
  return {j.at("mode").get<std::string>(), pol == "H" ? Polarization::H : Polarization::V};
}

json channels_to_json(const std::vector<Channel>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(channel_to_json(c));
  return out;
}

std::vector<Channel> channels_from_json(const json& j) {
  std::vector<Channel> out;
  for (const auto& c : j) out.push_back(channel_from_json(c));
  return out;
}

json elements_to_json(const std::vector<OpticalElement>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(element_to_json(e));
  return out;
}

std::vector<OpticalElement> elements_from_json(const json& j) {
  std::vector<OpticalElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

void check_header(const json& j, const char* kind) {
  if (j.value("schema_version", "") != kNetlistSchemaVersion) {
    throw std::invalid_argument("netlist: unsupported schema_version");
  }
  if (j.value("kind", "") != kind) {
    throw std::invalid_argument(std::string("netlist: expected kind ") + kind);
  }
}

}  // namespace

json element_to_json(const OpticalElement& e) {
  return std::visit(
      Overloaded{[](const Pbs& pbs) {
                   json passes = json::array();
                   for (const auto& p : pbs.passes) {
                     passes.push_back({{"in_a", p.in_a},
                                       {"in_b", opt(p.in_b)},
                                       {"out_t", p.out_t},
                                       {"out_r", opt(p.out_r)}});
                   }
                   return json{{"kind", "pbs"}, {"passes", passes}};
                 },
                 [](const Hwp& h) {
                   return json{{"kind", "hwp"}, {"ports", h.ports}, {"angle_deg", h.angle_deg}};
                 },
                 [](const PhaseShift& p) {
                   return json{{"kind", "phase"}, {"ports", p.ports}, {"phi_rad", p.phi_rad}};
                 }},
      e);
}

OpticalElement element_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "pbs") {
    Pbs pbs;
    for (const auto& p : j.at("passes")) {
      pbs.passes.push_back(PbsPass{p.at("in_a").get<std::string>(), opt_from(p, "in_b"),
                                   p.at("out_t").get<std::string>(), opt_from(p, "out_r")});
    }
    return pbs;
  }
  if (kind == "hwp") {
    return Hwp{j.at("ports").get<std::vector<std::string>>(), j.at("angle_deg").get<double>()};
  }
  if (kind == "phase") {
    return PhaseShift{j.at("ports").get<std::vector<std::string>>(), j.at("phi_rad").get<double>()};
  }
  throw std::invalid_argument("netlist: unknown element kind " + kind);
}

json spec_to_json(const InterferometerSpec& spec) {
  return {{"schema_version", kNetlistSchemaVersion},
          {"kind", "interferometer"},
          {"name", spec.name},
          {"channels", channels_to_json(spec.basis.channels())},
          {"elements", elements_to_json(spec.elements)}};
}

InterferometerSpec spec_from_json(const json& j) {
  check_header(j, "interferometer");
  return InterferometerSpec{j.at("name").get<std::string>(),
                            ChannelBasis(channels_from_json(j.at("channels"))),
                            elements_from_json(j.at("elements"))};
}

json chain_to_json(const FredkinChain& chain) {
  json stages = json::array();
  for (const auto& s : chain.stages) {
    json encodings = json::array();
    for (const auto& e : s.encodings) encodings.push_back(channels_to_json(e));
    json roles = json::array();
    for (const auto& r : s.roles) {
      json arms = json::array();
      for (const auto& a : r.arms) {
        arms.push_back({{"name", a.name}, {"readout", channels_to_json(a.readout)}});
      }
      roles.push_back({{"name", r.name}, {"arms", arms}});
    }
    json accepted = json::array();
    for (const auto& p : s.accepted) {
      json corrections = json::array();
      for (const auto& c : p.corrections) {
        corrections.push_back({{"role", c.role}, {"element", element_to_json(c.element)}});
      }
      accepted.push_back({{"arms", p.arms}, {"corrections", corrections}});
    }
    stages.push_back({{"name", s.name},
                      {"device", s.device.name},
                      {"elements", elements_to_json(s.device.elements)},
                      {"encodings", encodings},
                      {"roles", roles},
                      {"accepted", accepted}});
  }
  return {{"schema_version", kNetlistSchemaVersion},
          {"kind", "chain"},
          {"name", "fredkin3"},
          {"photons", {"c", "t1", "t2"}},
          {"channels", channels_to_json(chain.basis.channels())},
          {"stages", stages}};
}

FredkinChain chain_from_json(const json& j) {
  check_header(j, "chain");
  FredkinChain chain;
  chain.basis = ChannelBasis(channels_from_json(j.at("channels")));
  for (const auto& s : j.at("stages")) {
    ChainStage stage;
    stage.name = s.at("name").get<std::string>();
    stage.device = InterferometerSpec{s.at("device").get<std::string>(), chain.basis,
                                      elements_from_json(s.at("elements"))};
    for (const auto& e : s.at("encodings")) stage.encodings.push_back(channels_from_json(e));
    for (const auto& r : s.at("roles")) {
      Role role{r.at("name").get<std::string>(), {}};
      for (const auto& a : r.at("arms")) {
        role.arms.push_back({a.at("name").get<std::string>(), channels_from_json(a.at("readout"))});
      }
      stage.roles.push_back(std::move(role));
    }
    for (const auto& p : s.at("accepted")) {
      AcceptedPattern pattern{p.at("arms").get<std::vector<std::size_t>>(), {}};
      for (const auto& c : p.at("corrections")) {
        pattern.corrections.push_back(
            {c.at("role").get<std::size_t>(), element_from_json(c.at("element"))});
      }
      stage.accepted.push_back(std::move(pattern));
    }
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

json builtin_netlist(const std::string& gate) {
  if (gate == "pswap") return spec_to_json(build_pswap_interferometer());
  if (gate == "fredkin3") return chain_to_json(build_fredkin_interferometer());
  throw std::invalid_argument("unknown gate '" + gate + "' (expected pswap or fredkin3)");
}

}  // namespace auxq::optics
