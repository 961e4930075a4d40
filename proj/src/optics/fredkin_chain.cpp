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

#include "auxq/optics/fredkin_chain.hpp"

#include <stdexcept>

#include "auxq/optics/pswap.hpp"

namespace auxq::optics {

namespace {

constexpr Polarization H = Polarization::H;
constexpr Polarization V = Polarization::V;

Encoding on_mode(const std::string& mode) { return {{mode, H}, {mode, V}}; }

Role hold(const std::string& name, const std::string& mode) {
  return Role{name, {DetectionArm{mode, on_mode(mode)}}};
}

std::string pattern_name(const PostSelectionOutcome& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.pattern.size(); ++i) s += (i ? "," : "") + o.pattern[i];
  return s + ")";
}

}  // namespace

std::vector<std::string> fredkin_modes() {
  auto modes = pswap_modes();
  for (const char* m : {"c", "t1", "t2", "c11", "c12"}) modes.emplace_back(m);
  return modes;
}

FredkinChain build_fredkin_interferometer() {
  FredkinChain chain;
  chain.basis = ChannelBasis::from_modes(fredkin_modes());
  const auto roles = pswap_roles();
  const Role& carrier = roles[0];
  const Role& target = roles[1];

  // c: 0 -> H_u (parked), 1 -> V_d.
  ChainStage s1;
  s1.name = "pswap(c,t2)";
  s1.device.name = "stage1";
  s1.device.basis = chain.basis;
  s1.device.elements.push_back(Pbs{{PbsPass{"c", std::nullopt, "u", "d"}}});
  for (auto& e : pswap_elements()) s1.device.elements.push_back(e);
  s1.encodings = {on_mode("c"), on_mode("t1"), pswap_target_encoding()};
  s1.roles = {carrier, hold("t1", "t1"), target};
  s1.accepted = {{{0, 0, 0}, {}}, {{1, 0, 1}, {}}};

  ChainStage s2;
  s2.name = "pswap(c,t1)";
  s2.device = InterferometerSpec{"stage2", chain.basis, pswap_elements()};
  s2.encodings = {pswap_carrier_encoding(), pswap_target_encoding(), on_mode("t2")};
  s2.roles = {carrier, target, hold("t2", "t2")};
  s2.accepted = {{{0, 0, 0}, {}}, {{1, 1, 0}, {}}};

  ChainStage s3;
  s3.name = "pswap(c,t2)";
  s3.device = InterferometerSpec{"stage3", chain.basis, pswap_elements()};
  s3.device.elements.push_back(
      Pbs{{PbsPass{"9'", "9", "c11", std::nullopt}, PbsPass{"10'", "10", "c12", std::nullopt}}});
  s3.encodings = {pswap_carrier_encoding(), on_mode("t1"), pswap_target_encoding()};
  Role c_final{"c", {DetectionArm{"11", on_mode("c11")}, DetectionArm{"12", on_mode("c12")}}};
  s3.roles = {c_final, hold("t1", "t1"), target};
  s3.accepted = {{{0, 0, 0}, {}},
                 {{1, 0, 1}, {}},
                 {{0, 0, 1}, {Correction{0, Hwp{{"c11"}, 0.0}}}},
                 {{1, 0, 0}, {Correction{0, Hwp{{"c12"}, 0.0}}}}};

  chain.stages = {std::move(s1), std::move(s2), std::move(s3)};
  return chain;
}

std::vector<ChainRecord> run_fredkin_chain(const FredkinChain& chain, const CVector& logical) {
  if (logical.size() != 8) throw std::invalid_argument("run_fredkin_chain: need an 8-dim input");
  struct Partial {
    CVector block;
    std::vector<std::string> stage_patterns;
    std::vector<PostSelectionOutcome> outcomes;
  };
  std::vector<Partial> live{{logical, {}, {}}};
  const std::vector<std::string> labels{"c", "t1", "t2"};
  for (const auto& stage : chain.stages) {
    const UnitaryMatrix u = stage.device.compile();
    std::vector<Partial> next;
    for (const auto& p : live) {
      const PhotonState in = PhotonState::from_logical(labels, chain.basis, stage.encodings, p.block);
      const PhotonState out = propagate(in, u, chain.basis, {0, 1, 2});
      for (auto& o : enumerate_outcomes(out, stage.roles, stage.accepted)) {
        Partial q = p;
        q.block = apply_feedforward(o, stage.roles, chain.basis);
        q.stage_patterns.push_back(pattern_name(o));
        q.outcomes.push_back(std::move(o));
        next.push_back(std::move(q));
      }
    }
    live = std::move(next);
  }

  std::vector<ChainRecord> records;
  for (auto& p : live) {
    ChainRecord r;
    r.stage_patterns = p.stage_patterns;
    const auto& last = p.outcomes.back();
    r.label = {last.pattern[0], p.outcomes[1].pattern[1], last.pattern[2]};
    r.outcome = last;
    // Earlier stages carry no correction, so the raw final block is the full amplitude.
    r.corrected = p.block;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace auxq::optics
