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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "auxq/core/random.hpp"
#include "auxq/optics/fidelity.hpp"
#include "auxq/optics/fredkin_chain.hpp"
#include "auxq/optics/netlist.hpp"
#include "auxq/optics/pswap.hpp"
#include "auxq/optics/resources.hpp"
#include "auxq/synthesis/fredkin.hpp"
#include "auxq/synthesis/gates.hpp"

namespace auxq::optics {
namespace {

constexpr double kExact = 1e-12;
constexpr auto H = Polarization::H;
constexpr auto V = Polarization::V;

struct Term {
  const char* mode;
  Polarization pol;
  double coef;
};
using Photon = std::vector<Term>;

CVector unit(std::size_t dim, std::size_t i) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

TEST(Hwp, ReferenceAngles) {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix m45(2, 2), m22(2, 2), m67(2, 2), m0(2, 2);
  m45 << 0, 1, 1, 0;
  m22 << r, r, r, -r;
  m67 << -r, r, r, r;
  m0 << 1, 0, 0, -1;
  EXPECT_LT((hwp_matrix(45) - m45).cwiseAbs().maxCoeff(), kExact);
  EXPECT_LT((hwp_matrix(22.5) - m22).cwiseAbs().maxCoeff(), kExact);
  EXPECT_LT((hwp_matrix(67.5) - m67).cwiseAbs().maxCoeff(), kExact);
  EXPECT_LT((hwp_matrix(0) - m0).cwiseAbs().maxCoeff(), kExact);
}

TEST(Hwp, InvolutionForRandomAngles) {
  Rng rng(kDefaultSeed);
  std::uniform_real_distribution<double> angle(-180.0, 180.0);
  for (int k = 0; k < 50; ++k) {
    const CMatrix m = hwp_matrix(angle(rng));
    EXPECT_LT((m * m - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), kExact);
    EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), kExact);
    EXPECT_LT(m.imag().cwiseAbs().maxCoeff(), kExact);
  }
}

TEST(Pbs, FirstCubeRouting) {
  const auto basis = ChannelBasis::from_modes({"u", "d", "1'", "1", "2"});
  const Pbs pbs{{PbsPass{"u", std::nullopt, "1'", std::nullopt}, PbsPass{"d", std::nullopt, "1", "2"}}};
  const CMatrix m = element_matrix(pbs, basis);
  auto goes = [&](const char* a, Polarization pa, const char* b, Polarization pb) {
    return m(static_cast<Eigen::Index>(basis.index_of(b, pb)), static_cast<Eigen::Index>(basis.index_of(a, pa)));
  };
  EXPECT_EQ(goes("u", H, "1'", H), Complex(1.0));
  EXPECT_EQ(goes("d", H, "1", H), Complex(1.0));
  EXPECT_EQ(goes("d", V, "2", V), Complex(1.0));
  EXPECT_TRUE(is_unitary(m));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex x = m.data()[i];
    EXPECT_TRUE(x == Complex(0.0) || x == Complex(1.0));
  }
}

TEST(Pbs, TwoInputCrossRouting) {
  const auto basis = ChannelBasis::from_modes({"a", "b", "t", "r"});
  const Pbs pbs{{PbsPass{"a", "b", "t", "r"}}};
  const CMatrix m = element_matrix(pbs, basis);
  auto at = [&](const char* to, Polarization p2, const char* from, Polarization p1) {
    return m(static_cast<Eigen::Index>(basis.index_of(to, p2)), static_cast<Eigen::Index>(basis.index_of(from, p1)));
  };
  EXPECT_EQ(at("t", H, "a", H), Complex(1.0));
  EXPECT_EQ(at("r", V, "a", V), Complex(1.0));
  EXPECT_EQ(at("r", H, "b", H), Complex(1.0));
  EXPECT_EQ(at("t", V, "b", V), Complex(1.0));
  // Mirror orientation undoes it.
  const CMatrix back = element_matrix(Pbs{{PbsPass{"t", "r", "a", "b"}}}, basis);
  EXPECT_TRUE(matrices_equal(back * m, CMatrix::Identity(m.rows(), m.cols())).equal);
}

TEST(Pbs, RejectsDuplicatePorts) {
  const auto basis = ChannelBasis::from_modes({"a", "b", "t", "r"});
  EXPECT_THROW(element_matrix(Pbs{{PbsPass{"a", "a", "t", "r"}}}, basis), std::invalid_argument);
  EXPECT_THROW(element_matrix(Pbs{{PbsPass{"a", "b", "t", "t"}}}, basis), std::invalid_argument);
  EXPECT_THROW(element_matrix(Pbs{{PbsPass{"a", std::nullopt, "t", std::nullopt},
                                   PbsPass{"b", std::nullopt, "t", std::nullopt}}},
                              basis),
               std::invalid_argument);
}

TEST(Elements, PhaseShift) {
  const auto basis = ChannelBasis::from_modes({"a", "b"});
  const CMatrix m = element_matrix(PhaseShift{{"a"}, std::numbers::pi}, basis);
  EXPECT_NEAR(std::abs(m(0, 0) + 1.0), 0.0, kExact);
  EXPECT_NEAR(std::abs(m(1, 1) + 1.0), 0.0, kExact);
  EXPECT_EQ(m(2, 2), Complex(1.0));
}

TEST(Pswap, ElementCountsAndUnitarity) {
  const auto spec = build_pswap_interferometer();
  EXPECT_EQ(spec.count("pbs"), 6u);
  EXPECT_EQ(spec.count("hwp"), 8u);
  EXPECT_TRUE(is_unitary(spec.compile().entries()));
}

// Output superposition of each photon for the six logical basis inputs,
// carrier first, in units of 1/(2 sqrt 2) overall.
TEST(Pswap, PropagationFixture) {
  const Photon c_u{{"9'", H, 1}, {"10'", H, 1}};
  const Photon c_hd{{"11", H, 1}, {"12", H, -1}};
  const Photon c_vd{{"11", V, 1}, {"12", V, -1}};
  const Photon t_h{{"11", H, 1}, {"12", H, 1}, {"9", H, 1}, {"10", H, -1}};
  const Photon t_v{{"9", V, 1}, {"10", V, -1}, {"12", V, 1}, {"11", V, 1}};
  // Logical index carrier * 2 + target, carrier 0 = H_d, 1 = V_d, 2 = H_u.
  const std::array<std::pair<Photon, Photon>, 6> expect{
      {{c_hd, t_h}, {c_hd, t_v}, {c_vd, t_h}, {c_vd, t_v}, {c_u, t_h}, {c_u, t_v}}};
  const auto spec = build_pswap_interferometer();
  const double norm = 1.0 / (2.0 * std::sqrt(2.0));
  for (std::size_t k = 0; k < 6; ++k) {
    const auto out = propagate(pswap_input(unit(6, k)), spec);
    EXPECT_NEAR(out.norm(), 1.0, kExact);
    double covered = 0.0;
    for (const auto& a : expect[k].first)
      for (const auto& b : expect[k].second) {
        const Complex amp = out.amplitude(std::vector<Channel>{{a.mode, a.pol}, {b.mode, b.pol}});
        EXPECT_NEAR(std::abs(amp - a.coef * b.coef * norm), 0.0, kTolerance)
            << "input " << k << " at " << a.mode << "," << b.mode;
        covered += std::norm(amp);
      }
    EXPECT_NEAR(covered, 1.0, kExact);
  }
}

TEST(Pswap, IdentitySpecLeavesStateUnchanged) {
  InterferometerSpec id{"id", ChannelBasis::from_modes(pswap_modes()), {}};
  Rng rng(3);
  const CVector logical = random_state_vector(6, rng);
  const auto in = pswap_input(logical);
  EXPECT_LT((propagate(in, id).amplitudes() - in.amplitudes()).norm(), kExact);
}

TEST(Pswap, NormPreservedForRandomInputs) {
  const auto spec = build_pswap_interferometer();
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 100; ++k) {
    EXPECT_NEAR(propagate(pswap_input(random_state_vector(6, rng)), spec).norm(), 1.0, kExact);
  }
}

TEST(Pswap, SwappedOutputOnFirstFamily) {
  // |H_d>|V> detected on (9,11) reads V on 9 and H on 11.
  const auto spec = build_pswap_interferometer();
  const auto outs = run_pswap(spec, unit(6, 1), false);
  ASSERT_EQ(outs.size(), 2u);
  const auto& o = outs[0];
  EXPECT_EQ(o.pattern, (std::vector<std::string>{"9", "11"}));
  EXPECT_NEAR(o.probability, 0.125, kExact);
  // Block indexed carrier (3) x target (2): carrier level 1 (V), target 0 (H).
  EXPECT_NEAR(std::abs(o.amplitude_block(2)), 1.0 / std::sqrt(8.0), kExact);
}

TEST(Pswap, FourFamiliesEachOneEighth) {
  const auto spec = build_pswap_interferometer();
  for (std::size_t k = 0; k < 6; ++k) {
    const auto outs = run_pswap(spec, unit(6, k), true);
    ASSERT_EQ(outs.size(), 4u);
    for (const auto& o : outs) EXPECT_NEAR(o.probability, 0.125, kExact);
    EXPECT_NEAR(total_probability(outs), 0.5, kExact);
  }
}

TEST(Pswap, FeedforwardFixesSigns) {
  const auto spec = build_pswap_interferometer();
  const auto roles = pswap_roles();
  const auto ideal = synthesis::make_partial_swap(kPswapCarrierDim).matrix().entries();
  Rng rng(17);
  const CVector in = random_state_vector(6, rng);
  const CVector want = ideal * in / std::sqrt(8.0);
  for (const auto& o : run_pswap(spec, in, true)) {
    const CVector fixed = apply_feedforward(o, roles, spec.basis);
    EXPECT_LT((fixed - want).norm(), kTolerance) << o.pattern[0] << "," << o.pattern[1];
    if (o.correction.empty()) {
      EXPECT_LT((fixed - o.amplitude_block).norm(), kExact);
    } else {
      EXPECT_GT((o.amplitude_block - want).norm(), 0.1);
    }
  }
}

TEST(Postselect, RejectsOverlappingArms) {
  auto roles = pswap_roles();
  roles[1].arms.push_back(roles[0].arms[0]);
  const auto spec = build_pswap_interferometer();
  const auto out = propagate(pswap_input(unit(6, 0)), spec);
  EXPECT_THROW(enumerate_outcomes(out, roles, all_patterns(roles)), std::invalid_argument);
}

TEST(Postselect, AcceptedProbabilityBounded) {
  const auto spec = build_pswap_interferometer();
  const auto roles = pswap_roles();
  Rng rng(23);
  const auto out = propagate(pswap_input(random_state_vector(6, rng)), spec);
  const auto outs = enumerate_outcomes(out, roles, all_patterns(roles));
  EXPECT_EQ(outs.size(), 4u);
  EXPECT_LE(total_probability(outs), 1.0 + kExact);
  for (const auto& o : outs) EXPECT_NEAR(o.probability, o.amplitude_block.squaredNorm(), kExact);
}

TEST(Table1, DesignatedCellsAndSigns) {
  const auto t = table1(build_pswap_interferometer());
  // Rows 1, 2 keep sign + in every family; rows 3..6 flip in (9,12) and (10,11).
  for (std::size_t row = 0; row < 6; ++row) {
    double row_sum = 0.0;
    for (std::size_t f = 0; f < 4; ++f)
      for (std::size_t col = 0; col < 6; ++col) {
        const auto& cell = t.cells[row][f][col];
        row_sum += cell.probability;
        if (col == row) {
          EXPECT_NEAR(cell.probability, 0.125, kExact);
          const int want = (row >= 2 && f >= 2) ? -1 : 1;
          EXPECT_EQ(cell.sign, want) << row << " " << f;
        } else {
          EXPECT_NEAR(cell.probability, 0.0, kExact);
          EXPECT_EQ(cell.sign, 0);
        }
      }
    EXPECT_NEAR(row_sum, 0.5, kExact);
  }
  EXPECT_EQ(table1_column_label(PswapFamily::A9_11, 0, true), "H9'");
  EXPECT_EQ(table1_column_label(PswapFamily::A10_12, 5, false), "V12");
  EXPECT_EQ(table1_row_label(0), "HuH");
  EXPECT_EQ(table1_row_label(5), "VdV");
}

TEST(Fidelity, PswapProbabilitiesAndFidelity) {
  const auto spec = build_pswap_interferometer();
  const auto ideal = synthesis::make_partial_swap(kPswapCarrierDim).matrix();
  for (bool ff : {true, false}) {
    Rng rng(kDefaultSeed);
    const auto r = gate_fidelity(pswap_gate(spec, ff), ideal, 100, rng);
    EXPECT_EQ(r.trials, 100u);
    EXPECT_NEAR(r.mean_probability, ff ? 0.5 : 0.25, kExact);
    EXPECT_LE(r.std_probability, kExact);
    EXPECT_GE(r.min_fidelity, 1.0 - kExact);
  }
}

TEST(Fidelity, StateFidelityIgnoresPhaseAndScale) {
  CVector a(2), b(2);
  a << 1, 0;
  b << Complex(0, 3), 0;
  EXPECT_NEAR(state_fidelity(a, b), 1.0, kExact);
  b << 1, 1;
  EXPECT_NEAR(state_fidelity(a, b), 0.5, kExact);
}

TEST(FredkinChain, SixteenRecordsPerBasisInput) {
  const auto chain = build_fredkin_interferometer();
  const auto ref = synthesis::reference_fredkin().entries();
  for (std::size_t k = 0; k < 8; ++k) {
    const auto recs = run_fredkin_chain(chain, unit(8, k));
    ASSERT_EQ(recs.size(), 16u);
    double total = 0.0;
    std::size_t corrected = 0;
    for (const auto& r : recs) {
      EXPECT_NEAR(r.outcome.probability, 1.0 / 512.0, kExact);
      EXPECT_LT((r.corrected - ref * unit(8, k) / std::sqrt(512.0)).norm(), kTolerance);
      total += r.outcome.probability;
      if (!r.outcome.correction.empty()) ++corrected;
    }
    EXPECT_NEAR(total, 1.0 / 32.0, kExact);
    EXPECT_GT(corrected, 0u);
  }
}

TEST(FredkinChain, ControlOneSwapsTargets) {
  // c=1, t1=0, t2=1 -> c=1, t1=1, t2=0.
  const auto recs = run_fredkin_chain(build_fredkin_interferometer(), unit(8, 5));
  for (const auto& r : recs) {
    EXPECT_NEAR(std::abs(r.corrected(6)), 1.0 / std::sqrt(512.0), kExact);
    EXPECT_NEAR(r.corrected.norm(), std::abs(r.corrected(6)), kExact);
  }
}

TEST(FredkinChain, CorrectionsOnlyFlipSigns) {
  // Raw blocks already carry the right magnitudes; feedforward only moves signs.
  const auto recs = run_fredkin_chain(build_fredkin_interferometer(), unit(8, 7));
  for (const auto& r : recs) {
    EXPECT_LT((r.outcome.amplitude_block.cwiseAbs() - r.corrected.cwiseAbs()).norm(), kExact);
  }
}

TEST(Fidelity, FredkinProbabilityAndFidelity) {
  Rng rng(kDefaultSeed);
  const auto r = gate_fidelity(fredkin_gate(build_fredkin_interferometer()), synthesis::reference_fredkin(),
                               100, rng);
  EXPECT_NEAR(r.mean_probability, 1.0 / 32.0, kExact);
  EXPECT_NEAR(r.min_probability, 1.0 / 32.0, kExact);
  EXPECT_NEAR(r.max_probability, 1.0 / 32.0, kExact);
  EXPECT_LE(r.std_probability, kExact);
  EXPECT_GE(r.min_fidelity, 1.0 - kExact);
}

TEST(Resources, ClosedForm) {
  const auto r1 = resource_calculator(1);
  EXPECT_EQ(r1.probability_denominator, 32u);
  EXPECT_DOUBLE_EQ(r1.success_probability, 1.0 / 32.0);
  EXPECT_EQ(r1.pbs_count, 2);
  EXPECT_EQ(r1.cnot_count, 0);
  EXPECT_EQ(r1.pswap_count, 3);
  EXPECT_EQ(resource_calculator(2).probability_denominator, 512u);
  EXPECT_EQ(resource_calculator(2).pbs_count, 4);
  EXPECT_EQ(resource_calculator(3).probability_denominator, 8192u);
  for (int n = 1; n <= 10; ++n) {
    const auto r = resource_calculator(n);
    EXPECT_EQ(r.probability_denominator, std::uint64_t{1} << (4 * n + 1));
    EXPECT_EQ(r.success_probability, std::ldexp(1.0, -(4 * n + 1)));
    EXPECT_EQ(r.cnot_count, 2 * (n - 1));
  }
  EXPECT_THROW(resource_calculator(0), std::invalid_argument);
  EXPECT_THROW(resource_calculator(kMaxResourceN + 1), std::invalid_argument);
}

TEST(Netlist, PswapRoundTrip) {
  const auto spec = build_pswap_interferometer();
  const auto j = spec_to_json(spec);
  EXPECT_EQ(j.at("schema_version"), kNetlistSchemaVersion);
  const auto back = spec_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.basis, spec.basis);
  EXPECT_EQ(back.elements.size(), spec.elements.size());
  EXPECT_LE((back.compile().entries() - spec.compile().entries()).cwiseAbs().maxCoeff(), kExact);
  std::size_t pbs = 0, hwp = 0;
  for (const auto& e : j.at("elements")) {
    pbs += e.at("kind") == "pbs";
    hwp += e.at("kind") == "hwp";
  }
  EXPECT_EQ(pbs, 6u);
  EXPECT_EQ(hwp, 8u);
}

TEST(Netlist, ChainRoundTrip) {
  const auto chain = build_fredkin_interferometer();
  const auto back = chain_from_json(nlohmann::json::parse(chain_to_json(chain).dump()));
  ASSERT_EQ(back.stages.size(), chain.stages.size());
  for (std::size_t s = 0; s < chain.stages.size(); ++s) {
    EXPECT_LE((back.stages[s].device.compile().entries() - chain.stages[s].device.compile().entries())
                  .cwiseAbs()
                  .maxCoeff(),
              kExact);
    EXPECT_EQ(back.stages[s].accepted.size(), chain.stages[s].accepted.size());
  }
  Rng rng(9);
  const CVector in = random_state_vector(8, rng);
  const auto a = run_fredkin_chain(chain, in);
  const auto b = run_fredkin_chain(back, in);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LT((a[k].corrected - b[k].corrected).norm(), kExact);
}

TEST(Netlist, BuiltinsAndErrors) {
  EXPECT_EQ(builtin_netlist("pswap").at("kind"), "interferometer");
  EXPECT_EQ(builtin_netlist("fredkin3").at("kind"), "chain");
  EXPECT_THROW(builtin_netlist("toffoli"), std::invalid_argument);
  nlohmann::json bad = spec_to_json(build_pswap_interferometer());
  bad["schema_version"] = "9.9";
  EXPECT_THROW(spec_from_json(bad), std::invalid_argument);
  EXPECT_THROW(element_from_json({{"kind", "mirror"}}), std::invalid_argument);
}

}  // namespace
}  // namespace auxq::optics
