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

#include "auxq/core/circuit.hpp"
#include "auxq/core/random.hpp"
#include "auxq/core/state.hpp"
#include "auxq/core/unitary.hpp"
#include "auxq/core/wire_system.hpp"

namespace auxq {
namespace {

GateOp random_gate(const WireSystem& sys, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, sys.num_wires() - 1);
  const std::size_t a = pick(rng);
  std::size_t b = pick(rng);
  if (rng() % 2 == 0 || sys.num_wires() == 1) {
    const auto d = static_cast<std::size_t>(sys.dim(a));
    return GateOp("u1", {a}, {sys.dim(a)}, random_unitary(d, rng), GateTag::SingleQudit);
  }
  while (b == a) b = pick(rng);
  const auto d = static_cast<std::size_t>(sys.dim(a) * sys.dim(b));
  return GateOp("u2", {a, b}, {sys.dim(a), sys.dim(b)}, random_unitary(d, rng), GateTag::Other);
}

TEST(WireSystem, DigitsMostSignificantFirst) {
  WireSystem sys({3, 2, 2});
  EXPECT_EQ(sys.total_dim(), 12u);
  EXPECT_EQ(sys.index_to_digits(7), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(sys.index_to_digits(11), (std::vector<int>{2, 1, 1}));
  const std::vector<int> d{2, 0, 1};
  EXPECT_EQ(sys.digits_to_index(d), 9u);
}

TEST(WireSystem, DigitConversionIsBijective) {
  for (const auto& dims : {std::vector<int>{3, 2, 2}, std::vector<int>{5, 2, 3, 2}, std::vector<int>{2}}) {
    WireSystem sys(dims);
    for (std::size_t i = 0; i < sys.total_dim(); ++i) {
      const auto digits = sys.index_to_digits(i);
      for (std::size_t w = 0; w < digits.size(); ++w) {
        EXPECT_GE(digits[w], 0);
        EXPECT_LT(digits[w], dims[w]);
      }
      EXPECT_EQ(sys.digits_to_index(digits), i);
    }
  }
}

TEST(WireSystem, RejectsBadInput) {
  EXPECT_THROW(WireSystem({}), std::invalid_argument);
  EXPECT_THROW(WireSystem({3, 1}), std::invalid_argument);
  WireSystem sys({3, 2});
  const std::vector<int> bad{3, 0};
  EXPECT_THROW((void)sys.digits_to_index(bad), std::out_of_range);
  EXPECT_THROW((void)sys.index_to_digits(6), std::out_of_range);
}

TEST(Unitary, ConstructionChecks) {
  CMatrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(UnitaryMatrix{m}, std::invalid_argument);
  EXPECT_THROW(UnitaryMatrix::permutation({0, 0, 1}), std::invalid_argument);
  const auto p = UnitaryMatrix::permutation({1, 2, 0});
  EXPECT_EQ(p(1, 0), Complex(1.0));
  EXPECT_TRUE(is_unitary(p.entries()));
}

TEST(Unitary, MatricesEqualIsNotUpToPhase) {
  Rng rng(kDefaultSeed);
  const auto u = random_unitary(6, rng);
  EXPECT_TRUE(matrices_equal(u.entries(), u.entries()).equal);
  const CMatrix phased = u.entries() * Complex(0.0, 1.0);
  const auto cmp = matrices_equal(u.entries(), phased);
  EXPECT_FALSE(cmp.equal);
  EXPECT_GT(cmp.max_deviation, 0.1);
  EXPECT_THROW((void)matrices_equal(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST(Random, UnitariesAndStates) {
  Rng rng(7);
  for (std::size_t d : {2u, 3u, 12u}) {
    EXPECT_TRUE(is_unitary(random_unitary(d, rng).entries(), 1e-12));
    EXPECT_NEAR(random_state_vector(d, rng).norm(), 1.0, 1e-12);
  }
}

TEST(State, ApplyGateMatchesKroneckerProduct) {
  // Gate on wire 1 of (3,2,2) equals I3 (x) G (x) I2.
  Rng rng(11);
  WireSystem sys({3, 2, 2});
  const auto g = random_unitary(2, rng);
  GateOp op("g", {1}, {2}, g, GateTag::SingleQudit);
  CMatrix full = CMatrix::Zero(12, 12);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 2; ++c)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) full(a * 4 + r * 2 + c, a * 4 + s * 2 + c) = g.entries()(r, s);
  const CVector psi = random_state_vector(12, rng);
  const auto out = apply_gate(MixedRadixState(sys, psi), op);
  EXPECT_LT((out.amplitudes() - full * psi).norm(), 1e-12);
}

TEST(State, ReversedWireOrderGate) {
  // A CNOT listed as (control=wire 1, target=wire 0).
  WireSystem sys({2, 2});
  GateOp cnot("cx", {1, 0}, {2, 2}, UnitaryMatrix::permutation({0, 1, 3, 2}), GateTag::TwoQubit);
  const std::vector<int> in{0, 1};
  const auto out = apply_gate(MixedRadixState::basis(sys, in), cnot);
  EXPECT_EQ(out.amplitude(3), Complex(1.0));
}

TEST(State, NormPreservedOnRandomCircuits) {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 20; ++trial) {
    WireSystem sys({3, 2, 4, 2});
    MixedRadixState s(sys, random_state_vector(sys.total_dim(), rng));
    for (int k = 0; k < 10; ++k) s = apply_gate(s, random_gate(sys, rng));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Circuit, UnitaryMatchesSequentialApplication) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    WireSystem sys({3, 2, 2});
    Circuit c(sys);
    for (int k = 0; k < 8; ++k) c.add(random_gate(sys, rng));
    const auto u = circuit_unitary(c);
    EXPECT_TRUE(is_unitary(u.entries()));
    for (std::size_t col = 0; col < sys.total_dim(); ++col) {
      MixedRadixState s = MixedRadixState::basis_index(sys, col);
      for (const auto& g : c.gates()) s = apply_gate(s, g);
      EXPECT_LT((u.entries().col(static_cast<Eigen::Index>(col)) - s.amplitudes()).norm(), 1e-12);
      EXPECT_LT((run_circuit(c, MixedRadixState::basis_index(sys, col)).amplitudes() - s.amplitudes()).norm(),
                1e-12);
    }
  }
}

TEST(Circuit, RejectsIncompatibleGate) {
  Circuit c(WireSystem({3, 2}));
  GateOp g("x", {1}, {3}, UnitaryMatrix::identity(3), GateTag::SingleQudit);
  EXPECT_THROW(c.add(g), std::invalid_argument);
  GateOp h("x", {2}, {2}, UnitaryMatrix::identity(2), GateTag::SingleQudit);
  EXPECT_THROW(c.add(h), std::invalid_argument);
}

TEST(Projection, IdentityHasNoLeakage) {
  WireSystem sys({3, 2});
  const auto p = project_to_subspace(UnitaryMatrix::identity(6), sys, {{0, 1}, {0, 1}});
  EXPECT_EQ(p.block.rows(), 4);
  EXPECT_TRUE(matrices_equal(p.block, CMatrix::Identity(4, 4)).equal);
  EXPECT_NEAR(p.leakage, 0.0, 1e-15);
  EXPECT_TRUE(p.block_is_unitary());
}

TEST(Projection, LevelExchangeLeaksFully) {
  // |0> <-> |2> on a qutrit moves the whole |0> column outside {0,1}.
  WireSystem sys({3});
  const auto p = project_to_subspace(UnitaryMatrix::permutation({2, 1, 0}), sys, {{0, 1}});
  EXPECT_NEAR(p.leakage, 1.0, 1e-12);
  EXPECT_FALSE(p.block_is_unitary());
  EXPECT_EQ(p.block(1, 1), Complex(1.0));
  EXPECT_EQ(p.block(0, 0), Complex(0.0));
}

TEST(Projection, KeptIndices) {
  WireSystem sys({3, 2});
  EXPECT_EQ(kept_basis_indices(sys, {{0, 2}, {1}}), (std::vector<std::size_t>{1, 5}));
  EXPECT_THROW(kept_basis_indices(sys, {{0, 3}, {1}}), std::out_of_range);
}

}  // namespace
}  // namespace auxq
