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

#include <chrono>

#include "auxq/core/random.hpp"
#include "auxq/core/state.hpp"
#include "auxq/synthesis/fredkin.hpp"
#include "auxq/synthesis/gates.hpp"
#include "auxq/synthesis/verify.hpp"

namespace auxq::synthesis {
namespace {

// Plain bit arithmetic: n control bits then t1, t2, wire 0 most significant.
std::size_t fredkin_image(int n, std::size_t x) {
  const std::size_t controls = x >> 2;
  const std::size_t all = (std::size_t{1} << n) - 1;
  if (controls != all) return x;
  const std::size_t t1 = (x >> 1) & 1;
  const std::size_t t2 = x & 1;
  return (controls << 2) | (t2 << 1) | t1;
}

std::size_t first_nonzero(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 0.5) return static_cast<std::size_t>(i);
  return static_cast<std::size_t>(v.size());
}

TEST(Gates, PartialSwapExamples) {
  const auto g = make_partial_swap(3);
  WireSystem sys({3, 2});
  auto run = [&](int a, int b) {
    const std::vector<int> d{a, b};
    return sys.index_to_digits(first_nonzero(apply_gate(MixedRadixState::basis(sys, d), g).amplitudes()));
  };
  EXPECT_EQ(run(0, 1), (std::vector<int>{1, 0}));
  EXPECT_EQ(run(1, 0), (std::vector<int>{0, 1}));
  EXPECT_EQ(run(1, 1), (std::vector<int>{1, 1}));
  EXPECT_EQ(run(2, 0), (std::vector<int>{2, 0}));
  EXPECT_EQ(run(2, 1), (std::vector<int>{2, 1}));
  EXPECT_EQ(g.tag(), GateTag::TwoQubit);
  EXPECT_THROW(make_partial_swap(2), std::invalid_argument);
}

TEST(Gates, PartialSwapIsInvolution) {
  for (int d = 3; d <= 6; ++d) {
    const auto m = make_partial_swap(d).matrix();
    EXPECT_TRUE(matrices_equal((m * m).entries(), CMatrix::Identity(2 * d, 2 * d)).equal);
  }
}

TEST(Gates, LevelExchangeAndCnot) {
  const auto x = make_level_exchange(5, 1, 3);
  EXPECT_EQ(x.matrix()(3, 1), Complex(1.0));
  EXPECT_EQ(x.matrix()(1, 3), Complex(1.0));
  EXPECT_EQ(x.matrix()(4, 4), Complex(1.0));
  EXPECT_EQ(x.tag(), GateTag::SingleQudit);
  EXPECT_THROW(make_level_exchange(3, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_level_exchange(3, 0, 3), std::invalid_argument);

  // Control qubit on wire 1, target qutrit on wire 0 levels (0,1).
  const auto c = make_qubit_level_cnot(3, 0, 1, 1, 0);
  WireSystem sys({3, 2});
  const std::vector<int> in{0, 1};
  const auto out = apply_gate(MixedRadixState::basis(sys, in), c);
  EXPECT_EQ(sys.index_to_digits(first_nonzero(out.amplitudes())), (std::vector<int>{1, 1}));
  const std::vector<int> park{2, 1};
  const auto still = apply_gate(MixedRadixState::basis(sys, park), c);
  EXPECT_EQ(sys.index_to_digits(first_nonzero(still.amplitudes())), park);
}

TEST(Fredkin, ParkingPairs) {
  EXPECT_EQ(parking_exchanges(1), (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(parking_exchanges(4), (std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {0, 4}, {1, 5}}));
}

TEST(Fredkin, ReferenceMatchesBitArithmetic) {
  for (int n = 1; n <= 6; ++n) {
    const auto perm = n_controlled_fredkin_permutation(n);
    ASSERT_EQ(perm.size(), std::size_t{1} << (n + 2));
    for (std::size_t x = 0; x < perm.size(); ++x) EXPECT_EQ(perm[x], fredkin_image(n, x));
  }
  const auto f = reference_fredkin();
  EXPECT_EQ(f(6, 5), Complex(1.0));
  EXPECT_EQ(f(5, 6), Complex(1.0));
  EXPECT_EQ(f(7, 7), Complex(1.0));
  EXPECT_EQ(f(3, 3), Complex(1.0));
  EXPECT_TRUE(matrices_equal((f * f).entries(), CMatrix::Identity(8, 8)).equal);
}

TEST(Fredkin, ThreeWireCircuitShape) {
  const auto c = build_fredkin3();
  EXPECT_EQ(c.system().dims(), (std::vector<int>{3, 2, 2}));
  ASSERT_EQ(c.gates().size(), 5u);
  EXPECT_EQ(c.count(GateTag::TwoQubit), 3u);
  EXPECT_EQ(c.count(GateTag::SingleQudit), 2u);
}

TEST(Fredkin, ThreeWireBasisTable) {
  const auto c = build_fredkin3();
  const auto& sys = c.system();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int t = 0; t < 2; ++t) {
        const std::vector<int> in{a, b, t};
        const auto out = run_circuit(c, MixedRadixState::basis(sys, in));
        const std::vector<int> want = a == 1 ? std::vector<int>{1, t, b} : in;
        const std::size_t idx = sys.digits_to_index(want);
        EXPECT_NEAR(std::abs(out.amplitude(idx) - Complex(1.0)), 0.0, 1e-12) << a << b << t;
      }
}

TEST(Fredkin, ThreeWireProjectionUnderOneSecond) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = build_fredkin3();
  const auto p = project_circuit_to_subspace(c, qubit_levels(c.system()));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(matrices_equal(p.block, reference_fredkin().entries()).equal);
  EXPECT_LE(p.leakage, 1e-10);
  EXPECT_LT(secs, 1.0);
}

TEST(Fredkin, DecompositionIsInvolutionOnQubitSpace) {
  const auto c = build_n_controlled_fredkin(2);
  const auto u = circuit_unitary(c);
  const auto p = project_to_subspace(u * u, c.system(), qubit_levels(c.system()));
  EXPECT_TRUE(matrices_equal(p.block, CMatrix::Identity(p.block.rows(), p.block.cols())).equal);
}

TEST(Fredkin, VerifiedForOneToEight) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = verify_synthesis(n);
    EXPECT_TRUE(r.verified) << "n=" << n;
    EXPECT_LE(r.max_deviation, kTolerance);
    EXPECT_LE(r.leakage, kTolerance);
    EXPECT_EQ(r.two_qubit_count, static_cast<std::size_t>(2 * n + 1));
    EXPECT_EQ(r.single_qudit_count, static_cast<std::size_t>(2 * n));
    EXPECT_EQ(r.carrier_dim, n + 2);
  }
  EXPECT_THROW(verify_synthesis(0), std::invalid_argument);
}

TEST(Fredkin, RandomSuperpositions) {
  // Embed a random qubit state, run the circuit, compare with the permuted state.
  Rng rng(kDefaultSeed);
  for (int n : {1, 2, 3}) {
    const auto c = build_n_controlled_fredkin(n);
    const auto& sys = c.system();
    const std::size_t q = std::size_t{1} << (n + 2);
    for (int trial = 0; trial < 100; ++trial) {
      const CVector psi = random_state_vector(q, rng);
      CVector embedded = CVector::Zero(static_cast<Eigen::Index>(sys.total_dim()));
      CVector want = CVector::Zero(embedded.size());
      for (std::size_t x = 0; x < q; ++x) {
        std::vector<int> d;
        for (int w = n + 1; w >= 0; --w) d.push_back(static_cast<int>((x >> w) & 1));
        std::vector<int> e;
        const std::size_t y = fredkin_image(n, x);
        for (int w = n + 1; w >= 0; --w) e.push_back(static_cast<int>((y >> w) & 1));
        embedded(static_cast<Eigen::Index>(sys.digits_to_index(d))) = psi(static_cast<Eigen::Index>(x));
        want(static_cast<Eigen::Index>(sys.digits_to_index(e))) = psi(static_cast<Eigen::Index>(x));
      }
      const auto out = run_circuit(c, MixedRadixState(sys, embedded));
      EXPECT_LT((out.amplitudes() - want).norm(), 1e-10);
    }
  }
}

}  // namespace
}  // namespace auxq::synthesis
