// Copyright 2026 The ifsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ifs/compile_exchange.h"
#include "ifs/encoding.h"
#include "ifs/verify.h"
#include "oracles.h"

namespace ifs {
namespace {

constexpr double PI = std::numbers::pi;

ExchangeChain two_bits(double jz = 0.0) {
    return ExchangeChain{2, 1.0, jz};
}

TEST(SynthBlock, Accounting) {
    auto c = two_bits();
    for (Axis a : {Axis::X, Axis::Y}) {
        auto cost = accounting(synth_block(c, {c.star(0), c.dot1(0)}, a, {4, Level1Mode::Trotter}));
        EXPECT_EQ(cost.local_gate_count, 22u);
        EXPECT_EQ(cost.evolve_count, 8u);
        EXPECT_EQ(*cost.exact_evolve_time, SymbolicReal::pi_multiple(Rational(8, 128)));
    }
}

TEST(SynthBlock, UpperLevelsAreExactGivenIdealLevel1) {
    // exp(-i 8 jxy t s^a_s s^a_d) for every star-dot pair of the group and both axes
    ExchangeChain c{2, 0.7, 0.3};
    SynthesisParams p{3, Level1Mode::Ideal};
    const double t = p.base_dt(c.jxy).value();
    auto g = exchange_group(c, 0);
    for (Axis a : {Axis::X, Axis::Y}) {
        for (size_t star : {g.star_left, g.star_right}) {
            for (size_t dot : {g.dot1, g.dot2}) {
                PauliSum target(c.n_physical());
                target.add(PauliTerm(8 * c.jxy, {{star, a}, {dot, a}}));
                Matrix expected = oracle::propagator(target, t);
                Matrix got = schedule_unitary(synth_block(c, {star, dot}, a, p), c).matrix();
                EXPECT_NEAR((got - expected).norm(), 0, 1e-12);
            }
        }
    }
}

TEST(IdealLevel1, ZeroTimeIsIdentityAndMatchesOracle) {
    EXPECT_NEAR((ideal_level1_unitary(1.0, Axis::X, 0.0) - Matrix::Identity(16, 16)).norm(), 0, 1e-15);
    PauliSum h(4);
    for (size_t s : {0, 3}) {
        for (size_t d : {1, 2}) {
            h.add(PauliTerm(2 * 1.3, {{s, Axis::Y}, {d, Axis::Y}}));
        }
    }
    EXPECT_NEAR((ideal_level1_unitary(1.3, Axis::Y, 0.21) - oracle::propagator(h, 0.21)).norm(), 0, 1e-12);
}

TEST(SynthBlock, RejectsBadPairs) {
    auto c = two_bits();
    EXPECT_THROW(synth_block(c, {c.star(0), c.dot1(0)}, Axis::Z, {}), std::invalid_argument);
    EXPECT_THROW(synth_block(c, {c.star(0), c.star(1)}, Axis::X, {}), std::invalid_argument);
    // trailing isolator has no right-hand star
    EXPECT_THROW(synth_block(c, {c.star(1), c.dot1(1)}, Axis::X, {}), std::invalid_argument);
    ExchangeChain three{3, 1.0, 0.0};
    EXPECT_THROW(synth_block(three, {three.star(2), three.dot1(0)}, Axis::X, {}), std::invalid_argument);
    EXPECT_THROW(SynthesisParams({0, Level1Mode::Trotter}).validate(), std::invalid_argument);
}

TEST(SynthSwap, TargetMatrixFromOracle) {
    PauliSum h(2);
    h.add(PauliTerm(1.0, {{0, Axis::X}, {1, Axis::X}}));
    h.add(PauliTerm(1.0, {{0, Axis::Y}, {1, Axis::Y}}));
    EXPECT_NEAR((iswap_target() - oracle::propagator(h, PI / 4)).norm(), 0, 1e-12);
    PauliSum xx(2);
    xx.add(PauliTerm(1.0, {{0, Axis::X}, {1, Axis::X}}));
    EXPECT_NEAR((xx_quarter_target() - oracle::propagator(xx, PI / 4)).norm(), 0, 1e-12);
}

TEST(SynthSwap, ConvergesWithN) {
    auto c = two_bits();
    auto g = exchange_group(c, 0);
    Matrix e = group_embedding(c, g);
    Matrix target = lift_two_qubit(iswap_target(), 0, 1, 4);
    double f8 = process_fidelity(synth_swap(c, {g.star_left, g.dot1}, {8, Level1Mode::Trotter}), c, target, e).fidelity;
    double f16 =
        process_fidelity(synth_swap(c, {g.star_left, g.dot1}, {16, Level1Mode::Trotter}), c, target, e).fidelity;
    double f64 =
        process_fidelity(synth_swap(c, {g.star_left, g.dot1}, {64, Level1Mode::Trotter}), c, target, e).fidelity;
    EXPECT_GT(f16, f8);
    EXPECT_GE(f64, 1 - 1e-2);
}

TEST(SynthSwap, IdealLevel1IsExactForEveryPair) {
    ExchangeChain c = two_bits(0.5);
    auto g = exchange_group(c, 0);
    Matrix e = group_embedding(c, g);
    const auto q = g.qubits();
    for (size_t si : {0, 3}) {
        for (size_t di : {1, 2}) {
            auto s = synth_swap(c, {q[si], q[di]}, {2, Level1Mode::Ideal});
            auto f = process_fidelity(s, c, lift_two_qubit(iswap_target(), si, di, 4), e);
            EXPECT_GE(f.fidelity, 1 - 1e-10);
        }
    }
}

TEST(SynthXXQuarter, AccountingAndTarget) {
    auto c = two_bits();
    auto g = exchange_group(c, 0);
    for (size_t n : {1, 5}) {
        auto cost = accounting(synth_xx_quarter(c, {g.star_right, g.dot1}, {n, Level1Mode::Trotter}));
        EXPECT_EQ(cost.local_gate_count, 22 * n);
        EXPECT_EQ(*cost.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 4)));
    }
    auto s = synth_xx_quarter(c, {g.star_right, g.dot1}, {2, Level1Mode::Ideal});
    auto f = process_fidelity(s, c, lift_two_qubit(xx_quarter_target(), 3, 1, 4), group_embedding(c, g));
    EXPECT_GE(f.fidelity, 1 - 1e-10);
}

TEST(CphaseExchange, AccountingAndBound) {
    auto c = two_bits();
    for (size_t n : {1, 4}) {
        auto cost = accounting(cphase_logical_exchange(c, 0, 1, {n, Level1Mode::Trotter}));
        EXPECT_EQ(cost.local_gate_count, 110 * n + 8);
        ASSERT_TRUE(cost.exact_evolve_time);
        EXPECT_EQ(*cost.exact_evolve_time, SymbolicReal::pi_multiple(Rational(5, 4)));
        EXPECT_LE(cost.total_evolve_time, 1.5 * PI);
    }
}

TEST(CphaseExchange, ExactWithIdealLevel1) {
    for (double jz : {0.0, 1.0}) {
        auto c = two_bits(jz);
        auto f = process_fidelity(cphase_logical_exchange(c, 1, 0, {1, Level1Mode::Ideal}), c, cphase_target(),
                                  CodeSpace(c));
        EXPECT_GE(f.fidelity, 1 - 1e-10);
        EXPECT_LE(f.leakage, 1e-10);
    }
}

TEST(CphaseExchange, TrotterFidelityImprovesWithN) {
    auto c = two_bits();
    double prev = 0.0;
    for (size_t n : {8, 16, 32}) {
        auto f = process_fidelity(cphase_logical_exchange(c, 0, 1, {n, Level1Mode::Trotter}), c, cphase_target(),
                                  CodeSpace(c));
        EXPECT_GT(f.fidelity, prev);
        prev = f.fidelity;
    }
    EXPECT_GE(prev, 0.995);
}

TEST(CphaseExchange, TruthTablePhaseAtN32) {
    auto c = two_bits();
    CodeSpace code(c);
    Matrix e = code.embedding();
    Matrix m = e.adjoint() * apply_schedule(cphase_logical_exchange(c, 0, 1, {32, Level1Mode::Trotter}), c, e);
    Complex ref = m(0, 0);
    for (Eigen::Index j = 1; j < 4; j++) {
        Complex rel = m(j, j) / ref;
        EXPECT_NEAR(std::abs(rel - (j == 3 ? -1.0 : 1.0)), 0, 1e-3) << "basis " << j;
    }
}

TEST(CphaseExchange, RejectsNonAdjacentBits) {
    ExchangeChain c{3, 1.0, 0.0};
    EXPECT_THROW(cphase_logical_exchange(c, 0, 2, {}), std::invalid_argument);
}

TEST(LocalGateExchange, FlipsTheEncodedBit) {
    ExchangeChain c{1, 1.0, 0.0};
    CodeSpace code(c);
    const int zero[] = {0};
    const int one[] = {1};
    auto out = execute(local_logical_gate_exchange(c, 0, gates::pauli(Axis::X)), c, code.encode(zero));
    EXPECT_NEAR(out.overlap_fidelity(code.encode(one)), 1.0, 1e-12);
}

TEST(LocalGateExchange, SimultaneousStarsAreATensorProduct) {
    auto c = two_bits(0.4);
    std::mt19937_64 rng(12);
    Matrix2 u0 = oracle::random_unitary(rng, 2);
    Matrix2 u1 = oracle::random_unitary(rng, 2);
    auto s = local_logical_gate_exchange(c, 0, u0) + local_logical_gate_exchange(c, 1, u1);
    CodeSpace code(c);
    Matrix m = code.embedding().adjoint() * apply_schedule(s, c, code.embedding());
    Matrix target = lift_one_qubit(u1, 1, 2) * lift_one_qubit(u0, 0, 2);
    EXPECT_LE((m - target).norm(), 1e-12);
}

TEST(LocalGateExchange, IdleNeighborUnchangedDuringEvolution) {
    auto c = ExchangeChain{3, 1.0, 0.5};
    CodeSpace code(c);
    std::mt19937_64 rng(13);
    Vector logical = oracle::random_state(rng, 3);
    StateVector psi = code.encode_logical(logical);
    PulseSchedule s = local_logical_gate_exchange(c, 0, gates::hadamard());
    s.evolve(SymbolicReal::raw(1.1));
    StateVector out = execute(s, c, psi);
    const size_t neighbors[] = {c.star(1), c.dot1(1), c.dot2(1), c.star(2), c.dot1(2), c.dot2(2)};
    EXPECT_LE((reduced_density(out, neighbors) - reduced_density(psi, neighbors)).norm(), 1e-12);
}

}  // namespace
}  // namespace ifs
