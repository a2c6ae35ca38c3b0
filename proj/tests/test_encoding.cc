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
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "ifs/compile_ising.h"
#include "ifs/encoding.h"
#include "oracles.h"

namespace ifs {
namespace {

const double S = 1 / std::sqrt(2.0);

std::vector<int> bits_of(size_t index, size_t width) {
    std::vector<int> b(width);
    for (size_t k = 0; k < width; k++) {
        b[k] = static_cast<int>((index >> k) & 1);
    }
    return b;
}

TEST(EncodeDiagonal, ZeroIsUpDown) {
    const int bits[] = {0};
    auto reg = encode_diagonal(bits, DiagonalChain{1, 1.0, 1.0, {}});
    // a = qubit 0 up (0), b = qubit 1 down (1): index 2
    EXPECT_NEAR(std::abs(reg.state.amplitude(2)), 1.0, 1e-15);
}

TEST(EncodeDiagonal, TwoBitsProductAndAnnihilation) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    const int bits[] = {0, 1};
    auto reg = encode_diagonal(bits, c);
    // |a0=0, b0=1, a1=1, b1=0> = index 0b0110
    EXPECT_NEAR(std::abs(reg.state.amplitude(0b0110)), 1.0, 1e-15);
    EXPECT_LE(annihilation_residual(interaction_between(c, 0, 1), reg.state), 1e-12);
}

TEST(EncodeDiagonal, RoundTripOnThreeBits) {
    DiagonalChain c{3, 1.0, 1.0, {}};
    const int bits[] = {1, 1, 1};
    auto reg = encode_diagonal(bits, c);
    EXPECT_NEAR(reg.state.norm(), 1.0, 1e-12);
    for (size_t k = 0; k < 3; k++) {
        EXPECT_EQ(logical_readout(reg, k, 17 + k).bit, 1);
    }
}

TEST(EncodeExchange, IsolatorHoldsTheSinglet) {
    ExchangeChain c{1, 1.0, 0.0};
    const int bits[] = {0};
    auto reg = encode_exchange(bits, c);
    const size_t iso[] = {c.dot1(0), c.dot2(0)};
    Vector s = singlet_pair();
    EXPECT_NEAR((reduced_density(reg.state, iso) - s * s.adjoint()).norm(), 0, 1e-14);
    // bit0 = dot1, bit1 = dot2 in the reduced index
    EXPECT_NEAR(s[2].real(), S, 1e-15);
    EXPECT_NEAR(s[1].real(), -S, 1e-15);
}

TEST(EncodeExchange, HamiltonianHasNoCrossBitAction) {
    ExchangeChain c{2, 1.0, 0.5};
    const int bits[] = {0, 1};
    auto reg = encode_exchange(bits, c);
    EXPECT_LE(annihilation_residual(interaction_between(c, 0, 1), reg.state), 1e-12);
    Matrix h = oracle::kron_matrix(build_hamiltonian(c));
    Vector hpsi = h * reg.state.amplitudes();
    Complex energy = reg.state.amplitudes().dot(hpsi);
    EXPECT_LE((hpsi - energy * reg.state.amplitudes()).norm(), 1e-12);
}

TEST(Encode, WrongWidthIsRejected) {
    const int bits[] = {0, 1, 0};
    EXPECT_THROW(encode_diagonal(bits, DiagonalChain{2, 1.0, 1.0, {}}), std::invalid_argument);
    EXPECT_THROW(encode_exchange(bits, ExchangeChain{2, 1.0, 0.0}), std::invalid_argument);
    const int bad[] = {2};
    EXPECT_THROW(encode_diagonal(bad, DiagonalChain{1, 1.0, 1.0, {}}), std::invalid_argument);
}

TEST(AnnihilationResidual, EveryCodewordProductOnDiagonalChain) {
    DiagonalChain c{3, 1.0, 2.0, {}};
    for (size_t j = 0; j < 8; j++) {
        auto reg = encode(bits_of(j, 3), c);
        for (size_t k = 0; k < 2; k++) {
            EXPECT_LE(annihilation_residual(interaction_between(c, k, k + 1), reg.state), 1e-12);
        }
    }
}

TEST(AnnihilationResidual, OutsideTheCode) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    auto cross = interaction_between(c, 0, 1);
    // |up up> (x) |up down>: the second bit still has zero total z, so the product vanishes.
    auto half = StateVector::basis(4, 0b1000);
    EXPECT_LE(annihilation_residual(cross, half), 1e-12);
    // |up up> (x) |up up>: (2)(2) j1 = 4 j1.
    auto both = StateVector::basis(4, 0);
    EXPECT_NEAR(annihilation_residual(cross, both), 4.0, 1e-12);
}

TEST(AnnihilationResidual, ZeroOperator) {
    EXPECT_EQ(annihilation_residual(PauliSum(2), StateVector::basis(2, 3)), 0.0);
}

TEST(Leakage, FreshRegisterAndFlippedB) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    const int bits[] = {1, 0};
    auto reg = encode(bits, c);
    EXPECT_LE(leakage(reg.state, c), 1e-12);
    auto flipped = apply_local_gate(reg.state, c.qubit_b(1), gates::pauli(Axis::X));
    EXPECT_NEAR(leakage(flipped, c), 1.0, 1e-12);
}

TEST(Leakage, AfterCompiledHadamard) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    const int bits[] = {0, 1};
    auto out = execute(hadamard_logical(c, 0), c, encode(bits, c).state);
    EXPECT_LE(leakage(out, c), 1e-10);
}

TEST(InitSchedule, FlipsEveryB) {
    DiagonalChain one{1, 1.0, 1.0, {}};
    auto cost = accounting(init_schedule_diagonal(one));
    EXPECT_EQ(cost.local_gate_count, 1u);
    EXPECT_EQ(cost.total_evolve_time, 0.0);

    DiagonalChain three{3, 1.0, 1.0, {}};
    auto s = init_schedule_diagonal(three);
    auto c3 = accounting(s);
    EXPECT_EQ(c3.local_gate_count, 3u);
    EXPECT_EQ(c3.evolve_count, 0u);
    EXPECT_EQ(c3.total_evolve_time, 0.0);
    const int zeros[] = {0, 0, 0};
    auto out = execute(s, three, StateVector::basis(6, 0));
    EXPECT_GE(out.overlap_fidelity(encode(zeros, three).state), 1 - 1e-12);
}

TEST(Readout, DeterministicOnCodewords) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    for (int b : {0, 1}) {
        const int bits[] = {b};
        auto reg = encode(bits, c);
        for (std::uint64_t seed = 0; seed < 20; seed++) {
            EXPECT_EQ(logical_readout(reg, 0, seed).bit, b);
        }
    }
}

TEST(Readout, ExchangeReadsTheStar) {
    ExchangeChain c{2, 1.0, 0.0};
    const int bits[] = {1, 0};
    auto reg = encode(bits, c);
    EXPECT_EQ(logical_readout(reg, 0, 1).bit, 1);
    EXPECT_EQ(logical_readout(reg, 1, 1).bit, 0);
}

TEST(Readout, SuperpositionFrequency) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    CodeSpace code(c);
    Vector plus(2);
    plus << S, S;
    LogicalRegister reg{c, code.encode_logical(plus)};
    int ones = 0;
    for (std::uint64_t seed = 0; seed < 10000; seed++) {
        auto r = logical_readout(reg, 0, seed);
        ones += r.bit;
        EXPECT_LE(leakage(r.post.state, c), 1e-12);
    }
    EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
}

TEST(CodeSpace, EmbeddingIsIsometry) {
    for (Architecture arch : {Architecture(DiagonalChain{3, 1.0, 1.0, {}}), Architecture(ExchangeChain{3, 1.0, 0.0})}) {
        CodeSpace code(arch);
        const Matrix &e = code.embedding();
        EXPECT_NEAR((e.adjoint() * e - Matrix::Identity(8, 8)).norm(), 0, 1e-13);
    }
}

}  // namespace
}  // namespace ifs
