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

#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "ifs/compile_exchange.h"
#include "ifs/compile_ising.h"
#include "ifs/encoding.h"
#include "ifs/schedule.h"
#include "oracles.h"

namespace ifs {
namespace {

constexpr double PI = std::numbers::pi;

bool same_schedule(const PulseSchedule &a, const PulseSchedule &b) {
    return serialize_text(a) == serialize_text(b);
}

TEST(Execute, EmptyScheduleLeavesStateAlone) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    std::mt19937_64 rng(1);
    auto psi = StateVector::from_amplitudes(4, oracle::random_state(rng, 4));
    auto out = execute(PulseSchedule("empty"), c, psi);
    EXPECT_NEAR((out.amplitudes() - psi.amplitudes()).norm(), 0, 1e-15);
}

TEST(Execute, FlipZeroTimeFlipIsIdentity) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    PulseSchedule s("xx");
    s.local(1, gates::pauli(Axis::X)).evolve(SymbolicReal::raw(0.0)).local(1, gates::pauli(Axis::X));
    std::mt19937_64 rng(2);
    auto psi = StateVector::from_amplitudes(4, oracle::random_state(rng, 4));
    EXPECT_NEAR((execute(s, c, psi).amplitudes() - psi.amplitudes()).norm(), 0, 1e-14);
}

TEST(Execute, CompiledHadamardOnEncodedZero) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    CodeSpace code(c);
    const int zero[] = {0};
    auto out = execute(hadamard_logical(c, 0), c, code.encode(zero));
    Vector plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    EXPECT_GE(out.overlap_fidelity(code.encode_logical(plus)), 1 - 1e-10);
}

TEST(Execute, RejectsBadInstructionsWithIndex) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    PulseSchedule s("bad");
    s.local(0, gates::hadamard()).local(5, gates::hadamard());
    try {
        execute(s, c, StateVector::basis(2, 0));
        FAIL() << "expected an error";
    } catch (const std::exception &e) {
        EXPECT_NE(std::string(e.what()).find("instruction 1"), std::string::npos) << e.what();
    }
    PulseSchedule neg("neg");
    EXPECT_THROW(neg.evolve(SymbolicReal::raw(-0.5)), std::invalid_argument);
    EXPECT_THROW(deserialize_text(R"({"label": "n", "instructions": [{"kind": "evolve", "duration": "-1.0"}]})"),
                 std::exception);
}

TEST(ScheduleUnitary, EmptyIsIdentity) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    EXPECT_NEAR((schedule_unitary(PulseSchedule("e"), c).matrix() - Matrix::Identity(16, 16)).norm(), 0, 1e-15);
}

TEST(ScheduleUnitary, SingleEvolveIsTheChainPropagator) {
    ExchangeChain c{2, 0.9, 0.4};
    PulseSchedule s("t");
    s.evolve(SymbolicReal::raw(0.77));
    Matrix expected = oracle::propagator(build_hamiltonian(c), 0.77);
    EXPECT_NEAR((schedule_unitary(s, c).matrix() - expected).norm(), 0, 1e-10);
}

TEST(ScheduleUnitary, GateThenInverseIsIdentity) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    std::mt19937_64 rng(5);
    Matrix2 u = oracle::random_unitary(rng, 2);
    PulseSchedule s("uu");
    s.local(1, u).local(1, u.adjoint());
    EXPECT_NEAR((schedule_unitary(s, c).matrix() - Matrix::Identity(4, 4)).norm(), 0, 1e-10);
}

TEST(ScheduleUnitary, RotationConvention) {
    // exp(-i theta/2 Z) on qubit 0
    DiagonalChain c{1, 1.0, 1.0, {}};
    PulseSchedule s("rz");
    s.rotation(0, Axis::Z, SymbolicReal::pi_multiple(Rational(1, 2)));
    Matrix u = schedule_unitary(s, c).matrix();
    EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, -PI / 4)), 0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, PI / 4)), 0, 1e-15);
}

TEST(ScheduleUnitary, MeasurementIsRejected) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    PulseSchedule s("m");
    s.measure(0);
    EXPECT_THROW(schedule_unitary(s, c), std::invalid_argument);
}

TEST(Execute, MeasurementIsSeeded) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    PulseSchedule s("hm");
    s.local(0, gates::hadamard()).measure(0);
    int ones = 0;
    for (std::uint64_t seed = 0; seed < 2000; seed++) {
        auto a = execute(s, c, StateVector::basis(2, 0), seed);
        auto b = execute(s, c, StateVector::basis(2, 0), seed);
        EXPECT_EQ(a.amplitudes(), b.amplitudes());
        ones += std::abs(a.amplitude(1)) > 0.5;
    }
    EXPECT_NEAR(ones / 2000.0, 0.5, 0.05);
}

TEST(Accounting, PublishedGateCosts) {
    DiagonalChain d{2, 2.0, 0.5, {}};
    auto h = accounting(hadamard_logical(d, 0));
    EXPECT_EQ(h.local_gate_count, 9u);
    EXPECT_EQ(h.evolve_count, 2u);
    ASSERT_TRUE(h.exact_evolve_time);
    EXPECT_EQ(*h.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 2), 2.0));

    auto cp = accounting(cphase_logical(d, 0, 1));
    EXPECT_EQ(cp.local_gate_count, 8u);
    EXPECT_EQ(cp.evolve_count, 1u);
    ASSERT_TRUE(cp.exact_evolve_time);
    EXPECT_EQ(*cp.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 16), 0.5));

    ExchangeChain e{2, 1.5, 0.0};
    for (size_t n : {1, 3, 8}) {
        auto sw = accounting(synth_swap(e, {e.star(0), e.dot1(0)}, {n, Level1Mode::Trotter}));
        EXPECT_EQ(sw.local_gate_count, 44 * n);
        EXPECT_EQ(sw.evolve_count, 16 * n);
        ASSERT_TRUE(sw.exact_evolve_time);
        EXPECT_EQ(*sw.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 2), 1.5));
        EXPECT_NEAR(sw.total_evolve_time, PI / 3, 1e-14);
    }
}

TEST(Accounting, MixedScalesFallBackToNumericSum) {
    PulseSchedule s("mixed");
    s.evolve(SymbolicReal::pi_multiple(Rational(1, 4), 1.0)).evolve(SymbolicReal::raw(0.5));
    auto cost = accounting(s);
    EXPECT_FALSE(cost.exact_evolve_time);
    EXPECT_NEAR(cost.total_evolve_time, PI / 4 + 0.5, 1e-15);
}

TEST(Serialization, RoundTripsCompiledSchedules) {
    DiagonalChain d{2, 1.0, 1.0, {}};
    ExchangeChain e{2, 1.0, 0.0};
    std::vector<PulseSchedule> cases = {
        hadamard_logical(d, 0), cnot_logical(d, 1, 0), PulseSchedule("empty"),
        synth_swap(e, {e.star(0), e.dot1(0)}, {1, Level1Mode::Ideal}),
        PulseSchedule("measure").measure(2).rotation(1, Axis::Y, SymbolicReal::raw(0.1))};
    for (const auto &s : cases) {
        PulseSchedule back = deserialize_text(serialize_text(s));
        EXPECT_TRUE(same_schedule(s, back)) << s.label();
        EXPECT_EQ(back.size(), s.size());
        EXPECT_EQ(back.label(), s.label());
    }
    auto h = hadamard_logical(d, 1);
    EXPECT_NEAR((schedule_unitary(h, d).matrix() - schedule_unitary(deserialize(serialize(h)), d).matrix()).norm(), 0,
                0.0);
}

TEST(Serialization, UnknownTagIsNamed) {
    std::string text = R"({"label": "x", "instructions": [{"kind": "teleport", "qubit": 0}]})";
    try {
        deserialize_text(text);
        FAIL() << "expected a format error";
    } catch (const ScheduleFormatError &e) {
        EXPECT_NE(std::string(e.what()).find("teleport"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("instructions[0]"), std::string::npos);
    }
}

TEST(Serialization, MalformedTextIsAFormatError) {
    EXPECT_THROW(deserialize_text("{\"label\": "), ScheduleFormatError);
    EXPECT_THROW(deserialize_text(R"({"label": "x", "instructions": [{"kind": "evolve"}]})"), ScheduleFormatError);
}

}  // namespace
}  // namespace ifs
