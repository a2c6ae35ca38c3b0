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
#include <variant>

#include <gtest/gtest.h>

#include "ifs/compile_ising.h"
#include "ifs/encoding.h"
#include "ifs/verify.h"
#include "oracles.h"

namespace ifs {
namespace {

constexpr double PI = std::numbers::pi;

/// Independent product of Kronecker-built instruction matrices.
Matrix oracle_unitary(const PulseSchedule &s, const DiagonalChain &c) {
    const size_t n = c.n_physical();
    const auto dim = static_cast<Eigen::Index>(size_t{1} << n);
    PauliSum h = build_hamiltonian(c);
    Matrix u = Matrix::Identity(dim, dim);
    auto lift = [&](size_t q, const Matrix &g) {
        Matrix m = Matrix::Identity(1, 1);
        for (size_t k = 0; k < n; k++) {
            m = Matrix(Eigen::kroneckerProduct(k == q ? g : Matrix(Matrix::Identity(2, 2)), m));
        }
        return m;
    };
    for (const auto &inst : s.instructions()) {
        if (const auto *r = std::get_if<LocalRotation>(&inst)) {
            Matrix g = oracle::taylor_expm(Complex(0, -r->angle.value() / 2) * oracle::pauli(r->axis));
            u = lift(r->qubit, g) * u;
        } else if (const auto *l = std::get_if<LocalUnitary>(&inst)) {
            u = lift(l->qubit, l->matrix) * u;
        } else if (const auto *e = std::get_if<Evolve>(&inst)) {
            u = oracle::propagator(h, e->duration.value()) * u;
        } else {
            ADD_FAILURE() << "unexpected instruction kind";
        }
    }
    return u;
}

Matrix restricted(const PulseSchedule &s, const Architecture &arch) {
    CodeSpace code(arch);
    return code.embedding().adjoint() * schedule_unitary(s, arch).matrix() * code.embedding();
}

TEST(RzLogical, ZeroAngleIsIdentity) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    auto f = process_fidelity(rz_logical(c, 0, SymbolicReal::pi_multiple(Rational(0))), c, Matrix::Identity(4, 4),
                              CodeSpace(c));
    EXPECT_GE(f.fidelity, 1 - 1e-12);
}

TEST(RzLogical, PiIsLogicalZ) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    Matrix z = oracle::pauli(Axis::Z);
    for (bool on_b : {false, true}) {
        auto s = rz_logical(c, 0, SymbolicReal::pi_multiple(Rational(1)), on_b);
        EXPECT_GE(process_fidelity(s, c, z, CodeSpace(c)).fidelity, 1 - 1e-10);
        auto cost = accounting(s);
        EXPECT_EQ(cost.local_gate_count, 1u);
        EXPECT_EQ(cost.total_evolve_time, 0.0);
    }
}

TEST(RzLogical, AOrBGiveTheSameLogicalAction) {
    DiagonalChain c{1, 1.0, 1.0, {}};
    auto angle = SymbolicReal::raw(0.83);
    EXPECT_LE(phase_aligned_distance(restricted(rz_logical(c, 0, angle, false), c),
                                     restricted(rz_logical(c, 0, angle, true), c)),
              1e-12);
}

TEST(CphasePhysical, ExactPhasesOnThePair) {
    DiagonalChain c{1, 1.7, 1.0, {}};
    Matrix u = schedule_unitary(cphase_physical(c, 0, 1), c).matrix();
    Complex w = std::polar(1.0, PI / 4);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = w;
    expected(1, 1) = w;
    expected(2, 2) = w;
    expected(3, 3) = -w;
    EXPECT_NEAR((u - expected).norm(), 0, 1e-12);
    EXPECT_NEAR(std::abs(u(0, 0) - w), 0, 1e-12);  // |up up>

    auto cost = accounting(cphase_physical(c, 0, 1));
    EXPECT_EQ(cost.local_gate_count, 2u);
    EXPECT_EQ(cost.evolve_count, 1u);
    EXPECT_EQ(*cost.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 4), 1.7));
}

TEST(CphasePhysical, RequiresAnIntraBitEdge) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    EXPECT_THROW(cphase_physical(c, 1, 2), std::invalid_argument);
    EXPECT_THROW(cphase_physical(c, 0, 0), std::invalid_argument);
}

TEST(HadamardLogical, FidelityLeakageAndInvolution) {
    DiagonalChain c{2, 1.0, 0.6, {}};
    CodeSpace code(c);
    for (size_t k = 0; k < 2; k++) {
        auto s = hadamard_logical(c, k);
        auto f = process_fidelity(s, c, lift_one_qubit(gates::hadamard(), k, 2), code);
        EXPECT_GE(f.fidelity, 1 - 1e-10);
        EXPECT_LE(f.leakage, 1e-10);
        EXPECT_GE(process_fidelity(s + s, c, Matrix::Identity(4, 4), code).fidelity, 1 - 1e-10);
    }
}

TEST(HadamardLogical, MatchesKroneckerOracle) {
    DiagonalChain c{2, 1.3, 0.8, {}};
    auto s = hadamard_logical(c, 1);
    EXPECT_NEAR((schedule_unitary(s, c).matrix() - oracle_unitary(s, c)).norm(), 0, 1e-10);
}

TEST(HadamardLogical, ParallelNeedsNonAdjacentBits) {
    DiagonalChain c{3, 1.0, 1.0, {}};
    const size_t adjacent[] = {0, 1};
    EXPECT_THROW(hadamard_logical_parallel(c, adjacent), std::invalid_argument);
    const size_t apart[] = {0, 2};
    auto s = hadamard_logical_parallel(c, apart);
    Matrix target = lift_one_qubit(gates::hadamard(), 0, 3) * lift_one_qubit(gates::hadamard(), 2, 3);
    EXPECT_GE(process_fidelity(s, c, target, CodeSpace(c)).fidelity, 1 - 1e-10);
    EXPECT_EQ(accounting(s).evolve_count, 2u);
}

TEST(CphaseLogical, FidelityAndCost) {
    DiagonalChain c{3, 1.0, 2.0, {}};
    for (size_t k = 0; k < 2; k++) {
        auto s = cphase_logical(c, k + 1, k);
        auto f = process_fidelity(s, c, lift_two_qubit(cphase_target(), k, k + 1, 3), CodeSpace(c));
        EXPECT_GE(f.fidelity, 1 - 1e-10);
        EXPECT_LE(f.leakage, 1e-10);
        EXPECT_EQ(f.cost.local_gate_count, 8u);
        EXPECT_EQ(f.cost.evolve_count, 1u);
        EXPECT_EQ(*f.cost.exact_evolve_time, SymbolicReal::pi_multiple(Rational(1, 16), 2.0));
    }
}

TEST(CphaseLogical, IntraCouplingOnlyAddsGlobalPhase) {
    Matrix ref;
    for (double j0 : {1.0, 3.0, 0.45}) {
        DiagonalChain c{2, j0, 1.0, {}};
        Matrix m = restricted(cphase_logical(c, 0, 1), c);
        if (ref.size() == 0) {
            ref = m;
        }
        EXPECT_LE(phase_aligned_distance(ref, m), 1e-10);
    }
}

TEST(CphaseLogical, MatchesKroneckerOracle) {
    DiagonalChain c{2, 1.0, 0.9, {}};
    auto s = cphase_logical(c, 0, 1);
    EXPECT_NEAR((schedule_unitary(s, c).matrix() - oracle_unitary(s, c)).norm(), 0, 1e-10);
}

TEST(CphaseLogical, RejectsNonAdjacentBits) {
    DiagonalChain c{3, 1.0, 1.0, {}};
    EXPECT_THROW(cphase_logical(c, 0, 2), std::invalid_argument);
    EXPECT_THROW(cphase_logical(c, 1, 1), std::invalid_argument);
    EXPECT_THROW(cphase_logical(c, 2, 3), std::out_of_range);
}

TEST(CnotLogical, TruthTable) {
    DiagonalChain c{2, 1.0, 1.0, {}};
    CodeSpace code(c);
    auto s = cnot_logical(c, 0, 1);
    struct Case {
        int in0, in1, out0, out1;
    };
    for (auto [i0, i1, o0, o1] : {Case{1, 0, 1, 1}, Case{0, 0, 0, 0}, Case{1, 1, 1, 0}, Case{0, 1, 0, 1}}) {
        const int in[] = {i0, i1};
        const int out[] = {o0, o1};
        EXPECT_GE(execute(s, c, code.encode(in)).overlap_fidelity(code.encode(out)), 1 - 1e-10);
    }
}

TEST(CnotLogical, FidelityAndClosedFormCost) {
    DiagonalChain c{2, 1.5, 0.5, {}};
    for (auto [ctl, tgt] : {std::pair<size_t, size_t>{0, 1}, {1, 0}}) {
        auto s = cnot_logical(c, ctl, tgt);
        auto f = process_fidelity(s, c, cnot_target(ctl, tgt), CodeSpace(c));
        EXPECT_GE(f.fidelity, 1 - 1e-10);
        EXPECT_EQ(f.cost.local_gate_count, 26u);
        EXPECT_EQ(f.cost.evolve_count, 5u);
        EXPECT_NEAR(f.cost.total_evolve_time, PI / (16 * c.j1) + PI / c.j0, 1e-13);
    }
}

}  // namespace
}  // namespace ifs
