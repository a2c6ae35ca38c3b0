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

#include "ifs/compile_ising.h"

#include <stdexcept>
#include <string>

namespace ifs {

namespace {

void check_adjacent(const DiagonalChain &arch, size_t k, size_t k2) {
    if (k >= arch.n_logical || k2 >= arch.n_logical) {
        throw std::out_of_range("logical index out of range for the chain");
    }
    if (k + 1 != k2 && k2 + 1 != k) {
        throw std::invalid_argument(
            "logical bits " + std::to_string(k) + " and " + std::to_string(k2) + " are not adjacent");
    }
}

/// exp(+i pi/4 Z) in the exp(-i theta/2 Z) convention.
SymbolicReal quarter_phase() {
    return SymbolicReal::pi_multiple(Rational(-1, 2));
}

/// exp(+i pi/8 Z).
SymbolicReal eighth_phase() {
    return SymbolicReal::pi_multiple(Rational(-1, 4));
}

/// One H_b CPHASE(a, b) H_b sandwich for each listed bit, sharing one Evolve.
void append_cnot_ab(PulseSchedule &s, const DiagonalChain &arch, std::span<const size_t> ks) {
    for (size_t k : ks) {
        s.local(arch.qubit_b(k), gates::hadamard());
    }
    s.evolve(SymbolicReal::pi_multiple(Rational(1, 4), arch.j0));
    for (size_t k : ks) {
        s.rotation(arch.qubit_a(k), Axis::Z, quarter_phase());
        s.rotation(arch.qubit_b(k), Axis::Z, quarter_phase());
    }
    for (size_t k : ks) {
        s.local(arch.qubit_b(k), gates::hadamard());
    }
}

}  // namespace

PulseSchedule rz_logical(const DiagonalChain &arch, size_t k, SymbolicReal angle, bool on_b) {
    arch.validate();
    PulseSchedule s("rz_logical(" + std::to_string(k) + ", " + angle.str() + ")");
    if (on_b) {
        s.rotation(arch.qubit_b(k), Axis::Z, -angle);
    } else {
        s.rotation(arch.qubit_a(k), Axis::Z, angle);
    }
    return s;
}

PulseSchedule cphase_physical(const DiagonalChain &arch, size_t a, size_t b) {
    arch.validate();
    if (a >= arch.n_physical() || b >= arch.n_physical() || a / 2 != b / 2 || a == b) {
        throw std::invalid_argument(
            "qubits " + std::to_string(a) + " and " + std::to_string(b) + " are not the intra-pair edge of one bit");
    }
    PulseSchedule s("cphase_physical(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    s.evolve(SymbolicReal::pi_multiple(Rational(1, 4), arch.j0));
    s.rotation(a, Axis::Z, quarter_phase());
    s.rotation(b, Axis::Z, quarter_phase());
    return s;
}

PulseSchedule hadamard_logical_parallel(const DiagonalChain &arch, std::span<const size_t> ks) {
    arch.validate();
    if (ks.empty()) {
        throw std::invalid_argument("no logical bits given");
    }
    std::string names;
    for (size_t i = 0; i < ks.size(); i++) {
        if (ks[i] >= arch.n_logical) {
            throw std::out_of_range("logical index " + std::to_string(ks[i]) + " out of range");
        }
        for (size_t j = 0; j < i; j++) {
            size_t lo = std::min(ks[i], ks[j]);
            size_t hi = std::max(ks[i], ks[j]);
            if (hi - lo < 2) {
                throw std::invalid_argument(
                    "parallel logical Hadamards need non-adjacent bits, got " + std::to_string(lo) + " and " +
                    std::to_string(hi));
            }
        }
        names += (i ? "," : "") + std::to_string(ks[i]);
    }
    PulseSchedule s("hadamard_logical(" + names + ")");
    append_cnot_ab(s, arch, ks);
    for (size_t k : ks) {
        s.local(arch.qubit_a(k), gates::hadamard());
    }
    append_cnot_ab(s, arch, ks);
    return s;
}

PulseSchedule hadamard_logical(const DiagonalChain &arch, size_t k) {
    const size_t ks[] = {k};
    return hadamard_logical_parallel(arch, ks);
}

PulseSchedule cphase_logical(const DiagonalChain &arch, size_t k, size_t k2) {
    arch.validate();
    check_adjacent(arch, k, k2);
    PulseSchedule s("cphase_logical(" + std::to_string(k) + ", " + std::to_string(k2) + ")");
    s.local(arch.qubit_b(k), gates::pauli(Axis::X));
    s.local(arch.qubit_b(k2), gates::pauli(Axis::X));
    s.evolve(SymbolicReal::pi_multiple(Rational(1, 16), arch.j1));
    for (size_t bit : {k, k2}) {
        s.rotation(arch.qubit_a(bit), Axis::Z, eighth_phase());
        s.rotation(arch.qubit_b(bit), Axis::Z, eighth_phase());
    }
    s.local(arch.qubit_b(k), gates::pauli(Axis::X));
    s.local(arch.qubit_b(k2), gates::pauli(Axis::X));
    return s;
}

PulseSchedule cnot_logical(const DiagonalChain &arch, size_t control, size_t target) {
    arch.validate();
    check_adjacent(arch, control, target);
    PulseSchedule s = hadamard_logical(arch, target) + cphase_logical(arch, control, target) +
                      hadamard_logical(arch, target);
    return s.with_label("cnot_logical(" + std::to_string(control) + ", " + std::to_string(target) + ")");
}

}  // namespace ifs
