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

#include "ifs/compile_exchange.h"

#include <stdexcept>
#include <string>

namespace ifs {

namespace {

std::string pair_name(StarDotPair p) {
    return std::to_string(p.star) + ", " + std::to_string(p.dot);
}

void append_level1(
    PulseSchedule &s, const ExchangeChain &arch, const ExchangeGroup &g, Axis axis, const SynthesisParams &params) {
    SymbolicReal t = params.base_dt(arch.jxy);
    if (params.level1 == Level1Mode::Ideal) {
        auto q = g.qubits();
        s.block({q.begin(), q.end()}, ideal_level1_unitary(arch.jxy, axis, t.value()), t.scaled(Rational(2)));
        return;
    }
    for (int rep = 0; rep < 2; rep++) {
        s.local(g.star_left, gates::pauli(axis));
        s.local(g.star_right, gates::pauli(axis));
        s.evolve(t);
    }
}

void append_level2(PulseSchedule &s, const ExchangeChain &arch, const ExchangeGroup &g, StarDotPair pair, Axis axis,
                   const SynthesisParams &params) {
    size_t other_star = pair.star == g.star_left ? g.star_right : g.star_left;
    for (int rep = 0; rep < 2; rep++) {
        s.local(other_star, gates::pauli(Axis::Z));
        append_level1(s, arch, g, axis, params);
    }
}

}  // namespace

void SynthesisParams::validate() const {
    if (n_reps < 1) {
        throw std::invalid_argument("synthesis repetition count N must be at least 1");
    }
}

SymbolicReal SynthesisParams::base_dt(double jxy) const {
    validate();
    return SymbolicReal::pi_multiple(Rational(1, 32 * static_cast<std::int64_t>(n_reps)), jxy);
}

ExchangeGroup exchange_group(const ExchangeChain &arch, size_t isolator) {
    arch.validate();
    if (isolator + 1 >= arch.n_logical) {
        throw std::invalid_argument(
            "isolator " + std::to_string(isolator) + " has no star on its right; two-bit synthesis needs both");
    }
    return {arch.star(isolator), arch.star(isolator + 1), arch.dot1(isolator), arch.dot2(isolator)};
}

ExchangeGroup group_of(const ExchangeChain &arch, StarDotPair pair) {
    if (pair.dot >= arch.n_physical() || pair.dot % 3 == 0) {
        throw std::invalid_argument("qubit " + std::to_string(pair.dot) + " is not an isolator dot");
    }
    ExchangeGroup g = exchange_group(arch, pair.dot / 3);
    if (pair.star != g.star_left && pair.star != g.star_right) {
        throw std::invalid_argument("pair (" + pair_name(pair) + ") is not a star-dot edge of one group");
    }
    return g;
}

Matrix ideal_level1_unitary(double jxy, Axis axis, double t) {
    PauliSum h(4);
    for (size_t star : {size_t{0}, size_t{3}}) {
        for (size_t dot : {size_t{1}, size_t{2}}) {
            h.add(PauliTerm(2 * jxy, {{star, axis}, {dot, axis}}));
        }
    }
    return unitary_of_evolution(h, t).matrix();
}

PulseSchedule synth_block(const ExchangeChain &arch, StarDotPair pair, Axis axis, const SynthesisParams &params) {
    params.validate();
    if (axis == Axis::Z) {
        throw std::invalid_argument("selective coupling synthesizes xx or yy only");
    }
    ExchangeGroup g = group_of(arch, pair);
    size_t other_dot = pair.dot == g.dot1 ? g.dot2 : g.dot1;
    PulseSchedule s(std::string("synth_") + axis_name(axis) + axis_name(axis) + "_block(" + pair_name(pair) + ")");
    for (int rep = 0; rep < 2; rep++) {
        s.local(other_dot, gates::pauli(Axis::Z));
        append_level2(s, arch, g, pair, axis, params);
    }
    return s;
}

PulseSchedule synth_xx_block(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params) {
    return synth_block(arch, pair, Axis::X, params);
}

PulseSchedule synth_swap(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params) {
    PulseSchedule xx = synth_block(arch, pair, Axis::X, params);
    PulseSchedule yy = synth_block(arch, pair, Axis::Y, params);
    PulseSchedule s("synth_swap(" + pair_name(pair) + ", N=" + std::to_string(params.n_reps) + ")");
    for (size_t rep = 0; rep < params.n_reps; rep++) {
        s.append(xx);
        s.append(yy);
    }
    return s;
}

PulseSchedule synth_xx_quarter(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params) {
    PulseSchedule xx = synth_block(arch, pair, Axis::X, params);
    PulseSchedule s("synth_xx_quarter(" + pair_name(pair) + ", N=" + std::to_string(params.n_reps) + ")");
    for (size_t rep = 0; rep < params.n_reps; rep++) {
        s.append(xx);
    }
    return s;
}

PulseSchedule cphase_logical_exchange(const ExchangeChain &arch, size_t k, size_t k2, const SynthesisParams &params) {
    arch.validate();
    if (k >= arch.n_logical || k2 >= arch.n_logical) {
        throw std::out_of_range("logical index out of range for the chain");
    }
    if (k + 1 != k2 && k2 + 1 != k) {
        throw std::invalid_argument(
            "logical bits " + std::to_string(k) + " and " + std::to_string(k2) + " are not adjacent");
    }
    ExchangeGroup g = exchange_group(arch, std::min(k, k2));
    const StarDotPair carrier{g.star_left, g.dot1};
    const StarDotPair middle{g.star_right, g.dot1};
    const SymbolicReal quarter_phase = SymbolicReal::pi_multiple(Rational(-1, 2));

    PulseSchedule swap = synth_swap(arch, carrier, params);
    PulseSchedule s("cphase_logical_exchange(" + std::to_string(k) + ", " + std::to_string(k2) +
                    ", N=" + std::to_string(params.n_reps) + ")");
    s.append(swap);
    s.local(g.dot1, gates::hadamard());
    s.local(g.star_right, gates::hadamard());
    s.append(synth_xx_quarter(arch, middle, params));
    s.local(g.dot1, gates::hadamard());
    s.local(g.star_right, gates::hadamard());
    s.rotation(g.dot1, Axis::Z, quarter_phase);
    s.rotation(g.star_right, Axis::Z, quarter_phase);
    s.append(swap);
    s.local(g.star_left, gates::pauli(Axis::Z));
    s.local(g.dot1, gates::pauli(Axis::Z));
    return s;
}

PulseSchedule local_logical_gate_exchange(const ExchangeChain &arch, size_t k, const Matrix2 &u) {
    arch.validate();
    detail::check_unitary_2x2(u);
    PulseSchedule s("local_logical_exchange(" + std::to_string(k) + ")");
    s.local(arch.star(k), u);
    return s;
}

}  // namespace ifs
