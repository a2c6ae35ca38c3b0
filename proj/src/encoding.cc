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

#include "ifs/encoding.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifs {

namespace {

/// Sparse physical expansion of one encoded basis state: (index, amplitude) pairs.
using Expansion = std::vector<std::pair<size_t, Complex>>;

Expansion codeword_diagonal(const DiagonalChain &arch, size_t logical_index) {
    size_t phys = 0;
    for (size_t k = 0; k < arch.n_logical; k++) {
        bool one = (logical_index >> k) & 1;
        phys |= size_t{one} << arch.qubit_a(k);
        phys |= size_t{!one} << arch.qubit_b(k);
    }
    return {{phys, 1.0}};
}

Expansion codeword_exchange(const ExchangeChain &arch, size_t logical_index) {
    const double s = 1.0 / std::sqrt(2.0);
    Expansion out{{0, 1.0}};
    for (size_t k = 0; k < arch.n_logical; k++) {
        size_t star_bit = ((logical_index >> k) & 1) << arch.star(k);
        size_t up_down = size_t{1} << arch.dot2(k);
        size_t down_up = size_t{1} << arch.dot1(k);
        Expansion next;
        next.reserve(out.size() * 2);
        for (const auto &[idx, amp] : out) {
            next.emplace_back(idx | star_bit | up_down, amp * s);
            next.emplace_back(idx | star_bit | down_up, -amp * s);
        }
        out = std::move(next);
    }
    return out;
}

void check_bits(std::span<const int> bits, size_t width) {
    if (bits.size() != width) {
        throw std::invalid_argument(
            "expected " + std::to_string(width) + " logical bits, got " + std::to_string(bits.size()));
    }
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("logical bit values must be 0 or 1");
        }
    }
}

}  // namespace

Vector singlet_pair() {
    Vector v = Vector::Zero(4);
    const double s = 1.0 / std::sqrt(2.0);
    v[0b10] = s;   // dot1 up, dot2 down
    v[0b01] = -s;  // dot1 down, dot2 up
    return v;
}

CodeSpace::CodeSpace(Architecture arch) : arch_(std::move(arch)) {
    validate(arch_);
    const size_t phys_dim = size_t{1} << physical_qubit_count(arch_);
    const size_t ldim = logical_dim();
    embedding_ = Matrix::Zero(static_cast<Eigen::Index>(phys_dim), static_cast<Eigen::Index>(ldim));
    for (size_t j = 0; j < ldim; j++) {
        Expansion e = std::visit(
            [&](const auto &a) {
                if constexpr (std::is_same_v<std::decay_t<decltype(a)>, DiagonalChain>) {
                    return codeword_diagonal(a, j);
                } else {
                    return codeword_exchange(a, j);
                }
            },
            arch_);
        for (const auto &[idx, amp] : e) {
            embedding_(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(j)) = amp;
        }
    }
}

size_t CodeSpace::logical_width() const {
    return ifs::logical_width(arch_);
}

size_t CodeSpace::readout_qubit(size_t k) const {
    if (const auto *d = std::get_if<DiagonalChain>(&arch_)) {
        return d->qubit_a(k);
    }
    return std::get<ExchangeChain>(arch_).star(k);
}

StateVector CodeSpace::encode(std::span<const int> bits) const {
    check_bits(bits, logical_width());
    size_t j = 0;
    for (size_t k = 0; k < bits.size(); k++) {
        j |= static_cast<size_t>(bits[k]) << k;
    }
    return StateVector::from_amplitudes(physical_qubit_count(arch_), embedding_.col(static_cast<Eigen::Index>(j)));
}

StateVector CodeSpace::encode_logical(const Vector &logical_amplitudes) const {
    if (static_cast<size_t>(logical_amplitudes.size()) != logical_dim()) {
        throw std::invalid_argument("logical amplitude vector has the wrong length");
    }
    return StateVector::from_amplitudes(physical_qubit_count(arch_), embedding_ * logical_amplitudes);
}

Vector CodeSpace::logical_amplitudes(const StateVector &state) const {
    if (state.dim() != static_cast<size_t>(embedding_.rows())) {
        throw std::invalid_argument("state dimension does not match the code space");
    }
    return embedding_.adjoint() * state.amplitudes();
}

double CodeSpace::leakage(const StateVector &state) const {
    double kept = logical_amplitudes(state).squaredNorm();
    return std::clamp(1.0 - kept, 0.0, 1.0);
}

LogicalRegister encode_diagonal(std::span<const int> bits, const DiagonalChain &arch) {
    CodeSpace code(arch);
    return {arch, code.encode(bits)};
}

LogicalRegister encode_exchange(std::span<const int> bits, const ExchangeChain &arch) {
    CodeSpace code(arch);
    return {arch, code.encode(bits)};
}

LogicalRegister encode(std::span<const int> bits, const Architecture &arch) {
    CodeSpace code(arch);
    return {arch, code.encode(bits)};
}

double annihilation_residual(const PauliSum &h, const StateVector &state) {
    if (h.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("operator and state sizes differ");
    }
    if (h.terms().empty()) {
        return 0.0;
    }
    return (matrix_of(h).matrix() * state.amplitudes()).norm();
}

double leakage(const StateVector &state, const Architecture &arch) {
    return CodeSpace(arch).leakage(state);
}

PulseSchedule init_schedule_diagonal(const DiagonalChain &arch) {
    arch.validate();
    PulseSchedule s("init_diagonal");
    for (size_t k = 0; k < arch.n_logical; k++) {
        s.local(arch.qubit_b(k), gates::pauli(Axis::X));
    }
    return s;
}

ReadoutResult logical_readout(const LogicalRegister &reg, size_t k, std::uint64_t rng_seed) {
    if (k >= reg.width()) {
        throw std::out_of_range(
            "logical index " + std::to_string(k) + " out of range for width " + std::to_string(reg.width()));
    }
    CodeSpace code(reg.arch);
    auto m = measure_z(reg.state, code.readout_qubit(k), rng_seed);
    return {m.outcome, LogicalRegister{reg.arch, std::move(m.post_state)}};
}

}  // namespace ifs
