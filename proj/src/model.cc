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

#include "ifs/model.h"

#include <sstream>
#include <stdexcept>

namespace ifs {

namespace {

void check_logical(size_t k, size_t n_logical) {
    if (k >= n_logical) {
        throw std::out_of_range(
            "logical index " + std::to_string(k) + " out of range for " + std::to_string(n_logical) + " bits");
    }
}

void check_adjacent(size_t k, size_t k2, size_t n_logical) {
    check_logical(k, n_logical);
    check_logical(k2, n_logical);
    if (k + 1 != k2 && k2 + 1 != k) {
        throw std::invalid_argument(
            "logical bits " + std::to_string(k) + " and " + std::to_string(k2) + " are not adjacent");
    }
}

void add_exchange_edge(PauliSum &h, size_t p, size_t q, double jxy, double jz) {
    h.add(PauliTerm(jxy, {{p, Axis::X}, {q, Axis::X}}));
    h.add(PauliTerm(jxy, {{p, Axis::Y}, {q, Axis::Y}}));
    h.add(PauliTerm(jz, {{p, Axis::Z}, {q, Axis::Z}}));
}

}  // namespace

size_t DiagonalChain::qubit_a(size_t k) const {
    check_logical(k, n_logical);
    return 2 * k;
}

size_t DiagonalChain::qubit_b(size_t k) const {
    check_logical(k, n_logical);
    return 2 * k + 1;
}

double DiagonalChain::coupling(size_t p, size_t q, double nominal) const {
    auto it = edge_overrides.find({std::min(p, q), std::max(p, q)});
    return it == edge_overrides.end() ? nominal : it->second;
}

void DiagonalChain::validate() const {
    if (n_logical < 1) {
        throw std::invalid_argument("diagonal chain needs at least one logical bit");
    }
    if (!(j0 > 0) || !(j1 > 0)) {
        throw std::invalid_argument("diagonal chain couplings j0 and j1 must be positive");
    }
    if (n_physical() > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("diagonal chain exceeds the dense simulation limit");
    }
}

size_t ExchangeChain::star(size_t k) const {
    check_logical(k, n_logical);
    return 3 * k;
}

size_t ExchangeChain::dot1(size_t k) const {
    check_logical(k, n_logical);
    return 3 * k + 1;
}

size_t ExchangeChain::dot2(size_t k) const {
    check_logical(k, n_logical);
    return 3 * k + 2;
}

void ExchangeChain::validate() const {
    if (n_logical < 1) {
        throw std::invalid_argument("exchange chain needs at least one logical bit");
    }
    if (!(jxy > 0)) {
        throw std::invalid_argument("exchange chain coupling jxy must be positive");
    }
    if (!(jz >= 0)) {
        throw std::invalid_argument("exchange chain coupling jz must be non-negative");
    }
    if (n_physical() > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("exchange chain exceeds the dense simulation limit");
    }
}

size_t physical_qubit_count(const Architecture &arch) {
    return std::visit([](const auto &a) { return a.n_physical(); }, arch);
}

size_t logical_width(const Architecture &arch) {
    return std::visit([](const auto &a) { return a.n_logical; }, arch);
}

void validate(const Architecture &arch) {
    std::visit([](const auto &a) { a.validate(); }, arch);
}

std::string describe(const Architecture &arch) {
    std::ostringstream out;
    if (const auto *d = std::get_if<DiagonalChain>(&arch)) {
        out << "diagonal(n_logical=" << d->n_logical << ", j0=" << d->j0 << ", j1=" << d->j1 << ")";
    } else {
        const auto &e = std::get<ExchangeChain>(arch);
        out << "exchange(n_logical=" << e.n_logical << ", jxy=" << e.jxy << ", jz=" << e.jz << ")";
    }
    return out.str();
}

PauliSum intra_bit_terms(const DiagonalChain &arch, size_t k) {
    PauliSum h(arch.n_physical());
    size_t a = arch.qubit_a(k);
    size_t b = arch.qubit_b(k);
    h.add(PauliTerm(arch.coupling(a, b, arch.j0), {{a, Axis::Z}, {b, Axis::Z}}));
    return h;
}

PauliSum interaction_between(const DiagonalChain &arch, size_t k, size_t k2) {
    check_adjacent(k, k2, arch.n_logical);
    size_t lo = std::min(k, k2);
    size_t hi = std::max(k, k2);
    PauliSum h(arch.n_physical());
    for (size_t p : {arch.qubit_a(lo), arch.qubit_b(lo)}) {
        for (size_t q : {arch.qubit_a(hi), arch.qubit_b(hi)}) {
            h.add(PauliTerm(arch.coupling(p, q, arch.j1), {{p, Axis::Z}, {q, Axis::Z}}));
        }
    }
    return h;
}

PauliSum build_hamiltonian(const DiagonalChain &arch) {
    arch.validate();
    PauliSum h(arch.n_physical());
    for (size_t k = 0; k < arch.n_logical; k++) {
        h.extend(intra_bit_terms(arch, k));
        if (k + 1 < arch.n_logical) {
            h.extend(interaction_between(arch, k, k + 1));
        }
    }
    return h;
}

PauliSum star_isolator_coupling(const ExchangeChain &arch, size_t star_index, size_t isolator) {
    check_logical(star_index, arch.n_logical);
    check_logical(isolator, arch.n_logical);
    if (star_index != isolator && star_index != isolator + 1) {
        throw std::invalid_argument(
            "star " + std::to_string(star_index) + " is not adjacent to isolator " + std::to_string(isolator));
    }
    PauliSum h(arch.n_physical());
    size_t q = arch.star(star_index);
    add_exchange_edge(h, q, arch.dot1(isolator), arch.jxy, arch.jz);
    add_exchange_edge(h, q, arch.dot2(isolator), arch.jxy, arch.jz);
    return h;
}

PauliSum intra_bit_terms(const ExchangeChain &arch, size_t k) {
    return star_isolator_coupling(arch, k, k);
}

PauliSum interaction_between(const ExchangeChain &arch, size_t k, size_t k2) {
    check_adjacent(k, k2, arch.n_logical);
    size_t lo = std::min(k, k2);
    return star_isolator_coupling(arch, lo + 1, lo);
}

PauliSum build_hamiltonian(const ExchangeChain &arch) {
    arch.validate();
    PauliSum h(arch.n_physical());
    for (size_t k = 0; k < arch.n_logical; k++) {
        h.extend(intra_bit_terms(arch, k));
        if (k + 1 < arch.n_logical) {
            h.extend(interaction_between(arch, k, k + 1));
        }
    }
    return h;
}

PauliSum build_hamiltonian(const Architecture &arch) {
    return std::visit([](const auto &a) { return build_hamiltonian(a); }, arch);
}

PauliSum interaction_between(const Architecture &arch, size_t k, size_t k2) {
    return std::visit([&](const auto &a) { return interaction_between(a, k, k2); }, arch);
}

PauliSum isolator_pair_hamiltonian(double jxy, double jz) {
    if (!(jxy > 0)) {
        throw std::invalid_argument("isolator coupling jxy must be positive");
    }
    PauliSum h(2);
    add_exchange_edge(h, 0, 1, jxy, jz);
    return h;
}

}  // namespace ifs
