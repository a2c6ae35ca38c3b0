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

#ifndef IFS_MODEL_H
#define IFS_MODEL_H

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "ifs/statevector.h"

namespace ifs {

/// Chain of two-qubit encoded bits under always-on Ising couplings.
///
/// Logical bit k occupies physical qubits a = 2k and b = 2k + 1. The pair
/// (a, b) is coupled with j0; every physical qubit of bit k is coupled to
/// every physical qubit of bit k + 1 with j1.
struct DiagonalChain {
    size_t n_logical = 1;
    double j0 = 1.0;
    double j1 = 1.0;
    /// Optional per-edge couplings keyed by (lower, higher) physical index.
    /// Empty means uniform couplings.
    std::map<std::pair<size_t, size_t>, double> edge_overrides;

    size_t n_physical() const {
        return 2 * n_logical;
    }
    size_t qubit_a(size_t k) const;
    size_t qubit_b(size_t k) const;
    double coupling(size_t p, size_t q, double nominal) const;
    void validate() const;
};

/// Chain of star qubits separated by two-dot isolators under always-on
/// exchange couplings jxy (xx + yy) and jz (zz).
///
/// Logical bit k occupies star q_k = 3k and isolator dots 3k + 1, 3k + 2.
/// Isolator k sits between star k and star k + 1; the last bit carries a
/// trailing isolator. Each star couples to both dots of each adjacent isolator.
struct ExchangeChain {
    size_t n_logical = 1;
    double jxy = 1.0;
    double jz = 0.0;

    size_t n_physical() const {
        return 3 * n_logical;
    }
    size_t star(size_t k) const;
    size_t dot1(size_t k) const;
    size_t dot2(size_t k) const;
    void validate() const;
};

using Architecture = std::variant<DiagonalChain, ExchangeChain>;

size_t physical_qubit_count(const Architecture &arch);
size_t logical_width(const Architecture &arch);
void validate(const Architecture &arch);
std::string describe(const Architecture &arch);

/// Computation-phase Hamiltonian of the whole chain.
PauliSum build_hamiltonian(const DiagonalChain &arch);
PauliSum build_hamiltonian(const ExchangeChain &arch);
PauliSum build_hamiltonian(const Architecture &arch);

/// j0 sigma^z_a sigma^z_b of one encoded bit.
PauliSum intra_bit_terms(const DiagonalChain &arch, size_t k);
/// Couplings of star k to its own (right-hand) isolator k.
PauliSum intra_bit_terms(const ExchangeChain &arch, size_t k);

/// Cross couplings between adjacent encoded bits k and k2 (|k - k2| == 1).
/// Diagonal: j1 (Z_a + Z_b)(Z_a' + Z_b'), 4 terms.
/// Exchange: the right-hand star against the shared isolator, 6 terms.
PauliSum interaction_between(const DiagonalChain &arch, size_t k, size_t k2);
PauliSum interaction_between(const ExchangeChain &arch, size_t k, size_t k2);
PauliSum interaction_between(const Architecture &arch, size_t k, size_t k2);

/// Star `star` against both dots of isolator `isolator`, on the full chain register.
PauliSum star_isolator_coupling(const ExchangeChain &arch, size_t star_index, size_t isolator);

/// Dot-dot coupling used only during initialization, on a 2-qubit register.
PauliSum isolator_pair_hamiltonian(double jxy, double jz);

}  // namespace ifs

#endif
