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

#ifndef IFS_ENCODING_H
#define IFS_ENCODING_H

#include <cstdint>
#include <span>
#include <vector>

#include "ifs/model.h"
#include "ifs/schedule.h"
#include "ifs/statevector.h"

namespace ifs {

// Spin up is computational 0 on every physical qubit.
//
// Diagonal code, per logical bit:   |0>_L = |up_a down_b>,  |1>_L = |down_a up_b>
// Exchange code, per logical bit:   |s>_L = |s>_star (x) (|up down> - |down up>)/sqrt(2)

/// Physical amplitudes of the two-dot singlet, indexed by (dot1 bit) | (dot2 bit) << 1.
Vector singlet_pair();

/// The code space of an architecture: the tensor product of the per-bit codes.
class CodeSpace {
   public:
    explicit CodeSpace(Architecture arch);

    const Architecture &architecture() const {
        return arch_;
    }
    size_t logical_width() const;
    size_t logical_dim() const {
        return size_t{1} << logical_width();
    }
    /// phys_dim x logical_dim isometry; column j encodes the logical basis
    /// state whose bit k is bit k of j.
    const Matrix &embedding() const {
        return embedding_;
    }
    /// Physical qubit read out for logical bit k (qubit a, or the star).
    size_t readout_qubit(size_t k) const;

    StateVector encode(std::span<const int> bits) const;
    StateVector encode_logical(const Vector &logical_amplitudes) const;
    /// E^dag psi.
    Vector logical_amplitudes(const StateVector &state) const;
    /// 1 - ||P psi||^2 with P the projector onto the code space.
    double leakage(const StateVector &state) const;

   private:
    Architecture arch_;
    Matrix embedding_;
};

struct LogicalRegister {
    Architecture arch;
    StateVector state;

    size_t width() const {
        return logical_width(arch);
    }
};

LogicalRegister encode_diagonal(std::span<const int> bits, const DiagonalChain &arch);
LogicalRegister encode_exchange(std::span<const int> bits, const ExchangeChain &arch);
LogicalRegister encode(std::span<const int> bits, const Architecture &arch);

/// ||H psi||. Zero certifies that psi lies in the interaction-free subspace of h.
double annihilation_residual(const PauliSum &h, const StateVector &state);

double leakage(const StateVector &state, const Architecture &arch);

/// Maps the all-up product state to the all-zeros encoded register by flipping
/// qubit b of every logical bit.
PulseSchedule init_schedule_diagonal(const DiagonalChain &arch);

struct ReadoutResult {
    int bit;
    LogicalRegister post;
};

/// Measures qubit a (diagonal) or the star (exchange) of logical bit k.
ReadoutResult logical_readout(const LogicalRegister &reg, size_t k, std::uint64_t rng_seed);

}  // namespace ifs

#endif
