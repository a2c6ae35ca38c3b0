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

#ifndef IFS_COMPILE_EXCHANGE_H
#define IFS_COMPILE_EXCHANGE_H

#include <array>

#include "ifs/model.h"
#include "ifs/schedule.h"
#include "ifs/symbolic.h"

namespace ifs {

/// How the innermost conjugation level is emitted.
enum class Level1Mode {
    /// Two Evolve(t) periods interleaved with pi pulses on both stars (Trotter step).
    Trotter,
    /// The exact target of that step as a BlockUnitary (isolates Trotter error).
    Ideal,
};

struct SynthesisParams {
    size_t n_reps = 32;
    Level1Mode level1 = Level1Mode::Trotter;

    void validate() const;
    /// pi / (32 N jxy), the duration of each Evolve.
    SymbolicReal base_dt(double jxy) const;
};

/// The four qubits around isolator k: stars k and k + 1 and the two dots.
struct ExchangeGroup {
    size_t star_left;
    size_t star_right;
    size_t dot1;
    size_t dot2;

    std::array<size_t, 4> qubits() const {
        return {star_left, dot1, dot2, star_right};
    }
};

ExchangeGroup exchange_group(const ExchangeChain &arch, size_t isolator);

/// A star-dot pair inside one group, by physical index.
struct StarDotPair {
    size_t star;
    size_t dot;
};

/// Group that contains the pair; throws if the star is not adjacent to the dot's isolator.
ExchangeGroup group_of(const ExchangeChain &arch, StarDotPair pair);

/// Three nested conjugations approximating exp(-i 8 jxy t sigma^a_s sigma^a_d), a in {x, y}:
///   level 1: exp(-iHt) A_q1 A_q2 exp(-iHt) A_q1 A_q2   ~ exp(-i 2 jxy t Sigma^a_q Sigma^a_i)
///   level 2: conjugate by Z on the other star          -> exp(-i 4 jxy t sigma^a_s Sigma^a_i)
///   level 3: conjugate by Z on the other dot           -> exp(-i 8 jxy t sigma^a_s sigma^a_d)
/// 22 locals and 8 Evolve(t). Levels 2 and 3 are exact.
PulseSchedule synth_block(const ExchangeChain &arch, StarDotPair pair, Axis axis, const SynthesisParams &params);
PulseSchedule synth_xx_block(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params);

/// N x (xx block, yy block) ~ exp(-i (XX + YY) pi/4) on the pair.
/// 44N locals, 16N evolves, interaction time pi/(2 jxy).
PulseSchedule synth_swap(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params);

/// N x xx block ~ exp(-i XX pi/4) on the pair. 22N locals, interaction time pi/(4 jxy).
PulseSchedule synth_xx_quarter(const ExchangeChain &arch, StarDotPair pair, const SynthesisParams &params);

/// Encoded CPHASE between adjacent bits k, k + 1 sharing isolator k:
/// swap(star_k, dot1) . [H H . xx-quarter(star_k+1, dot1) . H H . phases] . swap(star_k, dot1) . Z Z.
/// The trailing Z pair cancels the diag(1,-1,-1,1) left by the two iSWAP-type swaps.
/// Interaction time 5 pi/(4 jxy).
PulseSchedule cphase_logical_exchange(const ExchangeChain &arch, size_t k, size_t k2, const SynthesisParams &params);

/// Single-bit gates act directly on the star.
PulseSchedule local_logical_gate_exchange(const ExchangeChain &arch, size_t k, const Matrix2 &u);

/// The ideal level-1 target exp(-i 2 jxy t Sigma^a_q Sigma^a_i) on the group
/// qubits ordered as ExchangeGroup::qubits().
Matrix ideal_level1_unitary(double jxy, Axis axis, double t);

}  // namespace ifs

#endif
