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

#ifndef IFS_COMPILE_ISING_H
#define IFS_COMPILE_ISING_H

#include <span>

#include "ifs/model.h"
#include "ifs/schedule.h"
#include "ifs/symbolic.h"

namespace ifs {

// Gate lowering for the diagonal (Ising) chain. Every schedule assumes the
// neighbors of the bits it touches sit in the code space on entry; that is
// what makes the cross couplings vanish during each Evolve.

/// Relative phase `angle` between |0>_L and |1>_L (logical Rz up to global
/// phase): one z rotation on qubit a, or on qubit b with the angle negated.
PulseSchedule rz_logical(const DiagonalChain &arch, size_t k, SymbolicReal angle, bool on_b = false);

/// Physical CPHASE between the two qubits of one encoded bit:
/// Evolve(pi/(4 j0)) then exp(+i pi/4 Z_a) exp(+i pi/4 Z_b).
/// Equals e^{i pi/4} diag(1, 1, 1, -1) on (a, b).
PulseSchedule cphase_physical(const DiagonalChain &arch, size_t a, size_t b);

/// CNOT(a, b) H_a CNOT(a, b) with CNOT(a, b) = H_b CPHASE H_b.
/// 9 locals, 2 evolves, interaction time pi/(2 j0).
PulseSchedule hadamard_logical(const DiagonalChain &arch, size_t k);

/// Logical Hadamards on several pairwise non-adjacent bits at once, sharing
/// the two interaction periods.
PulseSchedule hadamard_logical_parallel(const DiagonalChain &arch, std::span<const size_t> ks);

/// Flip b of both bits, Evolve(pi/(16 j1)), exp(+i pi/8 Z) on all four
/// qubits, flip b back. 8 locals, 1 evolve.
PulseSchedule cphase_logical(const DiagonalChain &arch, size_t k, size_t k2);

/// H_L(target) CPHASE_L H_L(target). 26 locals, 5 evolves.
PulseSchedule cnot_logical(const DiagonalChain &arch, size_t control, size_t target);

}  // namespace ifs

#endif
