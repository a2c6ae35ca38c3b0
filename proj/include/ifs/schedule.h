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

#ifndef IFS_SCHEDULE_H
#define IFS_SCHEDULE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ifs/model.h"
#include "ifs/statevector.h"
#include "ifs/symbolic.h"

namespace ifs {

/// exp(-i (angle/2) sigma^axis) on one qubit, instantaneous.
struct LocalRotation {
    size_t qubit;
    Axis axis;
    SymbolicReal angle;
};

/// Arbitrary 2x2 unitary on one qubit, instantaneous.
struct LocalUnitary {
    size_t qubit;
    Matrix2 matrix;
};

/// Free evolution under the architecture's full always-on Hamiltonian.
struct Evolve {
    SymbolicReal duration;
};

struct MeasureZ {
    size_t qubit;
};

/// An ideal multi-qubit unitary standing in for a synthesized segment whose
/// interaction time is `duration`. Used to isolate synthesis error.
struct BlockUnitary {
    std::vector<size_t> qubits;
    Matrix matrix;
    SymbolicReal duration;
};

using Instruction = std::variant<LocalRotation, LocalUnitary, Evolve, MeasureZ, BlockUnitary>;

class PulseSchedule {
   public:
    PulseSchedule() = default;
    explicit PulseSchedule(std::string label, std::vector<Instruction> instructions = {});

    const std::string &label() const {
        return label_;
    }
    const std::vector<Instruction> &instructions() const {
        return instructions_;
    }
    size_t size() const {
        return instructions_.size();
    }
    bool empty() const {
        return instructions_.empty();
    }

    PulseSchedule &rotation(size_t qubit, Axis axis, SymbolicReal angle);
    PulseSchedule &local(size_t qubit, const Matrix2 &u);
    PulseSchedule &evolve(SymbolicReal duration);
    PulseSchedule &measure(size_t qubit);
    PulseSchedule &block(std::vector<size_t> qubits, Matrix u, SymbolicReal duration);
    PulseSchedule &append(const Instruction &inst);
    PulseSchedule &append(const PulseSchedule &other);

    PulseSchedule with_label(std::string label) const;
    bool has_measurements() const;

   private:
    std::string label_;
    std::vector<Instruction> instructions_;
};

/// Concatenation: `first` runs, then `second`.
PulseSchedule operator+(const PulseSchedule &first, const PulseSchedule &second);

struct CostReport {
    size_t local_gate_count = 0;
    size_t evolve_count = 0;
    size_t block_count = 0;
    size_t measure_count = 0;
    /// Compensated sum of Evolve (and BlockUnitary) durations.
    double total_evolve_time = 0.0;
    /// Present when every duration is a pi multiple with one common scale.
    std::optional<SymbolicReal> exact_evolve_time;

    std::string str() const;
};

CostReport accounting(const PulseSchedule &sched);

/// Runs the schedule from `initial`: locals are instantaneous, Evolve applies
/// exp(-i H_arch t) with the full chain Hamiltonian, measurements collapse
/// using an engine seeded once with `rng_seed`.
StateVector execute(
    const PulseSchedule &sched, const Architecture &arch, const StateVector &initial, std::uint64_t rng_seed = 0);

/// Ordered product of the instruction unitaries. Rejects measurements.
DenseOperator schedule_unitary(const PulseSchedule &sched, const Architecture &arch);

/// Applies a measurement-free schedule to every column of `columns`.
Matrix apply_schedule(const PulseSchedule &sched, const Architecture &arch, Matrix columns);

/// Malformed schedule document; the message names the offending position.
class ScheduleFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json serialize(const PulseSchedule &sched);
PulseSchedule deserialize(const nlohmann::json &doc);
std::string serialize_text(const PulseSchedule &sched);
PulseSchedule deserialize_text(const std::string &text);

}  // namespace ifs

#endif
