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

#include "ifs/schedule.h"

#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ifs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double UNITARY_TOL = 1e-10;

/// Shared machinery for execute / schedule_unitary / apply_schedule.
class Executor {
   public:
    Executor(const PulseSchedule &sched, const Architecture &arch) : sched_(sched), arch_(arch) {
        validate(arch_);
        n_qubits_ = physical_qubit_count(arch_);
        check_instructions();
    }

    void run(Matrix &columns, std::mt19937_64 *rng) {
        if (static_cast<size_t>(columns.rows()) != (size_t{1} << n_qubits_)) {
            throw std::invalid_argument("state dimension does not match the architecture");
        }
        for (const auto &inst : sched_.instructions()) {
            std::visit(
                overloaded{
                    [&](const LocalRotation &r) {
                        detail::apply_1q(columns, r.qubit, gates::rotation(r.axis, r.angle.value()));
                    },
                    [&](const LocalUnitary &u) { detail::apply_1q(columns, u.qubit, u.matrix); },
                    [&](const Evolve &e) {
                        double t = e.duration.value();
                        if (t == 0) {
                            return;
                        }
                        columns = propagator_for(t) * columns;
                    },
                    [&](const MeasureZ &m) {
                        if (rng == nullptr || columns.cols() != 1) {
                            throw std::invalid_argument("schedule contains a measurement; it has no unitary");
                        }
                        Vector amps = columns.col(0);
                        double p1 = detail::probability_one(amps, m.qubit);
                        double r = std::uniform_real_distribution<double>(0.0, 1.0)(*rng);
                        detail::collapse_z(amps, m.qubit, r < p1 ? 1 : 0);
                        columns.col(0) = amps;
                    },
                    [&](const BlockUnitary &b) { detail::apply_kq(columns, b.qubits, b.matrix); },
                },
                inst);
        }
    }

   private:
    void check_instructions() const {
        size_t index = 0;
        for (const auto &inst : sched_.instructions()) {
            std::string where = "instruction " + std::to_string(index++) + ": ";
            std::visit(
                overloaded{
                    [&](const LocalRotation &r) { check_index(r.qubit, where); },
                    [&](const LocalUnitary &u) {
                        check_index(u.qubit, where);
                        double res = unitarity_residual(Matrix(u.matrix));
                        if (!(res <= UNITARY_TOL)) {
                            throw std::invalid_argument(where + "local gate is not unitary (residual " +
                                                        std::to_string(res) + ")");
                        }
                    },
                    [&](const Evolve &e) {
                        if (!(e.duration.value() >= 0)) {
                            throw std::invalid_argument(where + "negative evolve duration");
                        }
                    },
                    [&](const MeasureZ &m) { check_index(m.qubit, where); },
                    [&](const BlockUnitary &b) {
                        for (size_t q : b.qubits) {
                            check_index(q, where);
                        }
                        double res = unitarity_residual(b.matrix);
                        if (!(res <= UNITARY_TOL)) {
                            throw std::invalid_argument(where + "block is not unitary (residual " +
                                                        std::to_string(res) + ")");
                        }
                    },
                },
                inst);
        }
    }

    void check_index(size_t q, const std::string &where) const {
        if (q >= n_qubits_) {
            throw std::out_of_range(where + "qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(n_qubits_) + " physical qubits");
        }
    }

    const Matrix &propagator_for(double t) {
        auto it = cache_.find(t);
        if (it != cache_.end()) {
            return it->second;
        }
        if (!propagator_) {
            propagator_ = std::make_unique<Propagator>(build_hamiltonian(arch_));
        }
        return cache_.emplace(t, propagator_->unitary(t)).first->second;
    }

    const PulseSchedule &sched_;
    const Architecture &arch_;
    size_t n_qubits_ = 0;
    std::unique_ptr<Propagator> propagator_;
    std::map<double, Matrix> cache_;
};

nlohmann::json complex_to_json(Complex c) {
    return nlohmann::json::array({hex_double(c.real()), hex_double(c.imag())});
}

double json_number(const nlohmann::json &v, const std::string &where) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        try {
            return parse_double(v.get<std::string>());
        } catch (const std::exception &e) {
            throw ScheduleFormatError(where + ": " + e.what());
        }
    }
    throw ScheduleFormatError(where + ": expected a number");
}

Matrix matrix_from_json(const nlohmann::json &v, size_t dim, const std::string &where) {
    if (!v.is_array() || v.size() != dim * dim) {
        throw ScheduleFormatError(where + ": expected " + std::to_string(dim * dim) + " matrix entries");
    }
    Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim * dim; i++) {
        const auto &e = v[i];
        std::string at = where + "[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) {
            throw ScheduleFormatError(at + ": expected [re, im]");
        }
        m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
            Complex(json_number(e[0], at), json_number(e[1], at));
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix &m) {
    auto out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out.push_back(complex_to_json(m(r, c)));
        }
    }
    return out;
}

const nlohmann::json &field(const nlohmann::json &obj, const char *name, const std::string &where) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ScheduleFormatError(where + ": missing field '" + name + "'");
    }
    return *it;
}

size_t qubit_field(const nlohmann::json &obj, const std::string &where) {
    const auto &v = field(obj, "qubit", where);
    if (!v.is_number_unsigned()) {
        throw ScheduleFormatError(where + ".qubit: expected a non-negative integer");
    }
    return v.get<size_t>();
}

SymbolicReal symbolic_field(const nlohmann::json &obj, const char *name, const std::string &where) {
    const auto &v = field(obj, name, where);
    try {
        if (v.is_number()) {
            return SymbolicReal::raw(v.get<double>());
        }
        if (v.is_string()) {
            return SymbolicReal::parse(v.get<std::string>());
        }
    } catch (const std::exception &e) {
        throw ScheduleFormatError(where + "." + name + ": " + e.what());
    }
    throw ScheduleFormatError(where + "." + name + ": expected a string or number");
}

}  // namespace

PulseSchedule::PulseSchedule(std::string label, std::vector<Instruction> instructions)
    : label_(std::move(label)), instructions_(std::move(instructions)) {
}

PulseSchedule &PulseSchedule::rotation(size_t qubit, Axis axis, SymbolicReal angle) {
    instructions_.emplace_back(LocalRotation{qubit, axis, angle});
    return *this;
}

PulseSchedule &PulseSchedule::local(size_t qubit, const Matrix2 &u) {
    instructions_.emplace_back(LocalUnitary{qubit, u});
    return *this;
}

PulseSchedule &PulseSchedule::evolve(SymbolicReal duration) {
    if (!(duration.value() >= 0)) {
        throw std::invalid_argument("evolve duration must be non-negative");
    }
    instructions_.emplace_back(Evolve{duration});
    return *this;
}

PulseSchedule &PulseSchedule::measure(size_t qubit) {
    instructions_.emplace_back(MeasureZ{qubit});
    return *this;
}

PulseSchedule &PulseSchedule::block(std::vector<size_t> qubits, Matrix u, SymbolicReal duration) {
    instructions_.emplace_back(BlockUnitary{std::move(qubits), std::move(u), duration});
    return *this;
}

PulseSchedule &PulseSchedule::append(const Instruction &inst) {
    instructions_.push_back(inst);
    return *this;
}

PulseSchedule &PulseSchedule::append(const PulseSchedule &other) {
    instructions_.insert(instructions_.end(), other.instructions_.begin(), other.instructions_.end());
    return *this;
}

PulseSchedule PulseSchedule::with_label(std::string label) const {
    PulseSchedule s = *this;
    s.label_ = std::move(label);
    return s;
}

bool PulseSchedule::has_measurements() const {
    for (const auto &inst : instructions_) {
        if (std::holds_alternative<MeasureZ>(inst)) {
            return true;
        }
    }
    return false;
}

PulseSchedule operator+(const PulseSchedule &first, const PulseSchedule &second) {
    PulseSchedule s = first;
    s.append(second);
    return s;
}

std::string CostReport::str() const {
    std::ostringstream out;
    out << "locals=" << local_gate_count << " evolves=" << evolve_count;
    if (block_count) {
        out << " blocks=" << block_count;
    }
    if (measure_count) {
        out << " measurements=" << measure_count;
    }
    out << " interaction_time=" << total_evolve_time;
    if (exact_evolve_time) {
        out << " (" << exact_evolve_time->str() << ")";
    }
    return out.str();
}

CostReport accounting(const PulseSchedule &sched) {
    CostReport report;
    std::vector<SymbolicReal> durations;
    std::vector<double> values;
    for (const auto &inst : sched.instructions()) {
        std::visit(
            overloaded{
                [&](const LocalRotation &) { report.local_gate_count++; },
                [&](const LocalUnitary &) { report.local_gate_count++; },
                [&](const Evolve &e) {
                    report.evolve_count++;
                    durations.push_back(e.duration);
                    values.push_back(e.duration.value());
                },
                [&](const MeasureZ &) { report.measure_count++; },
                [&](const BlockUnitary &b) {
                    report.block_count++;
                    durations.push_back(b.duration);
                    values.push_back(b.duration.value());
                },
            },
            inst);
    }
    report.total_evolve_time = compensated_sum(values);
    report.exact_evolve_time = exact_sum(durations);
    return report;
}

StateVector execute(
    const PulseSchedule &sched, const Architecture &arch, const StateVector &initial, std::uint64_t rng_seed) {
    Executor exec(sched, arch);
    Matrix columns = initial.amplitudes();
    std::mt19937_64 rng(rng_seed);
    exec.run(columns, &rng);
    return StateVector::from_amplitudes(initial.n_qubits(), columns.col(0));
}

Matrix apply_schedule(const PulseSchedule &sched, const Architecture &arch, Matrix columns) {
    if (sched.has_measurements()) {
        throw std::invalid_argument("schedule contains a measurement; it has no unitary");
    }
    Executor exec(sched, arch);
    exec.run(columns, nullptr);
    return columns;
}

DenseOperator schedule_unitary(const PulseSchedule &sched, const Architecture &arch) {
    auto id = DenseOperator::identity(physical_qubit_count(arch));
    return DenseOperator(apply_schedule(sched, arch, id.matrix()));
}

nlohmann::json serialize(const PulseSchedule &sched) {
    auto list = nlohmann::json::array();
    for (const auto &inst : sched.instructions()) {
        nlohmann::json j;
        std::visit(
            overloaded{
                [&](const LocalRotation &r) {
                    j = {{"kind", "rotation"},
                         {"qubit", r.qubit},
                         {"axis", std::string(1, axis_name(r.axis))},
                         {"angle", r.angle.str()}};
                },
                [&](const LocalUnitary &u) {
                    j = {{"kind", "unitary"}, {"qubit", u.qubit}, {"matrix", matrix_to_json(Matrix(u.matrix))}};
                },
                [&](const Evolve &e) { j = {{"kind", "evolve"}, {"duration", e.duration.str()}}; },
                [&](const MeasureZ &m) { j = {{"kind", "measure"}, {"qubit", m.qubit}}; },
                [&](const BlockUnitary &b) {
                    j = {{"kind", "block"},
                         {"qubits", b.qubits},
                         {"duration", b.duration.str()},
                         {"matrix", matrix_to_json(b.matrix)}};
                },
            },
            inst);
        list.push_back(std::move(j));
    }
    return {{"label", sched.label()}, {"instructions", std::move(list)}};
}

PulseSchedule deserialize(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ScheduleFormatError("schedule document: expected an object");
    }
    std::string label;
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) {
            throw ScheduleFormatError("label: expected a string");
        }
        label = it->get<std::string>();
    }
    const auto &list = field(doc, "instructions", "schedule document");
    if (!list.is_array()) {
        throw ScheduleFormatError("instructions: expected an array");
    }
    PulseSchedule sched(label);
    for (size_t i = 0; i < list.size(); i++) {
        const auto &j = list[i];
        std::string where = "instructions[" + std::to_string(i) + "]";
        if (!j.is_object()) {
            throw ScheduleFormatError(where + ": expected an object");
        }
        const auto &kind_v = field(j, "kind", where);
        if (!kind_v.is_string()) {
            throw ScheduleFormatError(where + ".kind: expected a string");
        }
        std::string kind = kind_v.get<std::string>();
        if (kind == "rotation") {
            const auto &axis_v = field(j, "axis", where);
            Axis axis;
            try {
                axis = parse_axis(axis_v.is_string() ? axis_v.get<std::string>() : std::string{});
            } catch (const std::exception &e) {
                throw ScheduleFormatError(where + ".axis: " + e.what());
            }
            sched.rotation(qubit_field(j, where), axis, symbolic_field(j, "angle", where));
        } else if (kind == "unitary") {
            Matrix m = matrix_from_json(field(j, "matrix", where), 2, where + ".matrix");
            sched.local(qubit_field(j, where), Matrix2(m));
        } else if (kind == "evolve") {
            auto d = symbolic_field(j, "duration", where);
            if (!(d.value() >= 0)) {
                throw ScheduleFormatError(where + ".duration: must be non-negative");
            }
            sched.evolve(d);
        } else if (kind == "measure") {
            sched.measure(qubit_field(j, where));
        } else if (kind == "block") {
            const auto &qs = field(j, "qubits", where);
            if (!qs.is_array()) {
                throw ScheduleFormatError(where + ".qubits: expected an array");
            }
            std::vector<size_t> qubits;
            for (const auto &q : qs) {
                if (!q.is_number_unsigned()) {
                    throw ScheduleFormatError(where + ".qubits: expected non-negative integers");
                }
                qubits.push_back(q.get<size_t>());
            }
            Matrix m = matrix_from_json(field(j, "matrix", where), size_t{1} << qubits.size(), where + ".matrix");
            sched.block(std::move(qubits), std::move(m), symbolic_field(j, "duration", where));
        } else {
            throw ScheduleFormatError(where + ".kind: unknown instruction tag '" + kind + "'");
        }
    }
    return sched;
}

std::string serialize_text(const PulseSchedule &sched) {
    return serialize(sched).dump(2) + "\n";
}

PulseSchedule deserialize_text(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ScheduleFormatError("malformed schedule document at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return deserialize(doc);
}

}  // namespace ifs
