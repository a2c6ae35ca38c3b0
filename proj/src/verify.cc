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

#include "ifs/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ifs/compile_ising.h"

namespace ifs {

namespace {

constexpr Complex I_UNIT{0.0, 1.0};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

/// E^dag U E for a measurement-free schedule.
Matrix restricted_unitary(const PulseSchedule &sched, const Architecture &arch, const Matrix &embedding) {
    return embedding.adjoint() * apply_schedule(sched, arch, embedding);
}

/// Columns of the code embedding where logical bit k ranges over {0, 1} and
/// every other bit is fixed by `others` (bit j of `others` = logical bit j).
Matrix single_bit_embedding(const CodeSpace &code, size_t k, size_t others) {
    Matrix e(code.embedding().rows(), 2);
    size_t base = others & ~(size_t{1} << k);
    e.col(0) = code.embedding().col(static_cast<Eigen::Index>(base));
    e.col(1) = code.embedding().col(static_cast<Eigen::Index>(base | (size_t{1} << k)));
    return e;
}

std::vector<int> bits_of(size_t index, size_t width) {
    std::vector<int> bits(width);
    for (size_t k = 0; k < width; k++) {
        bits[k] = static_cast<int>((index >> k) & 1);
    }
    return bits;
}

/// Largest phase-aligned distance between restricted single-bit unitaries over
/// every configuration of the other logical bits.
double neighbor_spread(const PulseSchedule &sched, const CodeSpace &code, size_t k) {
    const size_t width = code.logical_width();
    Matrix reference;
    double spread = 0.0;
    for (size_t cfg = 0; cfg < (size_t{1} << width); cfg++) {
        if (cfg & (size_t{1} << k)) {
            continue;
        }
        Matrix m = restricted_unitary(sched, code.architecture(), single_bit_embedding(code, k, cfg));
        if (reference.size() == 0) {
            reference = m;
        } else {
            spread = std::max(spread, phase_aligned_distance(reference, m));
        }
    }
    return spread;
}

Matrix identity(size_t dim) {
    return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

PulseSchedule idle_schedule(double duration) {
    PulseSchedule s("idle");
    s.evolve(SymbolicReal::raw(duration));
    return s;
}

double exact_time_matches(const CostReport &cost, const SymbolicReal &expected) {
    return cost.exact_evolve_time && *cost.exact_evolve_time == expected ? 1.0 : 0.0;
}

}  // namespace

double operator_overlap(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("operator overlap between matrices of different shape");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double phase_aligned_distance(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("distance between matrices of different shape");
    }
    Complex tr = (a.adjoint() * b).trace();
    Complex phase = std::abs(tr) > 0 ? tr / std::abs(tr) : Complex(1.0);
    Matrix diff = b - phase * a;
    Eigen::JacobiSVD<Matrix> svd(diff);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

FidelityReport process_fidelity(
    const PulseSchedule &sched, const Architecture &arch, const Matrix &target, const Matrix &embedding,
    std::string target_label) {
    if (sched.has_measurements()) {
        throw std::invalid_argument("process fidelity needs a measurement-free schedule");
    }
    const auto d = embedding.cols();
    if (target.rows() != d || target.cols() != d) {
        throw std::invalid_argument(
            "target is " + std::to_string(target.rows()) + "x" + std::to_string(target.cols()) +
            " but the code has logical dimension " + std::to_string(d));
    }
    if (static_cast<size_t>(embedding.rows()) != (size_t{1} << physical_qubit_count(arch))) {
        throw std::invalid_argument("embedding does not match the architecture");
    }
    Matrix m = restricted_unitary(sched, arch, embedding);
    FidelityReport r;
    r.fidelity = std::clamp(operator_overlap(target, m), 0.0, 1.0);
    r.leakage = std::clamp(1.0 - m.squaredNorm() / static_cast<double>(d), 0.0, 1.0);
    r.cost = accounting(sched);
    r.target_label = std::move(target_label);
    r.params["architecture"] = describe(arch);
    r.params["schedule"] = sched.label();
    return r;
}

FidelityReport process_fidelity(
    const PulseSchedule &sched, const Architecture &arch, const Matrix &target, const CodeSpace &code,
    std::string target_label) {
    return process_fidelity(sched, arch, target, code.embedding(), std::move(target_label));
}

Matrix group_embedding(const ExchangeChain &arch, const ExchangeGroup &group) {
    arch.validate();
    const auto free = group.qubits();
    const size_t group_isolator = group.dot1 / 3;
    const size_t phys_dim = size_t{1} << arch.n_physical();
    const double s = 1.0 / std::sqrt(2.0);
    Matrix e = Matrix::Zero(static_cast<Eigen::Index>(phys_dim), 16);
    for (size_t c = 0; c < 16; c++) {
        std::vector<std::pair<size_t, Complex>> terms{{0, 1.0}};
        for (size_t i = 0; i < 4; i++) {
            if ((c >> i) & 1) {
                terms[0].first |= size_t{1} << free[i];
            }
        }
        for (size_t m = 0; m < arch.n_logical; m++) {
            if (m == group_isolator) {
                continue;
            }
            std::vector<std::pair<size_t, Complex>> next;
            for (const auto &[idx, amp] : terms) {
                next.emplace_back(idx | (size_t{1} << arch.dot2(m)), amp * s);
                next.emplace_back(idx | (size_t{1} << arch.dot1(m)), -amp * s);
            }
            terms = std::move(next);
        }
        for (const auto &[idx, amp] : terms) {
            e(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(c)) = amp;
        }
    }
    return e;
}

Matrix iswap_target() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = -I_UNIT;
    m(2, 1) = -I_UNIT;
    m(3, 3) = 1;
    return m;
}

Matrix xx_quarter_target() {
    Matrix m = Matrix::Zero(4, 4);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 4; i++) {
        m(i, i) = s;
        m(3 - i, i) = -I_UNIT * s;
    }
    return m;
}

Matrix cphase_target() {
    Matrix m = identity(4);
    m(3, 3) = -1;
    return m;
}

Matrix cnot_target(size_t control_bit, size_t target_bit) {
    if (control_bit > 1 || target_bit > 1 || control_bit == target_bit) {
        throw std::invalid_argument("cnot target expects bits {0, 1}");
    }
    Matrix m = Matrix::Zero(4, 4);
    for (size_t j = 0; j < 4; j++) {
        size_t i = ((j >> control_bit) & 1) ? j ^ (size_t{1} << target_bit) : j;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1;
    }
    return m;
}

Matrix logical_hadamard_target() {
    return Matrix(gates::hadamard());
}

Matrix lift_two_qubit(const Matrix &gate, size_t p, size_t q, size_t n) {
    if (gate.rows() != 4 || gate.cols() != 4 || p == q || p >= n || q >= n) {
        throw std::invalid_argument("bad two-qubit lift");
    }
    const size_t dim = size_t{1} << n;
    const size_t mask = (size_t{1} << p) | (size_t{1} << q);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            if ((i & ~mask) != (j & ~mask)) {
                continue;
            }
            size_t si = ((i >> p) & 1) | (((i >> q) & 1) << 1);
            size_t sj = ((j >> p) & 1) | (((j >> q) & 1) << 1);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                gate(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(sj));
        }
    }
    return m;
}

Matrix lift_one_qubit(const Matrix2 &gate, size_t p, size_t n) {
    Matrix m = identity(size_t{1} << n);
    detail::apply_1q(m, p, gate);
    return m;
}

double log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two matching points");
    }
    double mx = 0, my = 0;
    std::vector<double> lx, ly;
    for (size_t i = 0; i < x.size(); i++) {
        if (!(x[i] > 0) || !(y[i] > 0)) {
            throw std::invalid_argument("log-log fit needs positive values");
        }
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
        mx += lx.back();
        my += ly.back();
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    return sxy / sxx;
}

std::vector<TrotterSweep> trotter_sweep(
    const ExchangeChain &arch, StarDotPair pair, const std::vector<size_t> &ns, const std::vector<double> &jzs) {
    if (!std::is_sorted(ns.begin(), ns.end())) {
        throw std::invalid_argument("repetition counts must be sorted ascending");
    }
    std::vector<TrotterSweep> out;
    for (double jz : jzs) {
        ExchangeChain a = arch;
        a.jz = jz;
        a.validate();
        ExchangeGroup g = group_of(a, pair);
        Matrix embedding = group_embedding(a, g);
        auto q = g.qubits();
        auto pos = [&](size_t phys) { return static_cast<size_t>(std::find(q.begin(), q.end(), phys) - q.begin()); };
        Matrix target = lift_two_qubit(iswap_target(), pos(pair.star), pos(pair.dot), 4);

        TrotterSweep sweep;
        sweep.jz = jz;
        std::vector<double> xs, ys;
        for (size_t n : ns) {
            SynthesisParams params{n, Level1Mode::Trotter};
            PulseSchedule s = synth_swap(a, pair, params);
            Matrix m = restricted_unitary(s, a, embedding);
            TrotterSweepRow row;
            row.n_reps = n;
            row.error = 1.0 - std::min(1.0, operator_overlap(target, m));
            row.leakage = std::clamp(1.0 - m.squaredNorm() / 16.0, 0.0, 1.0);
            row.total_evolve_time = accounting(s).total_evolve_time;
            row.operator_distance = phase_aligned_distance(target, m);
            sweep.rows.push_back(row);
            xs.push_back(static_cast<double>(n));
            ys.push_back(std::max(row.error, 1e-300));
        }
        for (size_t i = 0; i + 1 < sweep.rows.size(); i++) {
            sweep.ratios.push_back(sweep.rows[i].error / sweep.rows[i + 1].error);
            if (sweep.rows[i + 1].error > sweep.rows[i].error) {
                sweep.monotone = false;
            }
        }
        sweep.slope = xs.size() >= 2 ? log_log_slope(xs, ys) : 0.0;
        out.push_back(std::move(sweep));
    }
    return out;
}

void Report::add(std::string suite, std::string case_name, std::string metric, double value, std::string threshold,
                 bool pass) {
    rows.push_back({std::move(suite), std::move(case_name), std::move(metric), value, std::move(threshold), pass});
}

void Report::at_most(const std::string &suite, const std::string &case_name, const std::string &metric, double value,
                     double limit) {
    add(suite, case_name, metric, value, "<= " + fmt_double(limit), value <= limit);
}

void Report::at_least(const std::string &suite, const std::string &case_name, const std::string &metric,
                      double value, double limit) {
    add(suite, case_name, metric, value, ">= " + fmt_double(limit), value >= limit);
}

void Report::within(const std::string &suite, const std::string &case_name, const std::string &metric, double value,
                    double lo, double hi) {
    add(suite, case_name, metric, value, "[" + fmt_double(lo) + ", " + fmt_double(hi) + "]", value >= lo && value <= hi);
}

void Report::merge(const Report &other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool Report::all_pass() const {
    return failures() == 0;
}

size_t Report::failures() const {
    return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow &r) { return !r.pass; }));
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "suite,case,metric,value,threshold,pass\n";
    for (const auto &r : rows) {
        out << csv_escape(r.suite) << ',' << csv_escape(r.case_name) << ',' << csv_escape(r.metric) << ','
            << fmt_double(r.value) << ',' << csv_escape(r.threshold) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

nlohmann::json Report::to_json() const {
    auto list = nlohmann::json::array();
    for (const auto &r : rows) {
        list.push_back({{"suite", r.suite},
                        {"case", r.case_name},
                        {"metric", r.metric},
                        {"value", r.value},
                        {"threshold", r.threshold},
                        {"pass", r.pass}});
    }
    return {{"pass", all_pass()}, {"failures", failures()}, {"rows", std::move(list)}};
}

Report invariance_suites(const Architecture &arch, const Thresholds &th) {
    validate(arch);
    const bool diagonal = std::holds_alternative<DiagonalChain>(arch);
    const std::string suite = diagonal ? "diagonal.invariance" : "exchange.invariance";
    const CodeSpace code(arch);
    const size_t width = code.logical_width();
    const size_t ldim = code.logical_dim();
    const PauliSum h = build_hamiltonian(arch);
    Report report;

    // Annihilation of every codeword product by every adjacent cross Hamiltonian.
    double worst = 0.0;
    for (size_t j = 0; j < ldim; j++) {
        auto bits = bits_of(j, width);
        StateVector psi = code.encode(bits);
        for (size_t k = 0; k + 1 < width; k++) {
            worst = std::max(worst, annihilation_residual(interaction_between(arch, k, k + 1), psi));
        }
    }
    report.at_most(suite, "all codeword products", "max annihilation residual", worst, th.algebraic);

    if (!diagonal) {
        // Stars only touch isolators, so the whole computation Hamiltonian annihilates the code space.
        double full = 0.0;
        for (size_t j = 0; j < ldim; j++) {
            full = std::max(full, annihilation_residual(h, code.encode(bits_of(j, width))));
        }
        report.at_most(suite, "all codeword products", "full Hamiltonian residual", full, th.algebraic);
    }

    // Idle invariance.
    const double unit = diagonal ? std::get<DiagonalChain>(arch).j0 : std::get<ExchangeChain>(arch).jxy;
    Vector superposition = Vector::Constant(static_cast<Eigen::Index>(ldim), 1.0 / std::sqrt(double(ldim)));
    for (Eigen::Index j = 0; j < superposition.size(); j++) {
        superposition[j] *= std::polar(1.0, 0.37 * static_cast<double>(j));
    }
    const StateVector sup = code.encode_logical(superposition);
    for (double t : {0.3, 1.7, 5.0}) {
        std::string c = "T=" + fmt_double(t) + "/J";
        StateVector out = evolve(sup, h, t / unit);
        report.at_least(suite, c, "state fidelity", sup.overlap_fidelity(out), 1.0 - th.exact_fidelity);
        auto f = process_fidelity(idle_schedule(t / unit), arch, identity(ldim), code, "I");
        report.at_least(suite, c, "logical identity fidelity", f.fidelity, 1.0 - th.exact_fidelity);
    }

    // Readout round trip.
    size_t mismatches = 0;
    for (size_t j = 0; j < ldim; j++) {
        auto bits = bits_of(j, width);
        LogicalRegister reg{arch, code.encode(bits)};
        for (size_t k = 0; k < width; k++) {
            if (logical_readout(reg, k, 1000 + j * width + k).bit != bits[k]) {
                mismatches++;
            }
        }
    }
    report.at_most(suite, "all basis encodings", "readout mismatches", static_cast<double>(mismatches), 0.0);

    if (diagonal) {
        const auto &d = std::get<DiagonalChain>(arch);
        for (size_t k = 0; k < width; k++) {
            double spread = neighbor_spread(hadamard_logical(d, k), code, k);
            report.at_most(suite, "hadamard_logical(" + std::to_string(k) + ")", "neighbor config spread", spread,
                           th.exact_fidelity);
        }
    } else {
        const auto &e = std::get<ExchangeChain>(arch);
        // Simultaneous star gates versus the tensor product of targets.
        const Matrix2 us[] = {gates::hadamard(), gates::rotation(Axis::X, 0.7), gates::rotation(Axis::Y, -1.1),
                              gates::pauli(Axis::X)};
        PulseSchedule par("parallel stars");
        Matrix target = identity(ldim);
        for (size_t k = 0; k < width; k++) {
            const Matrix2 &u = us[k % 4];
            par.append(local_logical_gate_exchange(e, k, u));
            target = lift_one_qubit(u, k, width) * target;
        }
        Matrix m = restricted_unitary(par, arch, code.embedding());
        report.at_most(suite, "parallel star gates", "phase-aligned distance", phase_aligned_distance(target, m),
                       th.algebraic);
        for (size_t k = 0; k < width; k++) {
            double spread = neighbor_spread(local_logical_gate_exchange(e, k, us[k % 4]), code, k);
            report.at_most(suite, "star gate " + std::to_string(k), "neighbor config spread", spread, th.algebraic);
        }
        for (double jz : {0.0, e.jxy}) {
            Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_of(isolator_pair_hamiltonian(e.jxy, jz)).matrix());
            const auto &ev = es.eigenvalues();
            double gap = ev[1] - ev[0];
            double singlet_weight = std::norm(es.eigenvectors().col(0).dot(singlet_pair()));
            std::string c = "isolator pair jz=" + fmt_double(jz);
            report.at_least(suite, c, "ground-state gap", gap, th.exact_fidelity);
            report.at_least(suite, c, "singlet ground-state weight", singlet_weight, 1.0 - th.exact_fidelity);
        }
    }
    return report;
}

Report diagonal_gate_suite(const Thresholds &th) {
    const std::string suite = "diagonal.gates";
    DiagonalChain chain{3, 1.0, 1.0, {}};
    const Architecture arch = chain;
    const CodeSpace code(arch);
    Report report;

    for (size_t k = 0; k < chain.n_logical; k++) {
        std::string c = "hadamard_logical(" + std::to_string(k) + ")";
        PulseSchedule s = hadamard_logical(chain, k);
        auto f = process_fidelity(s, arch, lift_one_qubit(gates::hadamard(), k, 3), code, "H");
        report.at_least(suite, c, "fidelity", f.fidelity, 1.0 - th.exact_fidelity);
        report.at_most(suite, c, "leakage", f.leakage, th.exact_fidelity);
        report.within(suite, c, "locals", double(f.cost.local_gate_count), 9, 9);
        report.within(suite, c, "evolves", double(f.cost.evolve_count), 2, 2);
        report.within(suite, c, "exact time pi/(2 j0)",
                      exact_time_matches(f.cost, SymbolicReal::pi_multiple(Rational(1, 2), chain.j0)), 1, 1);
        report.at_most(suite, c, "neighbor config spread", neighbor_spread(s, code, k), th.exact_fidelity);
        auto twice = process_fidelity(s + s, arch, identity(8), code, "I");
        report.at_least(suite, c + "^2", "fidelity to identity", twice.fidelity, 1.0 - th.exact_fidelity);
    }

    for (size_t k = 0; k + 1 < chain.n_logical; k++) {
        std::string c = "cphase_logical(" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
        PulseSchedule s = cphase_logical(chain, k, k + 1);
        auto f = process_fidelity(s, arch, lift_two_qubit(cphase_target(), k, k + 1, 3), code, "CPHASE");
        report.at_least(suite, c, "fidelity", f.fidelity, 1.0 - th.exact_fidelity);
        report.at_most(suite, c, "leakage", f.leakage, th.exact_fidelity);
        report.within(suite, c, "locals", double(f.cost.local_gate_count), 8, 8);
        report.within(suite, c, "evolves", double(f.cost.evolve_count), 1, 1);
        report.within(suite, c, "exact time pi/(16 j1)",
                      exact_time_matches(f.cost, SymbolicReal::pi_multiple(Rational(1, 16), chain.j1)), 1, 1);
    }

    {
        // Intra-bit j0 terms add only a global phase while the pair is flipped out of the code.
        Matrix ms[2];
        int i = 0;
        for (double j0 : {1.0, 3.0}) {
            DiagonalChain c2{2, j0, 1.0, {}};
            ms[i++] = restricted_unitary(cphase_logical(c2, 0, 1), c2, CodeSpace(c2).embedding());
        }
        report.at_most(suite, "cphase_logical j0 in {1,3}", "phase-aligned distance",
                       phase_aligned_distance(ms[0], ms[1]), th.exact_fidelity);
    }

    {
        std::string c = "cnot_logical(0,1)";
        PulseSchedule s = cnot_logical(chain, 0, 1);
        Matrix target = lift_two_qubit(cnot_target(0, 1), 0, 1, 3);
        auto f = process_fidelity(s, arch, target, code, "CNOT");
        report.at_least(suite, c, "fidelity", f.fidelity, 1.0 - th.exact_fidelity);
        report.within(suite, c, "locals", double(f.cost.local_gate_count), 26, 26);
        report.within(suite, c, "evolves", double(f.cost.evolve_count), 5, 5);
        double expected_time = std::numbers::pi / (16 * chain.j1) + std::numbers::pi / chain.j0;
        report.at_most(suite, c, "time error", std::abs(f.cost.total_evolve_time - expected_time), th.algebraic);
    }

    {
        Matrix z = Matrix(gates::pauli(Axis::Z));
        auto f = process_fidelity(rz_logical(chain, 1, SymbolicReal::pi_multiple(Rational(1))), arch,
                                  lift_one_qubit(Matrix2(z), 1, 3), code, "Z");
        report.at_least(suite, "rz_logical(1, pi)", "fidelity to logical Z", f.fidelity, 1.0 - th.exact_fidelity);
    }

    {
        // Half-parallel mode: bits 0 and 2 together, or one after the other in either order.
        const size_t both[] = {0, 2};
        Matrix par = restricted_unitary(hadamard_logical_parallel(chain, both), arch, code.embedding());
        Matrix ab = restricted_unitary(hadamard_logical(chain, 0) + hadamard_logical(chain, 2), arch, code.embedding());
        Matrix ba = restricted_unitary(hadamard_logical(chain, 2) + hadamard_logical(chain, 0), arch, code.embedding());
        report.at_most(suite, "hadamard bits 0,2", "order spread", phase_aligned_distance(ab, ba), th.exact_fidelity);
        report.at_most(suite, "hadamard bits 0,2", "parallel vs sequential", phase_aligned_distance(ab, par),
                       th.exact_fidelity);
    }

    {
        DiagonalChain pair{2, 1.0, 1.0, {}};
        CodeSpace pcode(pair);
        const int zero[] = {0, 0};
        StateVector out = execute(hadamard_logical(pair, 0) + cnot_logical(pair, 0, 1), pair, pcode.encode(zero));
        Vector amps = pcode.logical_amplitudes(out);
        Vector bell = Vector::Zero(4);
        bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
        Complex phase = bell.dot(amps);
        phase /= std::abs(phase);
        double err = (amps - phase * bell).cwiseAbs().maxCoeff();
        report.at_most(suite, "bell H_L(0) CNOT_L(0,1)", "max amplitude error", err, th.bell_amplitude);
    }
    return report;
}

Report exchange_gate_suite(size_t n_reps, const Thresholds &th) {
    const std::string suite = "exchange.gates";
    ExchangeChain chain{2, 1.0, 0.0};
    const Architecture arch = chain;
    const ExchangeGroup g = exchange_group(chain, 0);
    const StarDotPair carrier{g.star_left, g.dot1};
    const Matrix embedding = group_embedding(chain, g);
    const Matrix swap_target = lift_two_qubit(iswap_target(), 0, 1, 4);
    Report report;

    for (size_t n : {size_t{1}, size_t{4}, n_reps}) {
        auto cost = accounting(synth_swap(chain, carrier, {n, Level1Mode::Trotter}));
        std::string c = "synth_swap N=" + std::to_string(n);
        report.within(suite, c, "locals / 44N", double(cost.local_gate_count) / double(44 * n), 1, 1);
        report.within(suite, c, "exact time pi/(2 jxy)",
                      exact_time_matches(cost, SymbolicReal::pi_multiple(Rational(1, 2), chain.jxy)), 1, 1);
    }

    for (size_t n : {size_t{1}, size_t{4}}) {
        auto f = process_fidelity(synth_swap(chain, carrier, {n, Level1Mode::Ideal}), arch, swap_target, embedding,
                                  "iSWAP");
        report.at_least(suite, "ideal level 1, N=" + std::to_string(n), "fidelity", f.fidelity,
                        1.0 - th.exact_fidelity);
    }

    {
        auto f = process_fidelity(synth_swap(chain, carrier, {64, Level1Mode::Trotter}), arch, swap_target, embedding,
                                  "iSWAP");
        report.at_least(suite, "synth_swap N=64", "fidelity", f.fidelity, 1.0 - th.swap_n64_infidelity);
    }

    {
        // Spectator bit outside the group: star 2 in a superposition, isolator 2 in the singlet.
        ExchangeChain big{3, 1.0, 0.0};
        CodeSpace bcode(big);
        Vector logical = Vector::Zero(8);
        logical[0] = logical[4] = 1.0 / std::sqrt(2.0);
        StateVector psi = bcode.encode_logical(logical);
        StateVector out = execute(synth_swap(big, carrier, {64, Level1Mode::Trotter}), big, psi);
        const size_t spect[] = {big.star(2), big.dot1(2), big.dot2(2)};
        double diff = (reduced_density(psi, spect) - reduced_density(out, spect)).cwiseAbs().maxCoeff();
        report.at_most(suite, "synth_swap N=64 on L=3", "spectator density change", diff, th.swap_n64_infidelity);
    }

    {
        std::string c = "cphase_logical_exchange N=" + std::to_string(n_reps);
        PulseSchedule s = cphase_logical_exchange(chain, 0, 1, {n_reps, Level1Mode::Trotter});
        auto f = process_fidelity(s, arch, cphase_target(), CodeSpace(arch), "CPHASE");
        report.at_least(suite, c, "fidelity", f.fidelity, th.exchange_cphase_min_fidelity);
        report.at_most(suite, c, "leakage", f.leakage, 1.0 - f.fidelity + th.exact_fidelity);
        report.within(suite, c, "exact time 5pi/(4 jxy)",
                      exact_time_matches(f.cost, SymbolicReal::pi_multiple(Rational(5, 4), chain.jxy)), 1, 1);
        report.at_most(suite, c, "time / (3pi/(2 jxy))",
                       f.cost.total_evolve_time / (1.5 * std::numbers::pi / chain.jxy), 1.0);
    }

    {
        auto f = process_fidelity(local_logical_gate_exchange(chain, 0, gates::pauli(Axis::X)), arch,
                                  lift_one_qubit(gates::pauli(Axis::X), 0, 2), CodeSpace(arch), "X");
        report.at_least(suite, "star X on bit 0", "fidelity", f.fidelity, 1.0 - th.algebraic);
    }
    return report;
}

Report trotter_suite(const std::vector<TrotterSweep> &sweeps, const Thresholds &th) {
    const std::string suite = "trotter";
    Report report;
    for (const auto &sw : sweeps) {
        std::string jz = "jz=" + fmt_double(sw.jz);
        for (const auto &row : sw.rows) {
            std::string c = jz + " N=" + std::to_string(row.n_reps);
            report.add(suite, c, "error", row.error, "", true);
            report.add(suite, c, "operator distance", row.operator_distance, "", true);
            report.at_most(suite, c, "interaction time error", std::abs(row.total_evolve_time - std::numbers::pi / 2),
                           th.algebraic);
        }
        for (size_t i = 0; i + 1 < sw.rows.size(); i++) {
            size_t n = sw.rows[i].n_reps;
            if (sw.rows[i + 1].n_reps != 2 * n || n < 8 || n > 32) {
                continue;
            }
            report.within(suite, jz + " N=" + std::to_string(n), "error ratio e(N)/e(2N)", sw.ratios[i], th.ratio_min,
                          th.ratio_max);
        }
        if (sw.rows.size() >= 2) {
            report.within(suite, jz, "log-log slope", sw.slope, th.slope_min, th.slope_max);
            report.add(suite, jz, "monotone nonincreasing", sw.monotone ? 1.0 : 0.0, "== 1", sw.monotone);
            report.add(suite, jz, "error(N_max) < error(N_min)", sw.rows.back().error,
                       "< " + fmt_double(sw.rows.front().error), sw.rows.back().error < sw.rows.front().error);
        }
    }
    return report;
}

std::vector<CostRow> cost_table(const DiagonalChain &diag, const ExchangeChain &exch, size_t n_reps) {
    auto constructed = [](const PulseSchedule &s) {
        auto cost = accounting(s);
        if (!cost.exact_evolve_time) {
            throw std::logic_error("schedule '" + s.label() + "' has no exact interaction time");
        }
        return *cost.exact_evolve_time;
    };
    std::vector<CostRow> rows;
    rows.push_back({"logical Hadamard", "always-on Ising, encoded",
                    SymbolicReal::pi_multiple(Rational(1, 2), diag.j0), "published"});
    rows.push_back({"logical Hadamard", "always-on Ising, encoded", constructed(hadamard_logical(diag, 0)),
                    "construction"});
    rows.push_back({"two-bit CPHASE", "always-on Ising, encoded", SymbolicReal::pi_multiple(Rational(1, 16), diag.j1),
                    "published"});
    rows.push_back({"two-bit CPHASE", "always-on Ising, encoded", constructed(cphase_logical(diag, 0, 1)),
                    "construction"});
    rows.push_back({"two-bit CPHASE", "switchable Ising", SymbolicReal::pi_multiple(Rational(1, 4), diag.j1),
                    "published"});
    rows.push_back({"swap (iSWAP type)", "always-on exchange, encoded",
                    SymbolicReal::pi_multiple(Rational(1, 2), exch.jxy), "published"});
    rows.push_back({"swap (iSWAP type)", "always-on exchange, encoded",
                    constructed(synth_swap(exch, {exch.star(0), exch.dot1(0)}, {n_reps, Level1Mode::Trotter})),
                    "construction"});
    rows.push_back({"two-bit gate", "always-on exchange, encoded", SymbolicReal::pi_multiple(Rational(3, 2), exch.jxy),
                    "published"});
    rows.push_back({"two-bit gate", "always-on exchange, encoded",
                    constructed(cphase_logical_exchange(exch, 0, 1, {n_reps, Level1Mode::Trotter})), "construction"});
    rows.push_back({"two-bit gate", "switchable XY", SymbolicReal::pi_multiple(Rational(1, 4), exch.jxy),
                    "published"});
    return rows;
}

std::string cost_table_csv(const std::vector<CostRow> &rows) {
    std::ostringstream out;
    out << "operation,model,interaction_time,value,provenance\n";
    for (const auto &r : rows) {
        out << csv_escape(r.operation) << ',' << csv_escape(r.model) << ',' << r.time.str() << ','
            << fmt_double(r.time.value()) << ',' << r.provenance << '\n';
    }
    return out.str();
}

Report cost_comparison(const Thresholds &th) {
    const std::string suite = "costs";
    DiagonalChain diag{2, 1.0, 1.0, {}};
    ExchangeChain exch{2, 1.0, 0.0};
    auto rows = cost_table(diag, exch, 1);
    auto find = [&](const std::string &op, const std::string &model, const std::string &prov) {
        for (const auto &r : rows) {
            if (r.operation == op && r.model == model && r.provenance == prov) {
                return r.time;
            }
        }
        throw std::logic_error("missing cost row " + op);
    };
    Report report;
    for (const auto &r : rows) {
        report.add(suite, r.operation + " | " + r.model, r.provenance + " " + r.time.str(), r.time.value(), "", true);
    }
    SymbolicReal ising_encoded = find("two-bit CPHASE", "always-on Ising, encoded", "construction");
    SymbolicReal ising_switch = find("two-bit CPHASE", "switchable Ising", "published");
    report.add(suite, "encoded CPHASE vs switchable Ising", "pi/16 < pi/4",
               ising_encoded.value() / ising_switch.value(), "< 1", ising_encoded.value() < ising_switch.value());
    report.add(suite, "encoded CPHASE construction vs published", "equal",
               ising_encoded == find("two-bit CPHASE", "always-on Ising, encoded", "published") ? 1.0 : 0.0, "== 1",
               ising_encoded == find("two-bit CPHASE", "always-on Ising, encoded", "published"));
    SymbolicReal xy_built = find("two-bit gate", "always-on exchange, encoded", "construction");
    SymbolicReal xy_published = find("two-bit gate", "always-on exchange, encoded", "published");
    report.add(suite, "exchange two-bit gate construction vs published bound", "5pi/4 <= 3pi/2",
               xy_built.value() / xy_published.value(), "<= 1",
               xy_built.pi_coefficient() <= xy_published.pi_coefficient() && xy_built.scale() == xy_published.scale());
    report.at_most(suite, "hadamard construction vs published", "time difference",
                   std::abs(find("logical Hadamard", "always-on Ising, encoded", "construction").value() -
                            find("logical Hadamard", "always-on Ising, encoded", "published").value()),
                   th.algebraic);
    return report;
}

}  // namespace ifs
