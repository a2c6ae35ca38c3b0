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

#include "ifs/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ifs {

namespace {

constexpr double UNITARY_TOL = 1e-10;
constexpr Complex I_UNIT{0.0, 1.0};

void check_dense_guard(size_t n_qubits) {
    if (n_qubits > MAX_DENSE_QUBITS) {
        throw std::invalid_argument(
            "dense guard exceeded: " + std::to_string(n_qubits) + " qubits > " + std::to_string(MAX_DENSE_QUBITS));
    }
}

}  // namespace

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return 'x';
        case Axis::Y:
            return 'y';
        case Axis::Z:
            return 'z';
    }
    return '?';
}

Axis parse_axis(std::string_view name) {
    if (name == "x" || name == "X") {
        return Axis::X;
    }
    if (name == "y" || name == "Y") {
        return Axis::Y;
    }
    if (name == "z" || name == "Z") {
        return Axis::Z;
    }
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

PauliTerm::PauliTerm(double coefficient, std::vector<PauliFactor> factors)
    : coefficient_(coefficient), factors_(std::move(factors)) {
    if (!std::isfinite(coefficient_)) {
        throw std::invalid_argument("Pauli term coefficient must be finite");
    }
    for (size_t i = 0; i < factors_.size(); i++) {
        for (size_t j = i + 1; j < factors_.size(); j++) {
            if (factors_[i].qubit == factors_[j].qubit) {
                throw std::invalid_argument(
                    "qubit " + std::to_string(factors_[i].qubit) + " repeats within one Pauli term");
            }
        }
    }
}

size_t PauliTerm::max_qubit() const {
    size_t m = 0;
    for (const auto &f : factors_) {
        m = std::max(m, f.qubit);
    }
    return m;
}

PauliSum::PauliSum(size_t n_qubits) : n_qubits_(n_qubits) {
}

PauliSum::PauliSum(size_t n_qubits, std::vector<PauliTerm> terms) : n_qubits_(n_qubits) {
    for (auto &t : terms) {
        add(std::move(t));
    }
}

void PauliSum::add(PauliTerm term) {
    for (const auto &f : term.factors()) {
        if (f.qubit >= n_qubits_) {
            throw std::out_of_range(
                "Pauli factor on qubit " + std::to_string(f.qubit) + " but sum has " + std::to_string(n_qubits_) +
                " qubits");
        }
    }
    terms_.push_back(std::move(term));
}

void PauliSum::extend(const PauliSum &other) {
    for (const auto &t : other.terms()) {
        add(t);
    }
}

std::string PauliSum::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << t.coefficient();
        for (const auto &f : t.factors()) {
            out << '*' << static_cast<char>(std::toupper(axis_name(f.axis))) << f.qubit;
        }
    }
    if (first) {
        out << '0';
    }
    return out.str();
}

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("operator matrix must be square");
    }
    if (!std::has_single_bit(static_cast<size_t>(m_.rows()))) {
        throw std::invalid_argument("operator dimension must be a power of two");
    }
}

DenseOperator DenseOperator::identity(size_t n_qubits) {
    check_dense_guard(n_qubits);
    auto dim = static_cast<Eigen::Index>(size_t{1} << n_qubits);
    return DenseOperator(Matrix::Identity(dim, dim));
}

size_t DenseOperator::n_qubits() const {
    return static_cast<size_t>(std::countr_zero(dim()));
}

double DenseOperator::unitarity_residual() const {
    return ifs::unitarity_residual(m_);
}

double DenseOperator::hermiticity_residual() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const Matrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("unitarity check needs a square matrix");
    }
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

StateVector StateVector::basis(size_t n_qubits, size_t index) {
    check_dense_guard(n_qubits);
    size_t dim = size_t{1} << n_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::from_amplitudes(size_t n_qubits, Vector amplitudes) {
    check_dense_guard(n_qubits);
    if (static_cast<size_t>(amplitudes.size()) != (size_t{1} << n_qubits)) {
        throw std::invalid_argument(
            "amplitude array of length " + std::to_string(amplitudes.size()) + " does not match " +
            std::to_string(n_qubits) + " qubits");
    }
    double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(norm) + ")");
    }
    return StateVector(n_qubits, std::move(amplitudes));
}

double StateVector::overlap_fidelity(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("overlap between states of different dimension");
    }
    return std::norm(amps_.dot(other.amps_));
}

namespace gates {

Matrix2 identity() {
    return Matrix2::Identity();
}

Matrix2 pauli(Axis axis) {
    Matrix2 m;
    switch (axis) {
        case Axis::X:
            m << 0, 1, 1, 0;
            break;
        case Axis::Y:
            m << 0, -I_UNIT, I_UNIT, 0;
            break;
        case Axis::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix2 hadamard() {
    Matrix2 m;
    double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Matrix2 rotation(Axis axis, double angle) {
    return std::cos(angle / 2) * identity() - I_UNIT * std::sin(angle / 2) * pauli(axis);
}

}  // namespace gates

namespace detail {

void check_qubit(size_t qubit, size_t n_qubits) {
    if (qubit >= n_qubits) {
        throw std::out_of_range(
            "qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(n_qubits) + " qubits");
    }
}

void check_unitary_2x2(const Matrix2 &u) {
    double r = unitarity_residual(Matrix(u));
    if (!(r <= UNITARY_TOL)) {
        throw std::invalid_argument("local gate is not unitary (residual " + std::to_string(r) + ")");
    }
}

void apply_1q(Matrix &columns, size_t qubit, const Matrix2 &u) {
    const Eigen::Index stride = Eigen::Index{1} << qubit;
    const Eigen::Index dim = columns.rows();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (Eigen::Index c = 0; c < columns.cols(); c++) {
        Complex *col = columns.col(c).data();
        for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
            for (Eigen::Index k = base; k < base + stride; k++) {
                Complex a0 = col[k];
                Complex a1 = col[k + stride];
                col[k] = u00 * a0 + u01 * a1;
                col[k + stride] = u10 * a0 + u11 * a1;
            }
        }
    }
}

void apply_kq(Matrix &columns, std::span<const size_t> qubits, const Matrix &u) {
    const size_t k = qubits.size();
    const size_t sub = size_t{1} << k;
    if (static_cast<size_t>(u.rows()) != sub || static_cast<size_t>(u.cols()) != sub) {
        throw std::invalid_argument("block unitary size does not match its qubit list");
    }
    size_t mask = 0;
    std::vector<size_t> offsets(sub, 0);
    for (size_t i = 0; i < k; i++) {
        size_t bit = size_t{1} << qubits[i];
        if (mask & bit) {
            throw std::invalid_argument("block unitary names a qubit twice");
        }
        mask |= bit;
    }
    for (size_t s = 0; s < sub; s++) {
        for (size_t i = 0; i < k; i++) {
            if ((s >> i) & 1) {
                offsets[s] |= size_t{1} << qubits[i];
            }
        }
    }
    const size_t dim = static_cast<size_t>(columns.rows());
    Vector gathered(static_cast<Eigen::Index>(sub));
    for (Eigen::Index c = 0; c < columns.cols(); c++) {
        Complex *col = columns.col(c).data();
        for (size_t base = 0; base < dim; base++) {
            if (base & mask) {
                continue;
            }
            for (size_t s = 0; s < sub; s++) {
                gathered[static_cast<Eigen::Index>(s)] = col[base | offsets[s]];
            }
            Vector out = u * gathered;
            for (size_t s = 0; s < sub; s++) {
                col[base | offsets[s]] = out[static_cast<Eigen::Index>(s)];
            }
        }
    }
}

double probability_one(const Vector &amps, size_t qubit) {
    const size_t bit = size_t{1} << qubit;
    double p = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); i++) {
        if (static_cast<size_t>(i) & bit) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

double collapse_z(Vector &amps, size_t qubit, int outcome) {
    const size_t bit = size_t{1} << qubit;
    double p = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); i++) {
        bool one = (static_cast<size_t>(i) & bit) != 0;
        if (one != (outcome == 1)) {
            amps[i] = 0.0;
        } else {
            p += std::norm(amps[i]);
        }
    }
    if (p <= 0.0) {
        throw std::logic_error("collapse onto a zero-probability branch");
    }
    amps /= std::sqrt(p);
    return p;
}

}  // namespace detail

StateVector apply_local_gate(const StateVector &state, size_t qubit, const Matrix2 &u) {
    detail::check_qubit(qubit, state.n_qubits());
    detail::check_unitary_2x2(u);
    Matrix cols = state.amplitudes();
    detail::apply_1q(cols, qubit, u);
    return StateVector::from_amplitudes(state.n_qubits(), cols.col(0));
}

DenseOperator matrix_of(const PauliSum &h) {
    check_dense_guard(h.n_qubits());
    const size_t dim = size_t{1} << h.n_qubits();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &term : h.terms()) {
        size_t flip = 0;
        size_t sign = 0;
        int n_y = 0;
        for (const auto &f : term.factors()) {
            size_t bit = size_t{1} << f.qubit;
            if (f.axis != Axis::Z) {
                flip |= bit;
            }
            if (f.axis != Axis::X) {
                sign |= bit;
            }
            if (f.axis == Axis::Y) {
                n_y++;
            }
        }
        // Y = i X Z, so a product of Paulis maps |j> to i^{n_y} (-1)^{|j & sign|} |j ^ flip>.
        static constexpr Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const Complex base = term.coefficient() * i_pow[n_y % 4];
        for (size_t j = 0; j < dim; j++) {
            Complex v = (std::popcount(j & sign) & 1) ? -base : base;
            m(static_cast<Eigen::Index>(j ^ flip), static_cast<Eigen::Index>(j)) += v;
        }
    }
    return DenseOperator(std::move(m));
}

Propagator::Propagator(const PauliSum &h) : n_qubits_(h.n_qubits()) {
    DenseOperator m = matrix_of(h);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Matrix Propagator::unitary(double duration) const {
    if (!(duration >= 0)) {
        throw std::invalid_argument("evolution duration must be non-negative");
    }
    Vector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); i++) {
        phases[i] = std::polar(1.0, -eigenvalues_[i] * duration);
    }
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Vector Propagator::apply(const Vector &amps, double duration) const {
    if (!(duration >= 0)) {
        throw std::invalid_argument("evolution duration must be non-negative");
    }
    Vector coeffs = eigenvectors_.adjoint() * amps;
    for (Eigen::Index i = 0; i < coeffs.size(); i++) {
        coeffs[i] *= std::polar(1.0, -eigenvalues_[i] * duration);
    }
    return eigenvectors_ * coeffs;
}

StateVector evolve(const StateVector &state, const PauliSum &h, double duration) {
    if (!(duration >= 0)) {
        throw std::invalid_argument("evolution duration must be non-negative");
    }
    if (h.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("Hamiltonian and state sizes differ");
    }
    if (duration == 0) {
        return state;
    }
    Propagator p(h);
    return StateVector::from_amplitudes(state.n_qubits(), p.apply(state.amplitudes(), duration));
}

DenseOperator unitary_of_evolution(const PauliSum &h, double duration) {
    if (!(duration >= 0)) {
        throw std::invalid_argument("evolution duration must be non-negative");
    }
    if (duration == 0) {
        return DenseOperator::identity(h.n_qubits());
    }
    return DenseOperator(Propagator(h).unitary(duration));
}

MeasureResult measure_z(const StateVector &state, size_t qubit, std::uint64_t rng_seed) {
    detail::check_qubit(qubit, state.n_qubits());
    std::mt19937_64 rng(rng_seed);
    double p1 = detail::probability_one(state.amplitudes(), qubit);
    double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    int outcome = r < p1 ? 1 : 0;
    Vector amps = state.amplitudes();
    detail::collapse_z(amps, qubit, outcome);
    return {outcome, StateVector::from_amplitudes(state.n_qubits(), std::move(amps))};
}

Matrix reduced_density(const StateVector &state, std::span<const size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("reduced density needs at least one kept qubit");
    }
    size_t keep_mask = 0;
    for (size_t q : keep) {
        detail::check_qubit(q, state.n_qubits());
        size_t bit = size_t{1} << q;
        if (keep_mask & bit) {
            throw std::invalid_argument("kept qubit " + std::to_string(q) + " listed twice");
        }
        keep_mask |= bit;
    }
    const size_t n_keep = keep.size();
    const size_t n_rest = state.n_qubits() - n_keep;
    std::vector<size_t> rest;
    for (size_t q = 0; q < state.n_qubits(); q++) {
        if (!(keep_mask & (size_t{1} << q))) {
            rest.push_back(q);
        }
    }
    // Reshape psi into A[kept index, rest index]; rho = A A^dag.
    Matrix a = Matrix::Zero(Eigen::Index{1} << n_keep, Eigen::Index{1} << n_rest);
    for (size_t i = 0; i < state.dim(); i++) {
        size_t ki = 0;
        for (size_t b = 0; b < n_keep; b++) {
            ki |= ((i >> keep[b]) & 1) << b;
        }
        size_t ri = 0;
        for (size_t b = 0; b < n_rest; b++) {
            ri |= ((i >> rest[b]) & 1) << b;
        }
        a(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(ri)) = state.amplitude(i);
    }
    return a * a.adjoint();
}

}  // namespace ifs
