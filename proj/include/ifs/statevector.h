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

#ifndef IFS_STATEVECTOR_H
#define IFS_STATEVECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ifs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Largest register the dense routines will materialize (dim 4096).
constexpr size_t MAX_DENSE_QUBITS = 12;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_name(Axis axis);
Axis parse_axis(std::string_view name);

struct PauliFactor {
    size_t qubit;
    Axis axis;
    bool operator==(const PauliFactor &) const = default;
};

/// coefficient * (product of single-qubit Paulis on distinct qubits).
class PauliTerm {
   public:
    PauliTerm(double coefficient, std::vector<PauliFactor> factors);

    double coefficient() const {
        return coefficient_;
    }
    const std::vector<PauliFactor> &factors() const {
        return factors_;
    }
    size_t max_qubit() const;

    bool operator==(const PauliTerm &) const = default;

   private:
    double coefficient_;
    std::vector<PauliFactor> factors_;
};

class PauliSum {
   public:
    explicit PauliSum(size_t n_qubits);
    PauliSum(size_t n_qubits, std::vector<PauliTerm> terms);

    void add(PauliTerm term);
    void extend(const PauliSum &other);

    size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }

    std::string str() const;

   private:
    size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Square complex matrix on a power-of-two dimension.
class DenseOperator {
   public:
    DenseOperator() = default;
    explicit DenseOperator(Matrix m);

    static DenseOperator identity(size_t n_qubits);

    size_t dim() const {
        return static_cast<size_t>(m_.rows());
    }
    size_t n_qubits() const;
    const Matrix &matrix() const {
        return m_;
    }

    /// max |(U^dag U - I)_ij|
    double unitarity_residual() const;
    /// max |(M - M^dag)_ij|
    double hermiticity_residual() const;

   private:
    Matrix m_;
};

/// Pure state of n qubits. Qubit 0 is the least significant bit of the
/// basis index.
class StateVector {
   public:
    static StateVector basis(size_t n_qubits, size_t index);
    /// Rejects amplitude arrays of the wrong length or with norm off by more than 1e-10.
    static StateVector from_amplitudes(size_t n_qubits, Vector amplitudes);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(amps_.size());
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    Complex amplitude(size_t index) const {
        return amps_[static_cast<Eigen::Index>(index)];
    }
    double norm() const {
        return amps_.norm();
    }

    /// |<this|other>|^2
    double overlap_fidelity(const StateVector &other) const;

   private:
    StateVector(size_t n_qubits, Vector amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {
    }

    size_t n_qubits_;
    Vector amps_;
};

namespace gates {
Matrix2 identity();
Matrix2 pauli(Axis axis);
Matrix2 hadamard();
/// exp(-i (angle/2) sigma^axis)
Matrix2 rotation(Axis axis, double angle);
}  // namespace gates

double unitarity_residual(const Matrix &u);

StateVector apply_local_gate(const StateVector &state, size_t qubit, const Matrix2 &u);
DenseOperator matrix_of(const PauliSum &h);

/// Eigendecomposition of a Hermitian PauliSum, reused for any number of
/// evolution times.
class Propagator {
   public:
    explicit Propagator(const PauliSum &h);

    size_t n_qubits() const {
        return n_qubits_;
    }
    const Eigen::VectorXd &eigenvalues() const {
        return eigenvalues_;
    }
    const Matrix &eigenvectors() const {
        return eigenvectors_;
    }
    /// exp(-i H t)
    Matrix unitary(double duration) const;
    Vector apply(const Vector &amps, double duration) const;

   private:
    size_t n_qubits_;
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_;
};

StateVector evolve(const StateVector &state, const PauliSum &h, double duration);
DenseOperator unitary_of_evolution(const PauliSum &h, double duration);

struct MeasureResult {
    int outcome;
    StateVector post_state;
};

MeasureResult measure_z(const StateVector &state, size_t qubit, std::uint64_t rng_seed);

/// Density matrix over `keep`; kept qubit keep[i] becomes bit i of the result index.
Matrix reduced_density(const StateVector &state, std::span<const size_t> keep);

namespace detail {

void check_qubit(size_t qubit, size_t n_qubits);
void check_unitary_2x2(const Matrix2 &u);

/// Applies u on `qubit` to every column of `columns` (rows index the basis).
void apply_1q(Matrix &columns, size_t qubit, const Matrix2 &u);
/// Applies a 2^k x 2^k unitary to the ordered `qubits`; qubits[i] is bit i of the gate index.
void apply_kq(Matrix &columns, std::span<const size_t> qubits, const Matrix &u);
/// Projects onto outcome of qubit and renormalizes; returns the outcome probability.
double collapse_z(Vector &amps, size_t qubit, int outcome);
double probability_one(const Vector &amps, size_t qubit);

}  // namespace detail

}  // namespace ifs

#endif
