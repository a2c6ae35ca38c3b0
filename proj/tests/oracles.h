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

// Brute-force reference implementations, independent of the library's
// bitmask Pauli construction and eigendecomposition propagator.

#ifndef IFS_TESTS_ORACLES_H
#define IFS_TESTS_ORACLES_H

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "ifs/statevector.h"

namespace oracle {

using ifs::Complex;
using ifs::Matrix;
using ifs::Vector;

inline Matrix pauli(ifs::Axis axis) {
    Matrix m(2, 2);
    switch (axis) {
        case ifs::Axis::X:
            m << 0, 1, 1, 0;
            break;
        case ifs::Axis::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case ifs::Axis::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

/// Kronecker product P_{n-1} (x) ... (x) P_0, so qubit 0 is the least significant bit.
inline Matrix term_matrix(const ifs::PauliTerm &term, size_t n) {
    std::vector<Matrix> slots(n, Matrix::Identity(2, 2));
    for (const auto &f : term.factors()) {
        slots[f.qubit] = pauli(f.axis);
    }
    Matrix m = Matrix::Identity(1, 1);
    for (size_t q = 0; q < n; q++) {
        m = Matrix(Eigen::kroneckerProduct(slots[q], m));
    }
    return term.coefficient() * m;
}

inline Matrix kron_matrix(const ifs::PauliSum &h) {
    const auto dim = static_cast<Eigen::Index>(size_t{1} << h.n_qubits());
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        m += term_matrix(t, h.n_qubits());
    }
    return m;
}

/// exp(a) by scaling and squaring around a truncated Taylor series.
inline Matrix taylor_expm(const Matrix &a, int order = 40) {
    double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2;
        squarings++;
    }
    Matrix scaled = a / std::pow(2.0, squarings);
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    Matrix sum = term;
    for (int k = 1; k <= order; k++) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; i++) {
        sum = sum * sum;
    }
    return sum;
}

inline Matrix propagator(const ifs::PauliSum &h, double t) {
    return taylor_expm(Complex(0, -t) * kron_matrix(h));
}

inline ifs::PauliSum random_pauli_sum(std::mt19937_64 &rng, size_t n, size_t n_terms) {
    std::uniform_int_distribution<int> axis(0, 2);
    std::bernoulli_distribution keep(0.5);
    std::normal_distribution<double> coeff(0.0, 1.0);
    ifs::PauliSum h(n);
    for (size_t i = 0; i < n_terms; i++) {
        std::vector<ifs::PauliFactor> factors;
        for (size_t q = 0; q < n; q++) {
            if (keep(rng)) {
                factors.push_back({q, static_cast<ifs::Axis>(axis(rng))});
            }
        }
        h.add(ifs::PauliTerm(coeff(rng), factors));
    }
    return h;
}

inline Vector random_state(std::mt19937_64 &rng, size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(static_cast<Eigen::Index>(size_t{1} << n));
    for (auto &x : v) {
        x = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

inline Matrix random_unitary(std::mt19937_64 &rng, size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < a.size(); i++) {
        a.data()[i] = Complex(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
}

}  // namespace oracle

#endif
