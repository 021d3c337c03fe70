// Copyright 2026 The graphdiag Authors
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

#include "graphdiag/circuit_sim.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphdiag {

namespace {

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::out_of_range("qubit index out of range");
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, uint64_t basis) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 24) {
        throw std::invalid_argument("StateVector: 1 to 24 qubits supported");
    }
    amp_ = DenseVector::Zero(uint64_t{1} << n_);
    amp_(basis) = 1;
}

void StateVector::h(int q) {
    check_qubit(q, n_);
    uint64_t bit = uint64_t{1} << q;
    const double r = std::numbers::sqrt2 / 2;
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if (!(j & bit)) {
            auto a = amp_(j), b = amp_(j | bit);
            amp_(j) = r * (a + b);
            amp_(j | bit) = r * (a - b);
        }
    }
}

void StateVector::x(int q) {
    check_qubit(q, n_);
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if (!(j & bit)) {
            std::swap(amp_(j), amp_(j | bit));
        }
    }
}

void StateVector::z(int q) {
    check_qubit(q, n_);
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if ((j >> q) & 1) {
            amp_(j) = -amp_(j);
        }
    }
}

void StateVector::cz(int a, int b) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if ((j & mask) == mask) {
            amp_(j) = -amp_(j);
        }
    }
}

void StateVector::ccz(int a, int b, int c) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    check_qubit(c, n_);
    uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b) | (uint64_t{1} << c);
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if ((j & mask) == mask) {
            amp_(j) = -amp_(j);
        }
    }
}

double StateVector::probability_zero(int q) const {
    check_qubit(q, n_);
    double p = 0;
    for (uint64_t j = 0; j < (uint64_t)amp_.size(); j++) {
        if (!((j >> q) & 1)) {
            p += std::norm(amp_(j));
        }
    }
    return p;
}

DensityMatrix::DensityMatrix(DenseOperator rho) : rho_(std::move(rho)) {
    uint64_t dim = rho_.rows();
    if (rho_.cols() != (Eigen::Index)dim || dim < 2 || (dim & (dim - 1))) {
        throw std::invalid_argument("DensityMatrix: need a square power-of-two matrix");
    }
    n_ = std::countr_zero(dim);
    if (n_ > 12) {
        throw std::invalid_argument("DensityMatrix: at most 12 qubits");
    }
}

DensityMatrix DensityMatrix::with_zero_ancillas(int ancillas, const DenseOperator &rho) {
    uint64_t dim = rho.rows();
    uint64_t big = dim << ancillas;
    DenseOperator out = DenseOperator::Zero(big, big);
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            out(r << ancillas, c << ancillas) = rho(r, c);
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix DensityMatrix::tensor_maximally_mixed(int m) const {
    uint64_t dim = rho_.rows();
    uint64_t extra = uint64_t{1} << m;
    DenseOperator out = DenseOperator::Zero(dim * extra, dim * extra);
    for (uint64_t k = 0; k < extra; k++) {
        out.block(k * dim, k * dim, dim, dim) = rho_ / (double)extra;
    }
    return DensityMatrix(std::move(out));
}

template <typename Sign>
void DensityMatrix::apply_diagonal(Sign &&sign) {
    uint64_t dim = rho_.rows();
    std::vector<int> s(dim);
    for (uint64_t j = 0; j < dim; j++) {
        s[j] = sign(j);
    }
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            if (s[r] != s[c]) {
                rho_(r, c) = -rho_(r, c);
            }
        }
    }
}

void DensityMatrix::h(int q) {
    check_qubit(q, n_);
    uint64_t bit = uint64_t{1} << q;
    uint64_t dim = rho_.rows();
    const double half = 0.5;
    // Rows then columns: rho -> H rho H.
    for (uint64_t r = 0; r < dim; r++) {
        if (r & bit) {
            continue;
        }
        for (uint64_t c = 0; c < dim; c++) {
            auto a = rho_(r, c), b = rho_(r | bit, c);
            rho_(r, c) = a + b;
            rho_(r | bit, c) = a - b;
        }
    }
    for (uint64_t c = 0; c < dim; c++) {
        if (c & bit) {
            continue;
        }
        for (uint64_t r = 0; r < dim; r++) {
            auto a = rho_(r, c), b = rho_(r, c | bit);
            rho_(r, c) = half * (a + b);
            rho_(r, c | bit) = half * (a - b);
        }
    }
}

void DensityMatrix::z(int q) {
    check_qubit(q, n_);
    apply_diagonal([q](uint64_t j) { return (int)((j >> q) & 1); });
}

void DensityMatrix::cz(int a, int b) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    apply_diagonal([a, b](uint64_t j) { return (int)((j >> a) & (j >> b) & 1); });
}

void DensityMatrix::ccz(int a, int b, int c) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    check_qubit(c, n_);
    apply_diagonal([a, b, c](uint64_t j) { return (int)((j >> a) & (j >> b) & (j >> c) & 1); });
}

double DensityMatrix::probability_zero(int q) const {
    check_qubit(q, n_);
    double p = 0;
    for (uint64_t j = 0; j < (uint64_t)rho_.rows(); j++) {
        if (!((j >> q) & 1)) {
            p += rho_(j, j).real();
        }
    }
    return p;
}

}  // namespace graphdiag
