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

#include "graphdiag/dense.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphdiag {

namespace {

std::complex<double> i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

void require_dense_size(int n, int limit, const char *what) {
    if (n < 0 || n > limit) {
        throw std::invalid_argument(std::string(what) + ": dense oracle limited to " + std::to_string(limit) + " qubits");
    }
}

}  // namespace

PauliMatrix PauliMatrix::identity(int n) {
    return {n, 0, 0, 0};
}

PauliMatrix PauliMatrix::stabilizer_generator(const Graph &g, int v) {
    return {g.num_vertices(), uint64_t{1} << v, g.neighbours(v), 0};
}

PauliMatrix PauliMatrix::stabilizer(const Graph &g, uint64_t y) {
    PauliMatrix out = identity(g.num_vertices());
    for (; y; y &= y - 1) {
        out = out * stabilizer_generator(g, std::countr_zero(y));
    }
    return out;
}

PauliMatrix PauliMatrix::operator*(const PauliMatrix &other) const {
    // X^a Z^b X^c Z^d = (-1)^{|b & c|} X^{a^c} Z^{b^d}.
    return {n, x ^ other.x, z ^ other.z, (phase + other.phase + 2 * popcount(z & other.x)) % 4};
}

void PauliMatrix::add_to(DenseOperator &out, std::complex<double> weight) const {
    std::complex<double> w = weight * i_power(phase);
    uint64_t dim = uint64_t{1} << n;
    for (uint64_t j = 0; j < dim; j++) {
        out(j ^ x, j) += (popcount(j & z) & 1) ? -w : w;
    }
}

DenseOperator PauliMatrix::to_dense() const {
    require_dense_size(n, 12, "PauliMatrix::to_dense");
    DenseOperator out = DenseOperator::Zero(1 << n, 1 << n);
    add_to(out, 1.0);
    return out;
}

DenseOperator z_string(int n, uint64_t x) {
    require_dense_size(n, 12, "z_string");
    return PauliMatrix{n, 0, x, 0}.to_dense();
}

DenseVector graph_state_vector(const Graph &g) {
    int n = g.num_vertices();
    require_dense_size(n, 20, "graph_state_vector");
    uint64_t dim = uint64_t{1} << n;
    DenseVector psi = DenseVector::Constant(dim, std::pow(2.0, -n / 2.0));
    for (const auto &[a, b] : g.edges()) {
        for (uint64_t j = 0; j < dim; j++) {
            if (((j >> a) & 1) && ((j >> b) & 1)) {
                psi(j) = -psi(j);
            }
        }
    }
    return psi;
}

DenseOperator build_state(const DiagonalState &st) {
    int n = st.num_qubits();
    require_dense_size(n, 10, "build_state");
    uint64_t dim = uint64_t{1} << n;
    DenseOperator rho = DenseOperator::Zero(dim, dim);
    double norm = 1.0 / (double)dim;
    for (uint64_t y = 0; y < dim; y++) {
        double s = st.coefficient(y);
        if (s != 0) {
            PauliMatrix::stabilizer(st.graph(), y).add_to(rho, s * norm);
        }
    }
    return rho;
}

DenseOperator partial_transpose(const DenseOperator &rho, uint64_t z) {
    uint64_t dim = rho.rows();
    if (rho.cols() != (Eigen::Index)dim || dim == 0 || (dim & (dim - 1))) {
        throw std::invalid_argument("partial_transpose: operator must be square with power-of-two size");
    }
    z &= dim - 1;
    DenseOperator out(dim, dim);
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            uint64_t r2 = (r & ~z) | (c & z);
            uint64_t c2 = (c & ~z) | (r & z);
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

std::vector<double> eigenvalues(const DenseOperator &h) {
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: diagonalisation failed");
    }
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

DenseOperator assemble_decomposition(const Decomposition &d) {
    int n = d.graph.num_vertices();
    require_dense_size(n, 8, "assemble_decomposition");
    uint64_t dim = uint64_t{1} << n;
    double norm = 1.0 / (double)dim;
    DenseOperator out = DenseOperator::Zero(dim, dim);
    out.diagonal().array() += d.identity * norm;
    for (const auto &term : d.terms) {
        DenseOperator prod = DenseOperator::Identity(dim, dim);
        for (size_t b = 0; b < term.blocks.size(); b++) {
            DenseOperator factor = DenseOperator::Identity(dim, dim);
            PauliMatrix::stabilizer(d.graph, term.blocks[b]).add_to(factor, (double)term.signs[b]);
            prod = prod * factor;
        }
        out += (term.coefficient * norm) * prod;
    }
    return out;
}

DenseOperator apply_local_depolarising(const DenseOperator &rho, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("apply_local_depolarising: p must lie in [0, 1]");
    }
    uint64_t dim = rho.rows();
    DenseOperator cur = rho;
    for (uint64_t bit = 1; bit < dim; bit <<= 1) {
        DenseOperator next(dim, dim);
        for (uint64_t r = 0; r < dim; r++) {
            for (uint64_t c = 0; c < dim; c++) {
                bool same = ((r ^ c) & bit) == 0;
                // X rho X + Y rho Y = (1 + (-1)^{r_b + c_b}) rho(r^b, c^b); Z rho Z = (-1)^{r_b + c_b} rho.
                std::complex<double> flipped = same ? 2.0 * cur(r ^ bit, c ^ bit) : std::complex<double>(0);
                std::complex<double> zz = same ? cur(r, c) : -cur(r, c);
                next(r, c) = (1 - 0.75 * p) * cur(r, c) + 0.25 * p * (flipped + zz);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t k = 0; k < a.size(); k++) {
        if (std::fabs(a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace graphdiag
