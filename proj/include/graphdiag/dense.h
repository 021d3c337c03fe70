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

#ifndef GRAPHDIAG_DENSE_H
#define GRAPHDIAG_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "graphdiag/decomposition.h"
#include "graphdiag/graph.h"
#include "graphdiag/states.h"

namespace graphdiag {

/// Brute-force reference implementations. Qubit k is bit k of the basis index.
using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// i^phase X^x Z^z on n qubits (Z applied first).
struct PauliMatrix {
    int n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;

    static PauliMatrix identity(int n);
    /// K_v = X_v prod_{m in N(v)} Z_m.
    static PauliMatrix stabilizer_generator(const Graph &g, int v);
    /// K_y as the ordered product of generators.
    static PauliMatrix stabilizer(const Graph &g, uint64_t y);

    PauliMatrix operator*(const PauliMatrix &other) const;
    /// Entry (j ^ x, j) = i^phase (-1)^{|j & z|}.
    DenseOperator to_dense() const;
    /// Adds weight * this into `out` without forming the dense matrix.
    void add_to(DenseOperator &out, std::complex<double> weight) const;
};

/// Z_x as a dense diagonal matrix.
DenseOperator z_string(int n, uint64_t x);

/// |+>^n followed by a controlled phase per edge.
DenseVector graph_state_vector(const Graph &g);

/// rho = 2^-N sum_y s_y K_y. n <= 10.
DenseOperator build_state(const DiagonalState &st);

/// Transposes the tensor factors with z_k = 1.
DenseOperator partial_transpose(const DenseOperator &rho, uint64_t z);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eigenvalues(const DenseOperator &h);

/// 2^-N (identity + sum_t coefficient_t prod_b (1 + sign_b K_b)). n <= 8.
DenseOperator assemble_decomposition(const Decomposition &d);

/// (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z) on every qubit.
DenseOperator apply_local_depolarising(const DenseOperator &rho, double p);

/// Max |a - b| over entries.
double max_abs_diff(const DenseOperator &a, const DenseOperator &b);

/// True when the sorted multisets agree entrywise to `tol`.
bool spectra_match(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace graphdiag

#endif
