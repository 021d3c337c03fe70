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

#include "graphdiag/star.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "graphdiag/walsh_hadamard.h"

namespace graphdiag {

namespace {

bool is_centre_star(const Graph &g) {
    int n = g.num_vertices();
    if ((int)g.num_edges() != n - 1) {
        return false;
    }
    for (int v = 1; v < n; v++) {
        if (g.neighbours(v) != 1) {
            return false;
        }
    }
    return true;
}

/// Tensor product with `first` on qubit 0 (the least significant bit).
Eigen::MatrixXcd kron3(const Eigen::MatrixXcd &q0, const Eigen::MatrixXcd &q1, const Eigen::MatrixXcd &q2) {
    Eigen::MatrixXcd out(8, 8);
    for (int r = 0; r < 8; r++) {
        for (int c = 0; c < 8; c++) {
            out(r, c) = q0(r & 1, c & 1) * q1((r >> 1) & 1, (c >> 1) & 1) * q2((r >> 2) & 1, (c >> 2) & 1);
        }
    }
    return out;
}

}  // namespace

StarDecomposition star_decomposition(const DiagonalState &st) {
    const Graph &g = st.graph();
    int n = g.num_vertices();
    if (n < 2 || n > 16) {
        throw std::invalid_argument("star_decomposition: supported for 2 <= n <= 16");
    }
    if (!is_centre_star(g)) {
        throw std::invalid_argument("star_decomposition: graph must be a star centred on vertex 0");
    }
    int leaves = n - 1;
    uint64_t count = uint64_t{1} << leaves;
    // Leaf strings y live on bits 1..n-1; bit 0 selects K_0.
    std::vector<double> leaf_spectrum(count);
    std::vector<double> centre(count);
    for (uint64_t y = 0; y < count; y++) {
        leaf_spectrum[y] = st.coefficient(y << 1);
        centre[y] = st.coefficient((y << 1) | 1);
    }
    walsh_hadamard(leaf_spectrum);

    StarDecomposition out;
    out.leaf_minimum = *std::min_element(leaf_spectrum.begin(), leaf_spectrum.end());
    for (double v : centre) {
        out.centre_weight += std::fabs(v);
    }
    out.margin = out.leaf_minimum - out.centre_weight;

    Decomposition &d = out.decomposition;
    d.graph = g;
    d.identity = out.margin;
    for (uint64_t y = 0; y < count; y++) {
        if (centre[y] != 0) {
            d.terms.push_back({std::fabs(centre[y]), {(y << 1) | 1}, {centre[y] < 0 ? -1 : 1}});
        }
    }
    // sum_y s_{0y} K_{0y} - m = 2^-(n-1) sum_x (lambda_x - m) prod_l (1 + (-1)^{x_l} K_l).
    std::vector<uint64_t> leaf_blocks;
    for (int l = 1; l < n; l++) {
        leaf_blocks.push_back(uint64_t{1} << l);
    }
    for (uint64_t x = 0; x < count; x++) {
        double w = (leaf_spectrum[x] - out.leaf_minimum) / (double)count;
        if (w == 0) {
            continue;
        }
        std::vector<int> signs;
        for (int l = 0; l < leaves; l++) {
            signs.push_back(((x >> l) & 1) ? -1 : 1);
        }
        d.terms.push_back({w, leaf_blocks, signs});
    }
    if (n == 3) {
        double product = 1;
        for (double v : centre) {
            product *= v;
        }
        out.three_qubit_sign_condition = product >= 0;
    }
    return out;
}

DiagonalState star_counterexample_state(double alpha) {
    if (!(alpha > -1)) {
        throw std::invalid_argument("star_counterexample_state: alpha must exceed -1");
    }
    std::vector<double> table(8, 1.0);
    table[0] = 1 + alpha;
    table[0b101] = -1;  // K_0 K_2 with coefficient 1 - 2
    return DiagonalState::explicit_table(Graph::star(3), table);
}

TwistedStarDecomposition twisted_star_decomposition(double alpha) {
    using namespace std::complex_literals;
    const double root2 = std::numbers::sqrt2;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, -1i, 1i, 0;
    Z << 1, 0, 0, -1;
    Eigen::MatrixXcd id8 = Eigen::MatrixXcd::Identity(8, 8);

    Graph g = Graph::star(3);
    DenseOperator k1 = PauliMatrix::stabilizer(g, 0b010).to_dense();
    DenseOperator k2 = PauliMatrix::stabilizer(g, 0b100).to_dense();
    DenseOperator t1 = 0.5 * kron3(X + Y, Z + Y, Z - Y);
    DenseOperator t2 = 0.5 * kron3(X - Y, Z - Y, Z + Y);

    TwistedStarDecomposition out;
    out.alpha = alpha;
    out.margin = alpha - 2 * root2;
    out.valid = out.margin >= -1e-12;
    out.parts = {(id8 + k1) * (id8 + k2), t1 + root2 * id8, t2 + root2 * id8, out.margin * id8};
    for (const auto &t : {t1, t2}) {
        auto ev = eigenvalues(t);
        out.twisted_extremes.push_back(ev.front());
        out.twisted_extremes.push_back(ev.back());
    }
    out.min_part_eigenvalue = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; k++) {
        out.min_part_eigenvalue = std::min(out.min_part_eigenvalue, eigenvalues(out.parts[k]).front());
    }
    out.assembled = DenseOperator::Zero(8, 8);
    for (const auto &p : out.parts) {
        out.assembled += p;
    }
    out.assembled /= 8 * (1 + alpha);
    return out;
}

}  // namespace graphdiag
