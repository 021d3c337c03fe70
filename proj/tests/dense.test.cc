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
#include "graphdiag/oracle_checks.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace graphdiag {
namespace {

DenseOperator identity_over(int n) {
    return DenseOperator::Identity(int64_t{1} << n, int64_t{1} << n) / double(int64_t{1} << n);
}

TEST(Dense, LimitsOfThermalState) {
    Graph g = Graph::ring(4);
    EXPECT_LT(max_abs_diff(build_state(DiagonalState::thermal(g, 0)), identity_over(4)), 1e-15);
    DenseVector psi = graph_state_vector(g);
    DenseOperator pure = psi * psi.adjoint();
    EXPECT_LT(max_abs_diff(build_state(DiagonalState::thermal(g, 1 - 1e-10)), pure), 1e-9);
    EXPECT_NEAR(psi.norm(), 1, 1e-15);
}

TEST(Dense, RandomStatesArePhysical) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; k++) {
        int n = 2 + k % 4;
        Graph g = random_graph(n, rng);
        DiagonalState st = random_state(g, k % 5, rng);
        DenseOperator rho = build_state(st);
        EXPECT_NEAR(rho.trace().real(), 1, 1e-12);
        EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_GT(eigenvalues(rho).front(), -1e-12);
        for (int v = 0; v < n; v++) {
            DenseOperator kv = PauliMatrix::stabilizer_generator(g, v).to_dense();
            EXPECT_LT((kv * rho - rho * kv).cwiseAbs().maxCoeff(), 1e-13) << k << " " << v;
        }
    }
}

TEST(Dense, PartialTransposeExample) {
    DenseOperator rho = build_state(DiagonalState::thermal(Graph::chain(2), 0.5));
    std::vector<double> ev = eigenvalues(partial_transpose(rho, 0b01));
    EXPECT_NEAR(ev.front(), -0.25 / 4, 1e-14);
    double sum = 0;
    for (double e : ev) {
        sum += e;
    }
    EXPECT_NEAR(sum, 1, 1e-14);
}

TEST(Dense, TrivialCutsPreserveSpectrum) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; k++) {
        int n = 2 + k % 4;
        DenseOperator rho = build_state(random_state(random_graph(n, rng), k % 5, rng));
        uint64_t all = (uint64_t{1} << n) - 1;
        std::vector<double> ev = eigenvalues(rho);
        EXPECT_TRUE(spectra_match(ev, eigenvalues(partial_transpose(rho, 0)), 1e-12));
        EXPECT_TRUE(spectra_match(ev, eigenvalues(partial_transpose(rho, all)), 1e-12));
        // Transposing the complement gives the same spectrum.
        uint64_t z = random_bipartition(n, rng);
        EXPECT_TRUE(spectra_match(eigenvalues(partial_transpose(rho, z)),
                                  eigenvalues(partial_transpose(rho, all ^ z)), 1e-12));
    }
}

TEST(Dense, PartialTransposeRejectsBadShape) {
    EXPECT_THROW(partial_transpose(DenseOperator::Zero(3, 3), 1), std::invalid_argument);
    EXPECT_THROW(partial_transpose(DenseOperator::Zero(2, 4), 1), std::invalid_argument);
}

TEST(Dense, AssembleDecomposition) {
    Decomposition d;
    d.graph = Graph::chain(3);
    EXPECT_EQ(assemble_decomposition(d).cwiseAbs().maxCoeff(), 0);
    d.identity = 1;
    EXPECT_LT(max_abs_diff(assemble_decomposition(d), identity_over(3)), 1e-16);
    d.identity = 0;
    d.terms.push_back({1.0, {0b011}, {-1}});
    DenseOperator k01 = PauliMatrix::stabilizer(d.graph, 0b011).to_dense();
    DenseOperator expect = (DenseOperator::Identity(8, 8) - k01) / 8.0;
    EXPECT_LT(max_abs_diff(assemble_decomposition(d), expect), 1e-15);
}

TEST(Stabilizer, TraceOrthogonality) {
    for (int n = 1; n <= 5; n++) {
        std::mt19937_64 rng(n);
        Graph g = random_graph(n, rng);
        uint64_t dim = uint64_t{1} << n;
        for (uint64_t y = 0; y < dim; y++) {
            DenseOperator ky = PauliMatrix::stabilizer(g, y).to_dense();
            for (uint64_t z = 0; z < dim; z++) {
                DenseOperator kz = PauliMatrix::stabilizer(g, z).to_dense();
                for (uint64_t x = 0; x < dim; x += 1 + dim / 8) {
                    std::complex<double> tr = (ky * kz * z_string(n, x)).trace();
                    double expect = (y == z && x == 0) ? double(dim) : 0.0;
                    EXPECT_NEAR(tr.real(), expect, 1e-12);
                    EXPECT_NEAR(tr.imag(), 0, 1e-12);
                }
            }
        }
    }
}

TEST(Stabilizer, ProductOfGenerators) {
    Graph g = Graph::lattice(2, 2);
    DenseOperator prod = DenseOperator::Identity(16, 16);
    for (int v : {0, 2, 3}) {
        prod = prod * PauliMatrix::stabilizer_generator(g, v).to_dense();
    }
    EXPECT_LT(max_abs_diff(prod, PauliMatrix::stabilizer(g, 0b1101).to_dense()), 1e-15);
}

TEST(Stabilizer, ZStringsFlipEigenvalues) {
    Graph g = Graph::star(4);
    DenseVector psi = graph_state_vector(g);
    for (uint64_t x = 0; x < 16; x++) {
        DenseVector phi = z_string(4, x) * psi;
        for (int v = 0; v < 4; v++) {
            double sign = (x >> v & 1) ? -1 : 1;
            DenseVector kphi = PauliMatrix::stabilizer_generator(g, v).to_dense() * phi;
            EXPECT_LT((kphi - sign * phi).norm(), 1e-14) << x << " " << v;
        }
    }
}

TEST(Channel, DepolarisingLimits) {
    DenseVector psi = graph_state_vector(Graph::chain(3));
    DenseOperator rho = psi * psi.adjoint();
    EXPECT_LT(max_abs_diff(apply_local_depolarising(rho, 0), rho), 1e-16);
    EXPECT_LT(max_abs_diff(apply_local_depolarising(rho, 1), identity_over(3)), 1e-15);
    EXPECT_THROW(apply_local_depolarising(rho, 1.5), std::invalid_argument);
    DenseOperator half = apply_local_depolarising(rho, 0.5);
    EXPECT_NEAR(half.trace().real(), 1, 1e-15);
}

TEST(Oracle, SuiteRuns) {
    for (const CheckResult &r : run_oracle_suite("all", 77)) {
        EXPECT_TRUE(r.passed) << r.name << " worst " << r.worst << " " << r.detail;
        EXPECT_GT(r.cases, 0) << r.name;
    }
    EXPECT_THROW(run_oracle_suite("nope", 1), std::invalid_argument);
}

TEST(Oracle, RandomTreesAreConnected) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 10; n++) {
        Graph t = random_tree(n, rng);
        EXPECT_EQ(t.num_edges(), size_t(n - 1));
        EXPECT_TRUE(bool(two_colouring(t)));
    }
}

}  // namespace
}  // namespace graphdiag
