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

#include "graphdiag/witness.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphdiag/chain.h"
#include "graphdiag/dense.h"
#include "graphdiag/oracle_checks.h"
#include "graphdiag/ppt.h"

namespace graphdiag {
namespace {

BitString bs(const char *text) {
    return BitString::from_string(text);
}

WitnessSpec optimal(const Graph &g) {
    auto labels = optimal_thermal_witness_labels(g);
    return {g, labels.x, *labels.z};
}

DenseOperator random_density(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    uint64_t dim = uint64_t{1} << n;
    DenseOperator a(dim, dim);
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            a(r, c) = {gauss(rng), gauss(rng)};
        }
    }
    DenseOperator rho = a * a.adjoint();
    return rho / rho.trace().real();
}

TEST(WitnessExpectation, ThreeChainAboveThreshold) {
    Graph g = Graph::chain(3);
    double v = witness_expectation(optimal(g), DiagonalState::thermal(g, 0.4));
    EXPECT_NEAR(v, -0.424 / 8, 1e-15);
}

TEST(WitnessExpectation, ZeroNoise) {
    Graph g = Graph::ring(6);
    EXPECT_NEAR(witness_expectation(optimal(g), DiagonalState::thermal(g, 0)), 1.0 / 64, 1e-17);
}

TEST(WitnessExpectation, VanishesAtThreshold) {
    for (int n : {3, 5, 8}) {
        Graph g = Graph::chain(n);
        double s = chain_critical_s(n);
        EXPECT_NEAR(witness_expectation(optimal(g), DiagonalState::thermal(g, s)), 0, 1e-9 / (1 << n));
    }
}

TEST(WitnessExpectation, EqualsDenseTrace) {
    CheckResult r = check_witness_operator(10, 20, 6);
    EXPECT_TRUE(r.passed) << r.worst;
}

TEST(WitnessSpec, ValidatesSizes) {
    WitnessSpec bad{Graph::chain(3), bs("11"), bs("010")};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    WitnessSpec trivial{Graph::chain(3), bs("111"), bs("000")};
    EXPECT_THROW(trivial.validate(), std::invalid_argument);
}

TEST(Witness, DephasingLeavesExpectationUnchanged) {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 50; k++) {
        int n = 2 + k % 3;
        Graph g = random_graph(n, rng);
        WitnessSpec w{g, BitString(rng() & g.all_vertices(), n), BitString(random_bipartition(n, rng), n)};
        DenseOperator rho = random_density(n, rng);
        DenseOperator op = witness_operator(w);
        double full = (op * rho).trace().real();
        double dephased = (op * dephase_graph_basis(g, rho)).trace().real();
        EXPECT_NEAR(full, dephased, 1e-12);
    }
}

TEST(Witness, DephasedStateIsGraphDiagonal) {
    std::mt19937_64 rng(45);
    Graph g = Graph::chain(3);
    DenseOperator rd = dephase_graph_basis(g, random_density(3, rng));
    for (int v = 0; v < 3; v++) {
        DenseOperator k = PauliMatrix::stabilizer_generator(g, v).to_dense();
        EXPECT_LT((k * rd - rd * k).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(WitnessCircuit, PureGraphState) {
    Graph g = Graph::chain(3);
    DiagonalState pure = DiagonalState::explicit_table(g, std::vector<double>(8, 1.0));
    WitnessSpec w{g, bs("000"), bs("010")};
    CircuitResult c = simulate_witness_circuit(w, build_state(pure));
    // All s_y = 1: sum of crossing signs.
    double sum = 0;
    for (uint64_t y = 0; y < 8; y++) {
        sum += edge_cross_parity(g, y, 0b010) ? -1 : 1;
    }
    EXPECT_NEAR(c.implied_trace, sum / 8, 1e-12);
    EXPECT_NEAR(c.p0, 0.5 * (1 + c.implied_trace), 1e-15);
}

TEST(WitnessCircuit, MaximallyMixedInput) {
    Graph g = Graph::star(4);
    DenseOperator mixed = DenseOperator::Identity(16, 16) / 16.0;
    CircuitResult c = simulate_witness_circuit({g, bs("1011"), bs("0111")}, mixed);
    EXPECT_NEAR(c.implied_trace, 1.0 / 16, 1e-12);
}

TEST(WitnessCircuit, ThermalFourChain) {
    Graph g = Graph::chain(4);
    DiagonalState st = DiagonalState::thermal(g, 0.3);
    WitnessSpec w = optimal(g);
    EXPECT_NEAR(simulate_witness_circuit(w, build_state(st)).implied_trace, witness_expectation(w, st), 1e-12);
}

TEST(WitnessCircuit, BothSimulationPathsAgree) {
    std::mt19937_64 rng(46);
    for (int k = 0; k < 15; k++) {
        int n = 1 + k % 4;
        Graph g = random_graph(n, rng);
        if (n == 1) {
            continue;
        }
        WitnessSpec w{g, BitString(rng() & g.all_vertices(), n), BitString(random_bipartition(n, rng), n)};
        DenseOperator rho = random_density(n, rng);
        CircuitResult a = simulate_witness_circuit(w, rho, CircuitMethod::BasisAverage);
        CircuitResult b = simulate_witness_circuit(w, rho, CircuitMethod::FullDensity);
        EXPECT_NEAR(a.p0, b.p0, 1e-12);
        // Off-diagonal parts never reach the ancilla.
        EXPECT_NEAR(a.implied_trace, (witness_operator(w) * rho).trace().real(), 1e-12);
    }
}

TEST(WitnessCircuit, RandomDiagonalStates) {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 30; k++) {
        int n = 2 + k % 5;
        Graph g = random_graph(n, rng);
        DiagonalState st = random_state(g, k, rng);
        WitnessSpec w{g, BitString(rng() & g.all_vertices(), n), BitString(random_bipartition(n, rng), n)};
        EXPECT_NEAR(simulate_witness_circuit(w, build_state(st)).implied_trace, witness_expectation(w, st), 1e-9);
    }
}

TEST(ThresholdCircuit, Examples) {
    EXPECT_NEAR(simulate_threshold_circuit(Graph::chain(4), bs("1111"), bs("0101"), 0).p0, 1, 1e-15);
    CircuitResult c = simulate_threshold_circuit(Graph::chain(3), bs("111"), bs("010"), 0.2);
    EXPECT_NEAR(c.implied_trace, 0.352 / 1.728, 1e-14);
    double crit = chain_critical_s(4);
    EXPECT_NEAR(simulate_threshold_circuit(Graph::chain(4), bs("1111"), bs("0101"), crit).p0, 0.5, 1e-12);
}

TEST(ThresholdCircuit, MatchesFastEvaluator) {
    std::mt19937_64 rng(48);
    for (int k = 0; k < 20; k++) {
        int n = 2 + k % 9;
        Graph g = random_bipartite_graph(n, rng);
        auto colour = two_colouring(g);
        if (colour.colouring->bits == 0) {
            continue;
        }
        double s = std::uniform_real_distribution<double>(0, 0.9)(rng);
        CircuitResult c = simulate_threshold_circuit(g, BitString::ones(n), *colour.colouring, s);
        EXPECT_NEAR(c.implied_trace * std::pow(1 + s, n), fast_bipartite_f(g, s), 1e-9);
    }
}

TEST(SamplingCost, Chernoff) {
    SamplingCost c = sampling_cost(0.1, 0.05);
    EXPECT_EQ(c.samples, 185u);
    EXPECT_FALSE(c.degenerate);
    EXPECT_LE(2 * std::exp(-2 * 185 * 0.01), 0.05);
    EXPECT_GT(2 * std::exp(-2 * 184 * 0.01), 0.05);
    EXPECT_LE(sampling_cost(1, 0.05).samples, 2u);
    SamplingCost d = sampling_cost(0.1, 2);
    EXPECT_TRUE(d.degenerate);
    EXPECT_EQ(d.samples, 0u);
    EXPECT_THROW(sampling_cost(0, 0.1), std::invalid_argument);
}

TEST(PartialWitness, FullBoundaryIsWholeWitness) {
    Graph g = Graph::chain(5);
    DiagonalState st = DiagonalState::thermal(g, 0.25);
    WitnessSpec w = optimal(g);
    PartialWitnessResult p = partial_witness(g, w.x, w.z, st);
    EXPECT_TRUE(p.boundary.is_ones());
    EXPECT_NEAR(p.value, witness_expectation(w, st), 1e-15);
}

TEST(PartialWitness, SingleCutEdge) {
    Graph g = Graph::chain(6);
    DiagonalState st = DiagonalState::thermal(g, 0.5);
    PartialWitnessResult p = partial_witness(g, BitString::ones(6), bs("000111"), st);
    EXPECT_EQ(p.boundary.str(), "001100");
    EXPECT_NEAR(p.value, chain_f(2, 0.5) / 4, 1e-15);
}

TEST(PartialWitness, EqualsSumOfFullEigenvalues) {
    std::mt19937_64 rng(49);
    for (int k = 0; k < 20; k++) {
        int n = 2 + k % 7;
        Graph g = random_graph(n, rng);
        DiagonalState st = DiagonalState::thermal(g, std::uniform_real_distribution<double>(0, 0.9)(rng));
        uint64_t z = random_bipartition(n, rng);
        uint64_t x = rng() & g.all_vertices();
        PartialWitnessResult p = partial_witness(g, BitString(x, n), BitString(z, n), st);
        auto spec = pt_spectrum_all_x(st, z);
        uint64_t s_mask = p.boundary.bits;
        double sum = 0;
        for (uint64_t a = 0; a < spec.size(); a++) {
            if ((a & s_mask) == (x & s_mask)) {
                sum += spec[a];
            }
        }
        EXPECT_NEAR(p.value, std::ldexp(sum, -n), 1e-12) << "case " << k;
    }
}

TEST(PartialWitness, NestedWindowsNeverWeakenDetection) {
    Graph g = Graph::chain(8);
    double prev = 1;
    // Alternate z on a growing window [2, 2 + len); constant outside it.
    for (int len = 2; len <= 6; len++) {
        uint64_t z = 0;
        for (int v = 2; v < 2 + len; v++) {
            z |= uint64_t((v - 2) & 1) << v;
        }
        uint64_t last = (z >> (1 + len)) & 1;
        for (int v = 2 + len; v < 8; v++) {
            z |= last << v;
        }
        BitString zs(z, 8);
        ASSERT_EQ(popcount(crossing_boundary(g, z)), len);
        RootResult r = critical_s([&](double s) {
            return partial_witness(g, BitString::ones(8), zs, DiagonalState::thermal(g, s)).value;
        });
        ASSERT_TRUE(r.found);
        EXPECT_NEAR(r.s, chain_critical_s(len), 1e-10);
        EXPECT_LE(r.s, prev);
        prev = r.s;
    }
}

TEST(PartialWitness, RejectsNonThermal) {
    Graph g = Graph::chain(4);
    EXPECT_THROW(partial_witness(g, bs("1111"), bs("0101"), DiagonalState::global_depolarised(g, 3)),
                 std::invalid_argument);
}

}  // namespace
}  // namespace graphdiag
