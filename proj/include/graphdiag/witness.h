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

#ifndef GRAPHDIAG_WITNESS_H
#define GRAPHDIAG_WITNESS_H

#include <cstdint>

#include "graphdiag/bitstring.h"
#include "graphdiag/dense.h"
#include "graphdiag/graph.h"
#include "graphdiag/states.h"

namespace graphdiag {

/// W_{x,z} = 2^-N sum_y (-1)^{x.y} (-1)^{ecp(y,z)} K_y.
struct WitnessSpec {
    Graph graph;
    BitString x;
    BitString z;

    /// Throws unless x and z match the graph and z is nontrivial.
    void validate() const;
};

/// Tr(W rho) = f_{x,z} / 2^N for a graph-diagonal rho. Negative certifies entanglement.
double witness_expectation(const WitnessSpec &w, const DiagonalState &st, int threads = 1);

/// Dense W_{x,z}. n <= 8.
DenseOperator witness_operator(const WitnessSpec &w);

/// Projects rho onto the graph basis: sum_x |psi_x><psi_x| rho |psi_x><psi_x|.
DenseOperator dephase_graph_basis(const Graph &g, const DenseOperator &rho);

struct CircuitResult {
    double p0 = 0;
    /// 2 p0 - 1.
    double implied_trace = 0;
};

enum class CircuitMethod {
    /// Ancilla and rho register as a density matrix, one run per basis state
    /// of the maximally mixed register.
    BasisAverage,
    /// All 2n + 1 qubits as one density matrix. n <= 4.
    FullDensity,
};

/// Hadamard test estimating Tr(W_{x,z} rho).
///
/// Qubit 0 is the ancilla, qubits 1..n hold rho and n+1..2n a maximally mixed
/// register. rho is rotated out of the graph basis by controlled phases on E
/// and transversal H; then the ancilla controls CZ between matching qubits of
/// the two registers, Z_x and the crossing-edge phases CP_E^z on the mixed
/// register. n <= 6.
CircuitResult simulate_witness_circuit(const WitnessSpec &w, const DenseOperator &rho,
                                       CircuitMethod method = CircuitMethod::BasisAverage);

/// Hadamard test of Z_x CP_E^z on the product input prod (|0><0| + s|1><1|)/(1+s),
/// simulated as a mixture of pure states. 2 p0 - 1 = f_{x,z}(s)/(1+s)^N. n <= 12.
CircuitResult simulate_threshold_circuit(const Graph &g, const BitString &x, const BitString &z, double s);

struct SamplingCost {
    uint64_t samples = 0;
    /// True when fail_prob >= 1, so no samples are needed.
    bool degenerate = false;
};

/// Smallest k with 2 exp(-2 k eps^2) <= fail_prob.
SamplingCost sampling_cost(double epsilon, double fail_prob);

struct PartialWitnessResult {
    /// Vertices with at least one edge crossing z.
    BitString boundary;
    double value = 0;
};

/// Thermal witness restricted to the boundary set S of z: the expectation of
/// W_{x_S, z_S} on G[S], with the other qubits traced out. Equals the sum of
/// the 2^{N-|S|} full eigenvalues f_{(x_S, a), z} / 2^N over the free bits a.
PartialWitnessResult partial_witness(const Graph &g, const BitString &x, const BitString &z, const DiagonalState &st);

/// Boundary set S of z.
uint64_t crossing_boundary(const Graph &g, uint64_t z);

}  // namespace graphdiag

#endif
