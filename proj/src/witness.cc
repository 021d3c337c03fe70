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

#include <cmath>
#include <stdexcept>
#include <variant>

#include "graphdiag/circuit_sim.h"
#include "graphdiag/ppt.h"

namespace graphdiag {

void WitnessSpec::validate() const {
    int n = graph.num_vertices();
    if (x.n != n || z.n != n) {
        throw std::invalid_argument("witness: x and z must have one bit per vertex");
    }
    if (z.is_zero() || z.is_ones()) {
        throw std::invalid_argument("witness: bipartition must be nontrivial");
    }
}

double witness_expectation(const WitnessSpec &w, const DiagonalState &st, int threads) {
    w.validate();
    if (!(st.graph() == w.graph)) {
        throw std::invalid_argument("witness_expectation: state and witness use different graphs");
    }
    return std::ldexp(pt_eigenvalue(st, w.x, w.z, threads), -st.num_qubits());
}

DenseOperator witness_operator(const WitnessSpec &w) {
    w.validate();
    int n = w.graph.num_vertices();
    if (n > 8) {
        throw std::invalid_argument("witness_operator: dense form limited to 8 qubits");
    }
    uint64_t dim = uint64_t{1} << n;
    DenseOperator out = DenseOperator::Zero(dim, dim);
    for (uint64_t y = 0; y < dim; y++) {
        int sign = (dot_parity(w.x.bits, y) ^ edge_cross_parity(w.graph, y, w.z.bits)) ? -1 : 1;
        PauliMatrix::stabilizer(w.graph, y).add_to(out, sign / (double)dim);
    }
    return out;
}

DenseOperator dephase_graph_basis(const Graph &g, const DenseOperator &rho) {
    int n = g.num_vertices();
    if (n > 10 || rho.rows() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("dephase_graph_basis: size mismatch or more than 10 qubits");
    }
    DenseVector psi = graph_state_vector(g);
    uint64_t dim = uint64_t{1} << n;
    DenseOperator out = DenseOperator::Zero(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        DenseVector v = psi;
        for (uint64_t j = 0; j < dim; j++) {
            if (popcount(j & x) & 1) {
                v(j) = -v(j);
            }
        }
        std::complex<double> weight = v.dot(rho * v);
        out += weight * v * v.adjoint();
    }
    return out;
}

namespace {

/// CP_E then transversal H on the rho register (qubits offset..offset+n-1).
template <typename Sim>
void unmap_graph_basis(Sim &sim, const Graph &g, int offset) {
    for (const auto &[a, b] : g.edges()) {
        sim.cz(offset + a, offset + b);
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        sim.h(offset + v);
    }
}

/// Phase of Z_x CP_E^z on basis state m: +1 or -1.
int mixed_register_sign(const WitnessSpec &w, uint64_t m) {
    return (dot_parity(w.x.bits, m) ^ edge_cross_parity(w.graph, m, w.z.bits)) ? -1 : 1;
}

CircuitResult make_result(double p0) {
    return {p0, 2 * p0 - 1};
}

}  // namespace

CircuitResult simulate_witness_circuit(const WitnessSpec &w, const DenseOperator &rho, CircuitMethod method) {
    w.validate();
    int n = w.graph.num_vertices();
    if (rho.rows() != (Eigen::Index{1} << n) || rho.cols() != rho.rows()) {
        throw std::invalid_argument("simulate_witness_circuit: rho has the wrong dimension");
    }
    if (method == CircuitMethod::FullDensity) {
        if (n > 4) {
            throw std::invalid_argument("simulate_witness_circuit: full density path limited to 4 qubits");
        }
        DensityMatrix sim = DensityMatrix::with_zero_ancillas(1, rho).tensor_maximally_mixed(n);
        unmap_graph_basis(sim, w.graph, 1);
        sim.h(0);
        for (int v = 0; v < n; v++) {
            sim.ccz(0, 1 + v, 1 + n + v);
        }
        for (int v = 0; v < n; v++) {
            if (w.x[v]) {
                sim.cz(0, 1 + n + v);
            }
        }
        for (const auto &[a, b] : w.graph.edges()) {
            if (w.z[a] != w.z[b]) {
                sim.ccz(0, 1 + n + a, 1 + n + b);
            }
        }
        sim.h(0);
        return make_result(sim.probability_zero(0));
    }

    if (n > 6) {
        throw std::invalid_argument("simulate_witness_circuit: limited to 6 qubits");
    }
    // Every gate touching the mixed register is diagonal, so each of its basis
    // states m stays put and only contributes phases.
    double total = 0;
    uint64_t dim = uint64_t{1} << n;
    for (uint64_t m = 0; m < dim; m++) {
        DensityMatrix sim = DensityMatrix::with_zero_ancillas(1, rho);
        unmap_graph_basis(sim, w.graph, 1);
        sim.h(0);
        for (int v = 0; v < n; v++) {
            if ((m >> v) & 1) {
                sim.cz(0, 1 + v);
            }
        }
        if (mixed_register_sign(w, m) < 0) {
            sim.z(0);
        }
        sim.h(0);
        total += sim.probability_zero(0);
    }
    return make_result(total / (double)dim);
}

CircuitResult simulate_threshold_circuit(const Graph &g, const BitString &x, const BitString &z, double s) {
    WitnessSpec w{g, x, z};
    w.validate();
    int n = g.num_vertices();
    if (n > 12) {
        throw std::invalid_argument("simulate_threshold_circuit: limited to 12 qubits");
    }
    if (!(s >= 0 && s < 1)) {
        throw std::invalid_argument("simulate_threshold_circuit: s must lie in [0, 1)");
    }
    PairwiseSum p0;
    for (uint64_t m = 0; m < (uint64_t{1} << n); m++) {
        double weight = std::pow(s, popcount(m)) / std::pow(1 + s, n);
        if (weight == 0) {
            continue;
        }
        // Ancilla is qubit 0, the register qubits 1..n start in |m>.
        StateVector sv(n + 1, m << 1);
        sv.h(0);
        for (int v = 0; v < n; v++) {
            if (x[v]) {
                sv.cz(0, 1 + v);
            }
        }
        for (const auto &[a, b] : g.edges()) {
            if (z[a] != z[b]) {
                sv.ccz(0, 1 + a, 1 + b);
            }
        }
        sv.h(0);
        p0.add(weight * sv.probability_zero(0));
    }
    return make_result(p0.total());
}

SamplingCost sampling_cost(double epsilon, double fail_prob) {
    if (!(epsilon > 0) || !(fail_prob > 0)) {
        throw std::invalid_argument("sampling_cost: epsilon and fail probability must be positive");
    }
    if (fail_prob >= 1) {
        return {0, true};
    }
    double k = std::log(2 / fail_prob) / (2 * epsilon * epsilon);
    uint64_t samples = (uint64_t)std::ceil(k);
    // Guard against ceil landing one above an exact integer through rounding.
    if (samples > 0 && 2 * std::exp(-2.0 * (samples - 1) * epsilon * epsilon) <= fail_prob) {
        samples--;
    }
    return {samples, false};
}

uint64_t crossing_boundary(const Graph &g, uint64_t z) {
    uint64_t out = 0;
    for (const auto &[a, b] : g.edges()) {
        if (((z >> a) ^ (z >> b)) & 1) {
            out |= (uint64_t{1} << a) | (uint64_t{1} << b);
        }
    }
    return out;
}

PartialWitnessResult partial_witness(const Graph &g, const BitString &x, const BitString &z, const DiagonalState &st) {
    WitnessSpec w{g, x, z};
    w.validate();
    const auto *thermal = std::get_if<Thermal>(&st.model());
    if (!thermal) {
        throw std::invalid_argument("partial_witness: only thermal states are supported");
    }
    uint64_t boundary = crossing_boundary(g, z.bits);
    PartialWitnessResult out{BitString(boundary, g.num_vertices()), 1.0};
    if (!boundary) {
        return out;
    }
    InducedSubgraph sub = induced_subgraph(g, boundary);
    DiagonalState local = DiagonalState::thermal(sub.graph, thermal->s);
    int k = sub.graph.num_vertices();
    out.value = std::ldexp(pt_eigenvalue_sum(local, sub.restrict(x.bits), sub.restrict(z.bits)).value, -k);
    return out;
}

}  // namespace graphdiag
