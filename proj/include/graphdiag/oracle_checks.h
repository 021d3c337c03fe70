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

#ifndef GRAPHDIAG_ORACLE_CHECKS_H
#define GRAPHDIAG_ORACLE_CHECKS_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphdiag/dense.h"
#include "graphdiag/graph.h"
#include "graphdiag/states.h"

namespace graphdiag {

/// Outcome of one cross-check between the formula path and the dense oracle.
struct CheckResult {
    std::string name;
    bool passed = false;
    int cases = 0;
    /// Largest deviation seen.
    double worst = 0;
    std::string detail;
};

/// G(n, 1/2) random graph.
Graph random_graph(int n, std::mt19937_64 &rng);
/// Uniform random labelled tree via random parent links.
Graph random_tree(int n, std::mt19937_64 &rng);
/// Random connected two-colourable graph: a random tree plus even-length chords.
Graph random_bipartite_graph(int n, std::mt19937_64 &rng);
/// Random nontrivial bipartition.
uint64_t random_bipartition(int n, std::mt19937_64 &rng);
/// Random physical state; model_index picks thermal, inhomogeneous, global,
/// local or explicit (modulo 5).
DiagonalState random_state(const Graph &g, int model_index, std::mt19937_64 &rng);

/// Formula PT spectra against dense rho^PT eigenvalues, cycling through every model.
/// rho built from the model's physical definition (generator products, the
/// depolarised projector, the local channel, or a graph-basis mixture), never
/// from coefficient().
DenseOperator physical_state(const DiagonalState &st);

CheckResult check_pt_spectra(uint64_t seed, int cases = 50, int n_max = 8);
/// s_y against Tr(rho K_y) for every model.
CheckResult check_coefficients(uint64_t seed, int cases = 20, int n_max = 6);
/// Local depolarising coefficients against applying the channel to |psi><psi|.
CheckResult check_local_channel(int n_max = 6);
/// Dense reassembly of tree, two-colourable, block and star decompositions.
CheckResult check_decompositions(uint64_t seed, int cases = 20, int n_max = 7);
/// Witness operator expectation against the PT eigenvalue formula.
CheckResult check_witness_operator(uint64_t seed, int cases = 20, int n_max = 6);

/// Names accepted by run_oracle_suite: all, spectra, coefficients, channel,
/// decompositions, witness.
std::vector<CheckResult> run_oracle_suite(const std::string &suite, uint64_t seed);

}  // namespace graphdiag

#endif
