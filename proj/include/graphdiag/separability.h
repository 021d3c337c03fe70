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

#ifndef GRAPHDIAG_SEPARABILITY_H
#define GRAPHDIAG_SEPARABILITY_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphdiag/bitstring.h"
#include "graphdiag/decomposition.h"
#include "graphdiag/graph.h"
#include "graphdiag/states.h"

namespace graphdiag {

/// Connected components of the subgraph induced on supp(y), by lowest vertex.
std::vector<BitString> basic_blocks(const Graph &g, const BitString &y);

/// (-1)^{w_x + #edges inside x}.
int h_sign(const Graph &g, uint64_t x);
int h_sign(const Graph &g, const BitString &x);

/// Thermal separable decomposition of a tree: the coefficient of
/// prod_{b in blocks(y)} (1 + K_b) is s^{w_y} f(tree minus N[supp y]).
/// The identity coefficient is f(s). n <= 20.
Decomposition tree_decomposition(const Graph &g, double s);

/// Decomposition of any graph-diagonal state into products over the
/// connected components of each y. Strings are processed from the highest
/// weight down; the coefficient of K_y is removed with one product term and
/// its lower-order cross terms are pushed to smaller strings. Negative
/// leftovers flip a block sign so term coefficients stay >= 0; the identity
/// coefficient absorbs everything else. n <= 14.
Decomposition block_decomposition(const DiagonalState &st);

struct OptimisedDecomposition {
    /// Largest t such that rho - t 1/2^N still decomposes; >= 0 certifies
    /// separability. Equals the identity coefficient of `decomposition`.
    double margin = 0;
    Decomposition decomposition;
};

/// Searches all signed products over component blocks by linear programming
/// for the decomposition leaving the most weight on the identity. n <= 6.
OptimisedDecomposition optimised_block_decomposition(const DiagonalState &st);

/// Partition of a connected two-colourable graph with |E| + |V| even into
/// nonempty V1, V2 where every vertex has an even number of neighbours on
/// the other side. Solved through the mod-2 Laplacian; the lexicographically
/// smallest V2 string (vertex 0 first) is returned. nullopt when the
/// preconditions fail.
std::optional<std::pair<BitString, BitString>> eulerian_edge_cut(const Graph &g);

/// Exhaustive search for any Eulerian edge cut, n <= 20.
bool eulerian_edge_cut_exists_brute(const Graph &g);

/// Thermal decomposition of a two-colourable graph. Each K_x is removed in
/// decreasing weight order: disconnected x splits into its components, a
/// connected x with h_x = -1 becomes (1 + K_x), and a connected x with
/// h_x = +1 uses an Eulerian cut y | r as (1 - h_y K_y)(1 - h_y K_r). The
/// identity coefficient ends at f(s). Positivity of the other coefficients is
/// reported through Decomposition::min_term_coefficient, not enforced. n <= 14.
Decomposition two_colourable_decomposition(const Graph &g, double s);

/// Max |table - state coefficients| of a decomposition. n <= 20.
double reconstruction_error(const Decomposition &d, const DiagonalState &st);

}  // namespace graphdiag

#endif
