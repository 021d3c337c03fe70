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

#ifndef GRAPHDIAG_STAR_H
#define GRAPHDIAG_STAR_H

#include <optional>
#include <vector>

#include "graphdiag/decomposition.h"
#include "graphdiag/dense.h"
#include "graphdiag/states.h"

namespace graphdiag {

struct StarDecomposition {
    /// Terms |s_{1y}| (1 + sgn K_{1y}) for the centre strings, the leaf group
    /// sum_y s_{0y} K_{0y} - m 1 as a mixture of leaf products, and the
    /// identity m - sum_y |s_{1y}|.
    Decomposition decomposition;
    /// m = min_x sum_y s_{0y} (-1)^{x.y}.
    double leaf_minimum = 0;
    double centre_weight = 0;
    /// m - sum_y |s_{1y}|; the decomposition is valid iff this is >= 0.
    double margin = 0;
    /// For three qubits, whether prod_y s_{1y} >= 0. Unset otherwise.
    std::optional<bool> three_qubit_sign_condition;
};

/// Star graph with vertex 0 at the centre. n <= 16.
StarDecomposition star_decomposition(const DiagonalState &st);

/// rho proportional to prod_n (1 + K_n) - 2 K_0 K_2 + alpha 1 on the 3-star
/// with centre 0. A valid state iff alpha >= 2, and PPT there; alpha > -1.
DiagonalState star_counterexample_state(double alpha);

struct TwistedStarDecomposition {
    double alpha = 0;
    /// alpha - 2 sqrt(2): the identity left after both twisted terms.
    double margin = 0;
    bool valid = false;
    /// (1 + K_1)(1 + K_2), T1 + sqrt2, T2 + sqrt2, margin * 1: each a
    /// positive combination of product operators when valid.
    std::vector<DenseOperator> parts;
    /// Extremal eigenvalues of T1 and T2 (min, max for each).
    std::vector<double> twisted_extremes;
    /// Smallest eigenvalue over the non-identity parts.
    double min_part_eigenvalue = 0;
    /// Sum of parts divided by 8 (1 + alpha); equals the counterexample state.
    DenseOperator assembled;
};

/// Decomposition with the twisted products
/// T1 = 1/2 (X+Y)(Z+Y)(Z-Y) and T2 = 1/2 (X-Y)(Z-Y)(Z+Y) on (centre, leaf, leaf).
TwistedStarDecomposition twisted_star_decomposition(double alpha);

}  // namespace graphdiag

#endif
