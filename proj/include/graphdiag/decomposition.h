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

#ifndef GRAPHDIAG_DECOMPOSITION_H
#define GRAPHDIAG_DECOMPOSITION_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphdiag/graph.h"

namespace graphdiag {

/// coefficient * prod_b (1 + sign_b K_{block_b}).
struct DecompositionTerm {
    double coefficient = 0;
    std::vector<uint64_t> blocks;
    /// One entry per block, each +1 or -1.
    std::vector<int> signs;
};

/// rho = 2^-N (identity * 1 + sum_t term_t).
///
/// Coefficients carry the same 2^N scaling as PT eigenvalues, so the identity
/// coefficient of a thermal decomposition equals f(s).
struct Decomposition {
    Graph graph;
    double identity = 0;
    std::vector<DecompositionTerm> terms;

    /// Smallest coefficient including the identity.
    double min_coefficient() const;
    /// Smallest non-identity coefficient, +inf when there are no terms.
    double min_term_coefficient() const;
    double abs_coefficient_sum() const;
    /// Every coefficient >= -rel_tol * abs_coefficient_sum().
    bool is_nonnegative(double rel_tol = 1e-9) const;
    /// Expands back to the s_y table (index y, entry 0 is the trace). n <= 26.
    std::vector<double> coefficient_table() const;
    /// JSON document {"n", "identity", "terms": [{coefficient, blocks, signs}]}.
    std::string to_json() const;
};

}  // namespace graphdiag

#endif
