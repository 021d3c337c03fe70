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

#ifndef GRAPHDIAG_SIMPLEX_H
#define GRAPHDIAG_SIMPLEX_H

#include <vector>

namespace graphdiag {

/// minimize cost.x subject to a_eq x = b_eq, x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;
    /// Empty means a pure feasibility problem.
    std::vector<double> cost;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0;
    /// Phase one residual sum of artificial variables; 0 when feasible.
    double infeasibility = 0;
};

/// Dense two-phase simplex with Bland's rule. Intended for the small
/// decomposition programs in this library (hundreds of columns).
LpResult solve_lp(const LinearProgram &lp, double tol = 1e-10, int max_iterations = 100000);

}  // namespace graphdiag

#endif
