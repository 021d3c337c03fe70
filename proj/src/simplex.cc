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

#include "graphdiag/simplex.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphdiag {

namespace {

class Tableau {
   public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), data_((size_t)(rows + 1) * (cols + 1), 0.0), basis_(rows) {
    }

    double &at(int r, int c) {
        return data_[(size_t)r * (cols_ + 1) + c];
    }
    double &rhs(int r) {
        return at(r, cols_);
    }
    /// Objective row lives at index rows_.
    double &obj(int c) {
        return at(rows_, c);
    }

    void pivot(int pr, int pc) {
        double inv = 1 / at(pr, pc);
        for (int c = 0; c <= cols_; c++) {
            at(pr, c) *= inv;
        }
        for (int r = 0; r <= rows_; r++) {
            if (r == pr) {
                continue;
            }
            double f = at(r, pc);
            if (f == 0) {
                continue;
            }
            for (int c = 0; c <= cols_; c++) {
                at(r, c) -= f * at(pr, c);
            }
            at(r, pc) = 0;
        }
        basis_[pr] = pc;
    }

    /// Runs simplex on columns [0, active_cols). Returns false when unbounded.
    LpStatus run(int active_cols, double tol, int max_iterations) {
        for (int it = 0; it < max_iterations; it++) {
            int enter = -1;
            for (int c = 0; c < active_cols; c++) {
                if (obj(c) < -tol) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) {
                return LpStatus::Optimal;
            }
            int leave = -1;
            double best = 0;
            for (int r = 0; r < rows_; r++) {
                double a = at(r, enter);
                if (a > tol) {
                    double ratio = rhs(r) / a;
                    if (leave < 0 || ratio < best - tol || (ratio <= best + tol && basis_[r] < basis_[leave])) {
                        leave = r;
                        best = ratio;
                    }
                }
            }
            if (leave < 0) {
                return LpStatus::Unbounded;
            }
            pivot(leave, enter);
        }
        return LpStatus::IterationLimit;
    }

    int rows_;
    int cols_;
    std::vector<double> data_;
    std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram &lp, double tol, int max_iterations) {
    int m = (int)lp.a_eq.size();
    int n = lp.num_vars;
    if ((int)lp.b_eq.size() != m || (!lp.cost.empty() && (int)lp.cost.size() != n)) {
        throw std::invalid_argument("solve_lp: inconsistent dimensions");
    }
    for (const auto &row : lp.a_eq) {
        if ((int)row.size() != n) {
            throw std::invalid_argument("solve_lp: constraint row has the wrong length");
        }
    }

    // Columns: n structural, then m artificials.
    Tableau t(m, n + m);
    for (int r = 0; r < m; r++) {
        double sign = lp.b_eq[r] < 0 ? -1 : 1;
        for (int c = 0; c < n; c++) {
            t.at(r, c) = sign * lp.a_eq[r][c];
        }
        t.at(r, n + r) = 1;
        t.rhs(r) = sign * lp.b_eq[r];
        t.basis_[r] = n + r;
    }
    // Phase one objective: sum of artificials, written in reduced form.
    for (int r = 0; r < m; r++) {
        for (int c = 0; c < n; c++) {
            t.obj(c) -= t.at(r, c);
        }
        t.obj(n + m) -= t.rhs(r);
    }

    LpResult out;
    LpStatus st = t.run(n, tol, max_iterations);
    if (st == LpStatus::IterationLimit) {
        out.status = st;
        return out;
    }
    out.infeasibility = -t.obj(n + m);
    double scale = 1;
    for (double b : lp.b_eq) {
        scale = std::max(scale, std::fabs(b));
    }
    if (out.infeasibility > 1e-9 * scale) {
        out.status = LpStatus::Infeasible;
        return out;
    }

    // Drive any artificial still in the basis (at zero level) out of it.
    for (int r = 0; r < m; r++) {
        if (t.basis_[r] < n) {
            continue;
        }
        for (int c = 0; c < n; c++) {
            if (std::fabs(t.at(r, c)) > tol) {
                t.pivot(r, c);
                break;
            }
        }
    }

    // Phase two objective over the structural columns.
    for (int c = 0; c <= n + m; c++) {
        t.obj(c) = 0;
    }
    if (!lp.cost.empty()) {
        for (int c = 0; c < n; c++) {
            t.obj(c) = lp.cost[c];
        }
        for (int r = 0; r < m; r++) {
            int b = t.basis_[r];
            if (b < n && lp.cost[b] != 0) {
                double f = lp.cost[b];
                for (int c = 0; c <= n + m; c++) {
                    t.obj(c) -= f * t.at(r, c);
                }
            }
        }
        st = t.run(n, tol, max_iterations);
        if (st != LpStatus::Optimal) {
            out.status = st;
            return out;
        }
    }

    out.status = LpStatus::Optimal;
    out.x.assign(n, 0.0);
    for (int r = 0; r < m; r++) {
        if (t.basis_[r] < n) {
            out.x[t.basis_[r]] = std::max(0.0, t.rhs(r));
        }
    }
    out.objective = 0;
    if (!lp.cost.empty()) {
        for (int c = 0; c < n; c++) {
            out.objective += lp.cost[c] * out.x[c];
        }
    }
    return out;
}

}  // namespace graphdiag
