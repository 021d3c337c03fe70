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

#ifndef GRAPHDIAG_STATES_H
#define GRAPHDIAG_STATES_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "graphdiag/bitstring.h"
#include "graphdiag/graph.h"

namespace graphdiag {

/// s_y = s^{w_y}: every stabilizer dephased independently.
struct Thermal {
    double s = 0;
};

/// s_y = prod_{n in y} s_n.
struct ThermalInhomogeneous {
    std::vector<double> s;
};

/// rho = (1 + alpha |psi><psi|) / (2^N + alpha).
struct GlobalDepolarised {
    double alpha = 0;
};

/// Single-qubit depolarising channel of strength p on every site.
struct LocalDepolarised {
    double p = 0;
};

/// Arbitrary table indexed by y, normalised so that entry 0 is 1.
struct Explicit {
    std::vector<double> table;
};

using NoiseModel = std::variant<Thermal, ThermalInhomogeneous, GlobalDepolarised, LocalDepolarised, Explicit>;

/// A graph-diagonal state rho = 2^-N sum_y s_y K_y.
class DiagonalState {
   public:
    DiagonalState(Graph graph, NoiseModel model);

    static DiagonalState thermal(Graph g, double s);
    static DiagonalState inhomogeneous(Graph g, std::vector<double> s);
    static DiagonalState global_depolarised(Graph g, double alpha);
    static DiagonalState local_depolarised(Graph g, double p);
    /// Table is divided by its entry 0, which must be positive.
    static DiagonalState explicit_table(Graph g, std::vector<double> table);

    const Graph &graph() const {
        return graph_;
    }
    const NoiseModel &model() const {
        return model_;
    }
    int num_qubits() const {
        return graph_.num_vertices();
    }

    double coefficient(uint64_t y) const;
    double coefficient(const BitString &y) const;

    /// All 2^N coefficients in index order. n <= 26.
    std::vector<double> coefficient_table() const;

    /// Eigenvalues of rho times 2^N, i.e. sum_y (-1)^{x.y} s_y for every x. n <= 26.
    std::vector<double> spectrum() const;

    /// True when every spectrum entry is >= -tol (scaled by sum |s_y|). n <= 20.
    bool is_physical(double rel_tol = 1e-9) const;

    /// Short human readable model description, e.g. "thermal s=0.2".
    std::string describe() const;

   private:
    Graph graph_;
    NoiseModel model_;
};

/// Reads (binary string, value) rows. Blank lines and lines starting with '#'
/// are ignored, as is a header row whose first field is not a bit string.
/// Missing strings default to 0.
std::vector<double> read_explicit_table_csv(std::istream &in, int n);
std::vector<double> load_explicit_table_csv(const std::string &path, int n);

/// Mutually consistent s, beta*Delta and T/Delta (k_B = 1).
struct Temperature {
    double s = 0;
    double beta_delta = 0;
    /// +infinity when s = 0.
    double t_over_delta = 0;

    bool infinite() const;

    static Temperature from_s(double s);
    static Temperature from_beta_delta(double beta_delta);
    static Temperature from_t_over_delta(double t_over_delta);
};

}  // namespace graphdiag

#endif
