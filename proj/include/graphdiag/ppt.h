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

#ifndef GRAPHDIAG_PPT_H
#define GRAPHDIAG_PPT_H

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graphdiag/bitstring.h"
#include "graphdiag/graph.h"
#include "graphdiag/states.h"
#include "graphdiag/summation.h"

namespace graphdiag {

/// Partial transpose eigenvalue f_{x,z} = sum_y (-1)^{x.y} s_y (-1)^{ecp(y,z)}.
///
/// Values omit the 2^-N factor; divide by 2^N for eigenvalues of rho^PT.
/// Direct summation, n <= 30. The SumResult also carries sum |terms| for
/// sign decisions.
SumResult pt_eigenvalue_sum(const DiagonalState &st, uint64_t x, uint64_t z, int threads = 1);
double pt_eigenvalue(const DiagonalState &st, const BitString &x, const BitString &z, int threads = 1);

/// Every f_{x,z} for fixed z, indexed by x, via one Walsh-Hadamard transform. n <= 26.
std::vector<double> pt_spectrum_all_x(const DiagonalState &st, const BitString &z, int threads = 1);
std::vector<double> pt_spectrum_all_x(const DiagonalState &st, uint64_t z, int threads = 1);

struct FastOptions {
    int threads = 1;
    /// Sum each kernel coset of x -> x.A_tc with a single (1+s)/(1-s) factor.
    bool use_cosets = false;
};

/// f(s) = f_{11..1, colouring}(s) of a thermal state on a two-colourable graph,
/// summed over the smaller colour class of each component.
double fast_bipartite_f(const Graph &g, double s, const FastOptions &options = {});

/// sum_y (-s)^{w_y} (-1)^{#edges inside y}. Equals fast_bipartite_f on
/// two-colourable graphs and is the Ising partition function in general. n <= 30.
double signed_edge_sum(const Graph &g, double s, int threads = 1);

struct RootResult {
    bool found = false;
    double s = 0;
    /// False when the root sits at s >= 1, i.e. never entangled for physical s.
    bool physical = false;
};

/// Smallest s in [lo, hi] where evaluator(s) <= 0.
///
/// Scans `grid` equal intervals for the first non-positive point, then
/// bisects to `tol`. Requires evaluator(lo) > 0.
RootResult critical_s(const std::function<double(double)> &evaluator, double lo = 0, double hi = 1, int grid = 256,
                      double tol = 1e-12);

/// Bisection on [lo, hi] given evaluator(lo) > 0 >= evaluator(hi).
double bisect_root(const std::function<double(double)> &evaluator, double lo, double hi, double tol = 1e-12);

/// Thermal threshold on any graph. Two-colourable graphs use the colour
/// classes directly; otherwise the minimum over bipartitions z of the
/// crossing-edge subgraph (n <= 24).
RootResult thermal_critical_s(const Graph &g, const FastOptions &options = {});

/// min_z f_{1,z}(s) over nontrivial canonical bipartitions, and its argmin.
std::pair<double, uint64_t> thermal_min_over_z(const Graph &g, double s, const FastOptions &options = {});

struct WitnessLabels {
    BitString x;
    /// Unset when the graph is not two-colourable.
    std::optional<BitString> z;

    bool resolved() const {
        return z.has_value();
    }
};

/// (all ones, two colouring) for thermal states.
WitnessLabels optimal_thermal_witness_labels(const Graph &g);

struct PTMinimum {
    BitString x;
    BitString z;
    double value = 0;
};

/// Global minimum of f_{x,z} over all x and nontrivial z with bit 0 of z
/// cleared (z and its complement give the same spectrum). n <= 14.
/// Ties resolve to the smallest z, then smallest x.
PTMinimum brute_min_over_xz(const DiagonalState &st, int threads = 1);

/// The canonical representative of {z, complement z}: bit 0 cleared.
uint64_t canonical_bipartition(uint64_t z, int n);

struct IsingParameters {
    std::complex<double> beta_J;
    std::complex<double> beta_k;
    std::vector<std::complex<double>> beta_h;
};

/// Couplings with sum_S exp(J sum_{edges} S_i S_j + k - sum_n h_n S_n)
/// equal to signed_edge_sum(g, s). Rejects s <= 0.
IsingParameters ising_parameters(const Graph &g, double s);

/// Brute force partition function over all spin configurations. n <= 20.
std::complex<double> ising_partition_check(const Graph &g, double s);

}  // namespace graphdiag

#endif
