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

#ifndef GRAPHDIAG_CHAIN_H
#define GRAPHDIAG_CHAIN_H

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphdiag {

/// f^n(s) from f^N = (1+s) f^{N-1} - 2s f^{N-2}, f^1 = 1-s, f^2 = 1-2s-s^2.
double chain_f(int n, double s);

/// Roots of r^2 - (1+s) r + 2s.
std::pair<std::complex<double>, std::complex<double>> chain_roots(double s);

/// 3 - 2 sqrt(2), where the characteristic roots stop being real.
double chain_critical_limit();

/// Thermal threshold of the n-chain. n = 1 returns 1 (never entangled).
double chain_critical_s(int n);

/// Thresholds for n = 1..n_max. Each is bracketed between the limit and the
/// previous threshold, which keeps closely spaced roots apart at large n.
std::vector<double> chain_critical_series(int n_max);

/// Chain f with per-site s_k, evaluated from the tail:
/// f(s_k..s_N) = (1+s_k) f(s_{k+1}..s_N) - 2 s_k f(s_{k+2}..s_N).
double chain_f_inhomogeneous(std::span<const double> svals);

struct PerturbationStats {
    int n = 0;
    double sigma = 0;
    uint64_t seed = 0;
    /// Critical T/Delta per sample, in sample order.
    std::vector<double> t_over_delta;
    double mean = 0;
    /// Sample standard deviation (n - 1 denominator); 0 for a single sample.
    double std_dev = 0;
    double min = 0;
    double max = 0;
    /// Critical T/Delta of the unperturbed chain.
    double unperturbed = 0;
};

/// Draws Delta_k ~ Normal(1, sigma) per site (redrawing non-positive values)
/// and finds the shared beta at which the inhomogeneous chain f first
/// vanishes. Sample k uses its own generator seeded from (seed, k), so results
/// are independent of `threads`.
PerturbationStats perturbation_scan(int n, double sigma, int samples, uint64_t seed, int threads = 1);

/// Critical beta*Delta of an inhomogeneous chain with gaps `deltas`.
double inhomogeneous_critical_beta(std::span<const double> deltas);

struct ZFieldResult {
    /// False when tanh(beta0/2) >= Delta/sqrt(Delta^2 + delta^2): no solution.
    bool solvable = false;
    double beta = 0;
};

/// Solves (1/r) tanh(beta r/2) = tanh(beta0/2), r = sqrt(1 + (delta/Delta)^2),
/// in closed form. Energies in units of Delta.
ZFieldResult zfield_effective_beta(double beta0_delta, double delta_over_Delta);

}  // namespace graphdiag

#endif
