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

#include "graphdiag/chain.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "graphdiag/ppt.h"
#include "graphdiag/summation.h"

namespace graphdiag {

namespace {

/// f^n(s) up to a positive factor; rescaling keeps long chains in range.
double chain_f_scaled(int n, double s) {
    double prev = 1;  // f^0
    double curr = 1 - s;
    for (int k = 2; k <= n; k++) {
        double next = (1 + s) * curr - 2 * s * prev;
        prev = curr;
        curr = next;
        double scale = std::max(std::fabs(prev), std::fabs(curr));
        if (scale > 1e100 || (scale < 1e-100 && scale > 0)) {
            prev /= scale;
            curr /= scale;
        }
    }
    return curr;
}

}  // namespace

double chain_f(int n, double s) {
    if (n < 1) {
        throw std::invalid_argument("chain_f: n must be >= 1");
    }
    // f^0 = 1 reproduces f^2 = (1+s)(1-s) - 2s = 1 - 2s - s^2.
    double prev = 1;
    double curr = 1 - s;
    for (int k = 2; k <= n; k++) {
        double next = (1 + s) * curr - 2 * s * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

std::pair<std::complex<double>, std::complex<double>> chain_roots(double s) {
    double b = 1 + s;
    double disc = b * b - 8 * s;
    if (disc >= 0) {
        double r = std::sqrt(disc);
        return {{(b + r) / 2, 0}, {(b - r) / 2, 0}};
    }
    double r = std::sqrt(-disc);
    return {{b / 2, r / 2}, {b / 2, -r / 2}};
}

double chain_critical_limit() {
    return 3 - 2 * std::numbers::sqrt2;
}

std::vector<double> chain_critical_series(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("chain_critical_series: n_max must be >= 1");
    }
    std::vector<double> out{1.0};
    if (n_max >= 2) {
        out.push_back(std::numbers::sqrt2 - 1);
    }
    double lo = chain_critical_limit();
    for (int n = 3; n <= n_max; n++) {
        // f^n > 0 on [0, limit]; at the previous threshold f^n = -2s f^{n-2} < 0.
        double hi = out.back();
        auto root = critical_s([n](double s) { return chain_f_scaled(n, s); }, lo, hi);
        if (!root.found) {
            throw std::logic_error("chain_critical_series: lost the root bracket");
        }
        out.push_back(root.s);
    }
    return out;
}

double chain_critical_s(int n) {
    return chain_critical_series(n).back();
}

double chain_f_inhomogeneous(std::span<const double> svals) {
    if (svals.empty()) {
        throw std::invalid_argument("chain_f_inhomogeneous: need at least one site");
    }
    double beyond = 1;  // f of the empty tail, one step past the end
    double tail = 1;    // f of the empty tail
    for (size_t k = svals.size(); k-- > 0;) {
        double s = svals[k];
        double cur = (1 + s) * tail - 2 * s * beyond;
        beyond = tail;
        tail = cur;
        double scale = std::max(std::fabs(beyond), std::fabs(tail));
        if (scale > 1e100 || (scale < 1e-100 && scale > 0)) {
            beyond /= scale;
            tail /= scale;
        }
    }
    return tail;
}

double inhomogeneous_critical_beta(std::span<const double> deltas) {
    double min_delta = *std::min_element(deltas.begin(), deltas.end());
    if (!(min_delta > 0)) {
        throw std::invalid_argument("inhomogeneous_critical_beta: gaps must be positive");
    }
    std::vector<double> svals(deltas.size());
    auto eval = [&](double beta) {
        for (size_t k = 0; k < deltas.size(); k++) {
            svals[k] = std::tanh(beta * deltas[k] / 2);
        }
        return chain_f_inhomogeneous(svals);
    };
    // At beta_hi every s_k exceeds 1 - 1e-8, past any chain threshold.
    double beta_hi = 2 * std::atanh(1 - 1e-8) / min_delta;
    auto root = critical_s(eval, 0, beta_hi, 4096);
    if (!root.found) {
        throw std::logic_error("inhomogeneous_critical_beta: no threshold found");
    }
    return root.s;
}

PerturbationStats perturbation_scan(int n, double sigma, int samples, uint64_t seed, int threads) {
    if (n < 2 || !(sigma >= 0) || samples < 1) {
        throw std::invalid_argument("perturbation_scan: need n >= 2, sigma >= 0, samples >= 1");
    }
    PerturbationStats out;
    out.n = n;
    out.sigma = sigma;
    out.seed = seed;
    out.t_over_delta.resize(samples);
    parallel_for(samples, threads, [&](uint64_t k) {
        std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)k};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss(1.0, sigma);
        std::vector<double> deltas(n);
        for (double &d : deltas) {
            do {
                d = sigma == 0 ? 1.0 : gauss(rng);
            } while (d <= 0);
        }
        out.t_over_delta[k] = 1 / inhomogeneous_critical_beta(deltas);
    });
    std::vector<double> flat(n, 1.0);
    out.unperturbed = 1 / inhomogeneous_critical_beta(flat);

    PairwiseSum sum;
    for (double t : out.t_over_delta) {
        sum.add(t);
    }
    out.mean = sum.total() / samples;
    PairwiseSum sq;
    for (double t : out.t_over_delta) {
        sq.add((t - out.mean) * (t - out.mean));
    }
    out.std_dev = samples > 1 ? std::sqrt(sq.total() / (samples - 1)) : 0;
    out.min = *std::min_element(out.t_over_delta.begin(), out.t_over_delta.end());
    out.max = *std::max_element(out.t_over_delta.begin(), out.t_over_delta.end());
    return out;
}

ZFieldResult zfield_effective_beta(double beta0_delta, double delta_over_Delta) {
    if (!(beta0_delta > 0)) {
        throw std::invalid_argument("zfield_effective_beta: beta0 must be > 0");
    }
    double r = std::sqrt(1 + delta_over_Delta * delta_over_Delta);
    double arg = std::tanh(beta0_delta / 2) * r;
    ZFieldResult out;
    if (arg >= 1) {
        return out;
    }
    out.solvable = true;
    out.beta = 2 * std::atanh(arg) / r;
    return out;
}

}  // namespace graphdiag
