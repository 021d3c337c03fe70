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

#include "graphdiag/ppt.h"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "graphdiag/gf2.h"
#include "graphdiag/walsh_hadamard.h"

namespace graphdiag {

namespace {

void require_nontrivial(uint64_t z, int n) {
    if (z == 0 || z == low_mask(n)) {
        throw std::invalid_argument("bipartition must be nontrivial (not all zeros or all ones)");
    }
}

/// Bit pattern of a connected two-colourable component, A = smaller class.
struct ComponentRows {
    std::vector<uint64_t> rows;  // per A vertex: its B neighbours, B-relabelled
    int size_b = 0;
};

ComponentRows component_rows(const Graph &g, uint64_t comp, uint64_t colour) {
    uint64_t cls0 = comp & ~colour;
    uint64_t cls1 = comp & colour;
    uint64_t a_mask = popcount(cls0) <= popcount(cls1) ? cls0 : cls1;
    uint64_t b_mask = comp & ~a_mask;
    std::vector<int> b_index(g.num_vertices(), -1);
    int nb = 0;
    for (uint64_t r = b_mask; r; r &= r - 1) {
        b_index[std::countr_zero(r)] = nb++;
    }
    ComponentRows out;
    out.size_b = nb;
    for (uint64_t r = a_mask; r; r &= r - 1) {
        uint64_t row = 0;
        for (uint64_t m = g.neighbours(std::countr_zero(r)); m; m &= m - 1) {
            int idx = b_index[std::countr_zero(m)];
            if (idx < 0) {
                throw std::invalid_argument("fast_bipartite_f: colouring is not proper");
            }
            row |= uint64_t{1} << idx;
        }
        out.rows.push_back(row);
    }
    return out;
}

uint64_t combine_rows(const std::vector<uint64_t> &rows, uint64_t x) {
    uint64_t out = 0;
    for (; x; x &= x - 1) {
        out ^= rows[std::countr_zero(x)];
    }
    return out;
}

double component_f(const ComponentRows &c, double s, const FastOptions &options) {
    int a = (int)c.rows.size();
    int b = c.size_b;
    if (a > 30) {
        throw std::invalid_argument("fast_bipartite_f: smaller colour class exceeds 30 vertices");
    }
    std::vector<double> neg_pow(a + 1), class_b(b + 1);
    for (int w = 0; w <= a; w++) {
        neg_pow[w] = std::pow(-s, w);
    }
    for (int k = 0; k <= b; k++) {
        class_b[k] = std::pow(1 + s, k) * std::pow(1 - s, b - k);
    }

    if (!options.use_cosets) {
        // Walking x in index order, x -> x + 1 flips bits 0..ctz(x + 1), so
        // the neighbourhood parity changes by a prefix XOR of rows.
        std::vector<uint64_t> prefix(a);
        uint64_t acc_row = 0;
        for (int k = 0; k < a; k++) {
            acc_row ^= c.rows[k];
            prefix[k] = acc_row;
        }
        uint64_t count = uint64_t{1} << a;
        return parallel_pairwise_blocks(count, options.threads,
                                        [&](uint64_t lo, uint64_t hi, PairwiseSum &acc) {
                                            uint64_t mask = combine_rows(c.rows, lo);
                                            for (uint64_t x = lo; x < hi; x++) {
                                                acc.add(neg_pow[popcount(x)] * class_b[popcount(mask)]);
                                                if (x + 1 < hi) {
                                                    mask ^= prefix[std::countr_zero(x + 1)];
                                                }
                                            }
                                        })
            .value;
    }

    // Kernel of x -> x.A: strings whose B-neighbourhood parity vanishes.
    std::vector<uint64_t> eqs(b, 0);
    for (int i = 0; i < a; i++) {
        for (int j = 0; j < b; j++) {
            if ((c.rows[i] >> j) & 1) {
                eqs[j] |= uint64_t{1} << i;
            }
        }
    }
    auto sol = gf2_solve(eqs, 0, a);
    const auto &kernel = sol->nullspace;
    // Each reduced nullspace vector owns its highest bit (a free column), so
    // strings with those bits cleared are one representative per coset.
    uint64_t free_cols = 0;
    for (uint64_t v : kernel) {
        free_cols |= uint64_t{1} << (63 - std::countl_zero(v));
    }
    std::vector<int> rep_bits;
    for (int k = 0; k < a; k++) {
        if (!((free_cols >> k) & 1)) {
            rep_bits.push_back(k);
        }
    }
    int d = (int)kernel.size();
    uint64_t reps = uint64_t{1} << rep_bits.size();
    return parallel_pairwise_sum(reps, options.threads,
                                 [&](uint64_t r) {
                                     uint64_t x = 0;
                                     for (size_t k = 0; k < rep_bits.size(); k++) {
                                         x |= ((r >> k) & 1) << rep_bits[k];
                                     }
                                     PairwiseSum weight;
                                     uint64_t cur = x;
                                     for (uint64_t t = 0; t < (uint64_t{1} << d); t++) {
                                         weight.add(neg_pow[popcount(cur)]);
                                         uint64_t next = t + 1;
                                         if (next < (uint64_t{1} << d)) {
                                             cur ^= kernel[std::countr_zero(next)];
                                         }
                                     }
                                     return weight.total() * class_b[popcount(combine_rows(c.rows, x))];
                                 })
        .value;
}

}  // namespace

SumResult pt_eigenvalue_sum(const DiagonalState &st, uint64_t x, uint64_t z, int threads) {
    int n = st.num_qubits();
    if (n > 30) {
        throw std::invalid_argument("pt_eigenvalue: direct evaluator limited to 30 qubits");
    }
    require_nontrivial(z, n);
    const Graph &g = st.graph();
    return parallel_pairwise_sum(uint64_t{1} << n, threads, [&](uint64_t y) {
        double v = st.coefficient(y);
        return (dot_parity(x, y) ^ edge_cross_parity(g, y, z)) ? -v : v;
    });
}

double pt_eigenvalue(const DiagonalState &st, const BitString &x, const BitString &z, int threads) {
    if (x.n != st.num_qubits() || z.n != st.num_qubits()) {
        throw std::invalid_argument("pt_eigenvalue: string length does not match the graph");
    }
    return pt_eigenvalue_sum(st, x.bits, z.bits, threads).value;
}

std::vector<double> pt_spectrum_all_x(const DiagonalState &st, uint64_t z, int threads) {
    int n = st.num_qubits();
    if (n > 26) {
        throw std::invalid_argument("pt_spectrum_all_x limited to 26 qubits");
    }
    require_nontrivial(z, n);
    std::vector<double> t = st.coefficient_table();
    for (uint64_t y = 0; y < t.size(); y++) {
        if (edge_cross_parity(st.graph(), y, z)) {
            t[y] = -t[y];
        }
    }
    walsh_hadamard(t, threads);
    return t;
}

std::vector<double> pt_spectrum_all_x(const DiagonalState &st, const BitString &z, int threads) {
    if (z.n != st.num_qubits()) {
        throw std::invalid_argument("pt_spectrum_all_x: bipartition length mismatch");
    }
    return pt_spectrum_all_x(st, z.bits, threads);
}

double fast_bipartite_f(const Graph &g, double s, const FastOptions &options) {
    auto colouring = two_colouring(g);
    if (!colouring) {
        throw std::invalid_argument("fast_bipartite_f: graph is not two-colourable");
    }
    double total = 1;
    for (uint64_t comp : g.components(g.all_vertices())) {
        if (popcount(comp) == 1) {
            total *= 1 - s;
            continue;
        }
        total *= component_f(component_rows(g, comp, colouring.colouring->bits), s, options);
    }
    return total;
}

double signed_edge_sum(const Graph &g, double s, int threads) {
    int n = g.num_vertices();
    if (n > 30) {
        throw std::invalid_argument("signed_edge_sum limited to 30 vertices");
    }
    return parallel_pairwise_sum(uint64_t{1} << n, threads, [&](uint64_t y) {
        double v = std::pow(-s, popcount(y));
        return (g.edges_within(y) & 1) ? -v : v;
    }).value;
}

double bisect_root(const std::function<double(double)> &evaluator, double lo, double hi, double tol) {
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (evaluator(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RootResult critical_s(const std::function<double(double)> &evaluator, double lo, double hi, int grid, double tol) {
    if (!(hi > lo) || grid < 1) {
        throw std::invalid_argument("critical_s: empty bracket");
    }
    RootResult out;
    if (evaluator(lo) <= 0) {
        out.found = true;
        out.s = lo;
        out.physical = lo < 1;
        return out;
    }
    double prev = lo;
    for (int k = 1; k <= grid; k++) {
        double pt = k == grid ? hi : lo + (hi - lo) * k / grid;
        if (evaluator(pt) <= 0) {
            out.found = true;
            out.s = bisect_root(evaluator, prev, pt, tol);
            out.physical = out.s < 1 - 1e-9;
            return out;
        }
        prev = pt;
    }
    return out;
}

uint64_t canonical_bipartition(uint64_t z, int n) {
    return (z & 1) ? (~z & low_mask(n)) : z;
}

std::pair<double, uint64_t> thermal_min_over_z(const Graph &g, double s, const FastOptions &options) {
    int n = g.num_vertices();
    if (n < 2 || n > 24) {
        throw std::invalid_argument("thermal_min_over_z needs 2 <= n <= 24");
    }
    double best = std::numeric_limits<double>::infinity();
    uint64_t best_z = 0;
    FastOptions inner = options;
    inner.threads = 1;
    uint64_t count = (uint64_t{1} << (n - 1)) - 1;
    std::vector<double> values(count);
    parallel_for(count, options.threads, [&](uint64_t k) {
        uint64_t z = (k + 1) << 1;
        values[k] = fast_bipartite_f(crossing_subgraph(g, z), s, inner);
    });
    for (uint64_t k = 0; k < count; k++) {
        if (values[k] < best) {
            best = values[k];
            best_z = (k + 1) << 1;
        }
    }
    return {best, best_z};
}

RootResult thermal_critical_s(const Graph &g, const FastOptions &options) {
    if (two_colouring(g)) {
        return critical_s([&](double s) { return fast_bipartite_f(g, s, options); });
    }
    return critical_s([&](double s) { return thermal_min_over_z(g, s, options).first; });
}

WitnessLabels optimal_thermal_witness_labels(const Graph &g) {
    WitnessLabels out{BitString::ones(g.num_vertices()), std::nullopt};
    auto colouring = two_colouring(g);
    if (colouring) {
        out.z = colouring.colouring;
    }
    return out;
}

PTMinimum brute_min_over_xz(const DiagonalState &st, int threads) {
    int n = st.num_qubits();
    if (n < 2 || n > 14) {
        throw std::invalid_argument("brute_min_over_xz needs 2 <= n <= 14");
    }
    uint64_t count = (uint64_t{1} << (n - 1)) - 1;
    std::vector<double> best(count);
    std::vector<uint64_t> best_x(count);
    parallel_for(count, threads, [&](uint64_t k) {
        auto spec = pt_spectrum_all_x(st, (k + 1) << 1);
        uint64_t arg = 0;
        for (uint64_t x = 1; x < spec.size(); x++) {
            if (spec[x] < spec[arg]) {
                arg = x;
            }
        }
        best[k] = spec[arg];
        best_x[k] = arg;
    });
    uint64_t arg = 0;
    for (uint64_t k = 1; k < count; k++) {
        if (best[k] < best[arg]) {
            arg = k;
        }
    }
    return {BitString(best_x[arg], n), BitString((arg + 1) << 1, n), best[arg]};
}

IsingParameters ising_parameters(const Graph &g, double s) {
    if (!(s > 0)) {
        throw std::invalid_argument("ising_parameters: s must be > 0 (ln 0 undefined)");
    }
    using namespace std::complex_literals;
    const double pi = std::numbers::pi;
    std::complex<double> log_neg_s(std::log(s), pi);
    int n = g.num_vertices();
    IsingParameters out;
    out.beta_J = 1i * pi / 4.0;
    out.beta_k = (n / 2.0) * log_neg_s + 1i * pi * (double)g.num_edges() / 4.0;
    for (int v = 0; v < n; v++) {
        out.beta_h.push_back(0.5 * log_neg_s + 1i * pi * (double)g.degree(v) / 4.0);
    }
    return out;
}

std::complex<double> ising_partition_check(const Graph &g, double s) {
    int n = g.num_vertices();
    if (n > 20) {
        throw std::invalid_argument("ising_partition_check limited to 20 vertices");
    }
    IsingParameters p = ising_parameters(g, s);
    std::complex<double> z_total = 0;
    PairwiseSum re, im;
    for (uint64_t y = 0; y < (uint64_t{1} << n); y++) {
        // Spin S_v = +1 for y_v = 0 and -1 for y_v = 1.
        int couplings = 0;
        for (const auto &[a, b] : g.edges()) {
            couplings += (((y >> a) ^ (y >> b)) & 1) ? -1 : 1;
        }
        std::complex<double> exponent = p.beta_J * (double)couplings + p.beta_k;
        for (int v = 0; v < n; v++) {
            exponent -= p.beta_h[v] * (((y >> v) & 1) ? -1.0 : 1.0);
        }
        std::complex<double> term = std::exp(exponent);
        re.add(term.real());
        im.add(term.imag());
    }
    z_total = {re.total(), im.total()};
    return z_total;
}

}  // namespace graphdiag
