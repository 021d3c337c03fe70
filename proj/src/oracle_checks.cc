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

#include "graphdiag/oracle_checks.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <variant>

#include "graphdiag/dense.h"
#include "graphdiag/ppt.h"
#include "graphdiag/separability.h"
#include "graphdiag/star.h"
#include "graphdiag/walsh_hadamard.h"
#include "graphdiag/witness.h"

namespace graphdiag {

Graph random_graph(int n, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    Graph g(n);
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            if (coin(rng)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

Graph random_tree(int n, std::mt19937_64 &rng) {
    std::vector<int> parents(n, -1);
    for (int v = 1; v < n; v++) {
        parents[v] = std::uniform_int_distribution<int>(0, v - 1)(rng);
    }
    // Relabel so the root is not always vertex 0.
    std::vector<int> perm(n);
    for (int v = 0; v < n; v++) {
        perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph g(n);
    for (int v = 1; v < n; v++) {
        g.add_edge(perm[v], perm[parents[v]]);
    }
    return g;
}

Graph random_bipartite_graph(int n, std::mt19937_64 &rng) {
    Graph g = random_tree(n, rng);
    uint64_t colour = two_colouring(g).colouring->bits;
    std::bernoulli_distribution coin(0.3);
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            if (((colour >> a) ^ (colour >> b)) & 1 && !g.has_edge(a, b) && coin(rng)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

uint64_t random_bipartition(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<uint64_t> pick(1, low_mask(n) - 1);
    return pick(rng);
}

DiagonalState random_state(const Graph &g, int model_index, std::mt19937_64 &rng) {
    int n = g.num_vertices();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (((model_index % 5) + 5) % 5) {
        case 0:
            return DiagonalState::thermal(g, 0.95 * unit(rng));
        case 1: {
            std::vector<double> s(n);
            for (double &v : s) {
                v = 0.95 * unit(rng);
            }
            return DiagonalState::inhomogeneous(g, s);
        }
        case 2:
            return DiagonalState::global_depolarised(g, 20 * unit(rng));
        case 3:
            return DiagonalState::local_depolarised(g, unit(rng));
        default: {
            std::vector<double> lambda(uint64_t{1} << n);
            for (double &v : lambda) {
                v = unit(rng);
            }
            // s_y = sum_x lambda_x (-1)^{x.y}, a valid state by construction.
            walsh_hadamard(lambda);
            return DiagonalState::explicit_table(g, lambda);
        }
    }
}

CheckResult check_pt_spectra(uint64_t seed, int cases, int n_max) {
    CheckResult r{"pt spectra vs dense partial transpose", true, 0, 0, ""};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; k++) {
        int n = std::uniform_int_distribution<int>(2, n_max)(rng);
        Graph g = random_graph(n, rng);
        DiagonalState st = random_state(g, k, rng);
        uint64_t z = random_bipartition(n, rng);
        auto formula = pt_spectrum_all_x(st, z);
        double scale = std::ldexp(1.0, -n);
        for (double &v : formula) {
            v *= scale;
        }
        auto dense = eigenvalues(partial_transpose(build_state(st), z));
        std::sort(formula.begin(), formula.end());
        double worst = 0;
        for (size_t i = 0; i < dense.size(); i++) {
            worst = std::max(worst, std::fabs(formula[i] - dense[i]));
        }
        r.worst = std::max(r.worst, worst);
        r.cases++;
        if (worst > 1e-9) {
            r.passed = false;
            std::ostringstream msg;
            msg << "case " << k << " n=" << n << " " << st.describe() << " z=" << BitString(z, n) << " deviation "
                << worst << "; ";
            r.detail += msg.str();
        }
    }
    return r;
}

DenseOperator physical_state(const DiagonalState &st) {
    const Graph &g = st.graph();
    int n = g.num_vertices();
    uint64_t dim = uint64_t{1} << n;
    DenseOperator id = DenseOperator::Identity(dim, dim);
    DenseVector psi = graph_state_vector(g);
    DenseOperator pure = psi * psi.adjoint();
    auto product_form = [&](auto s_of) {
        DenseOperator rho = id;
        for (int v = 0; v < n; v++) {
            rho = rho * (id + s_of(v) * PauliMatrix::stabilizer_generator(g, v).to_dense());
        }
        return DenseOperator(rho / (double)dim);
    };
    return std::visit(
        [&](const auto &m) -> DenseOperator {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Thermal>) {
                return product_form([&](int) { return m.s; });
            } else if constexpr (std::is_same_v<M, ThermalInhomogeneous>) {
                return product_form([&](int v) { return m.s[v]; });
            } else if constexpr (std::is_same_v<M, GlobalDepolarised>) {
                return (id + m.alpha * pure) / ((double)dim + m.alpha);
            } else if constexpr (std::is_same_v<M, LocalDepolarised>) {
                return apply_local_depolarising(pure, m.p);
            } else {
                // Mixture of the graph basis states Z_x|psi> with weights from the table.
                DenseOperator rho = DenseOperator::Zero(dim, dim);
                for (uint64_t x = 0; x < dim; x++) {
                    double w = 0;
                    for (uint64_t y = 0; y < dim; y++) {
                        w += (dot_parity(x, y) ? -1.0 : 1.0) * m.table[y];
                    }
                    DenseVector v = z_string(n, x) * psi;
                    rho += (w / (m.table[0] * (double)dim)) * (v * v.adjoint());
                }
                return rho;
            }
        },
        st.model());
}

CheckResult check_coefficients(uint64_t seed, int cases, int n_max) {
    CheckResult r{"coefficients vs Tr(rho K_y)", true, 0, 0, ""};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; k++) {
        int n = std::uniform_int_distribution<int>(1, n_max)(rng);
        Graph g = random_graph(n, rng);
        DiagonalState st = random_state(g, k, rng);
        DenseOperator rho = physical_state(st);
        for (uint64_t y = 0; y < (uint64_t{1} << n); y++) {
            DenseOperator ky = PauliMatrix::stabilizer(g, y).to_dense();
            std::complex<double> tr = (rho * ky).trace();
            double dev = std::abs(tr - std::complex<double>(st.coefficient(y), 0));
            r.worst = std::max(r.worst, dev);
        }
        r.worst = std::max(r.worst, max_abs_diff(rho, build_state(st)));
        r.cases++;
    }
    r.passed = r.worst <= 1e-10;
    return r;
}

CheckResult check_local_channel(int n_max) {
    CheckResult r{"local depolarising channel vs coefficient formula", true, 0, 0, ""};
    for (int n = 1; n <= n_max; n++) {
        for (const Graph &g : {Graph::chain(n), Graph::star(n), n >= 3 ? Graph::ring(n) : Graph::chain(n)}) {
            DenseVector psi = graph_state_vector(g);
            DenseOperator pure = psi * psi.adjoint();
            for (double p : {0.1, 0.468, 0.9}) {
                DenseOperator lhs = apply_local_depolarising(pure, p);
                DenseOperator rhs = build_state(DiagonalState::local_depolarised(g, p));
                r.worst = std::max(r.worst, max_abs_diff(lhs, rhs));
                r.cases++;
            }
        }
    }
    r.passed = r.worst <= 1e-10;
    return r;
}

CheckResult check_decompositions(uint64_t seed, int cases, int n_max) {
    CheckResult r{"decompositions reassemble rho", true, 0, 0, ""};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto record = [&](const Decomposition &d, const DiagonalState &st, const char *what) {
        double dev = max_abs_diff(assemble_decomposition(d), build_state(st));
        r.worst = std::max(r.worst, dev);
        r.cases++;
        if (dev > 1e-10) {
            r.passed = false;
            r.detail += std::string(what) + " deviation; ";
        }
    };
    for (int k = 0; k < cases; k++) {
        int n = std::uniform_int_distribution<int>(2, n_max)(rng);
        double s = 0.6 * unit(rng);
        Graph tree = random_tree(n, rng);
        record(tree_decomposition(tree, s), DiagonalState::thermal(tree, s), "tree");
        Graph bip = random_bipartite_graph(n, rng);
        record(two_colourable_decomposition(bip, s), DiagonalState::thermal(bip, s), "two-colourable");
        Graph any = random_graph(n, rng);
        DiagonalState st = random_state(any, k, rng);
        record(block_decomposition(st), st, "block");
        Graph star = Graph::star(n);
        DiagonalState sst = random_state(star, k, rng);
        record(star_decomposition(sst).decomposition, sst, "star");
    }
    return r;
}

CheckResult check_witness_operator(uint64_t seed, int cases, int n_max) {
    CheckResult r{"witness operator vs PT eigenvalue", true, 0, 0, ""};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; k++) {
        int n = std::uniform_int_distribution<int>(2, n_max)(rng);
        Graph g = random_graph(n, rng);
        DiagonalState st = random_state(g, k, rng);
        uint64_t x = std::uniform_int_distribution<uint64_t>(0, low_mask(n))(rng);
        WitnessSpec w{g, BitString(x, n), BitString(random_bipartition(n, rng), n)};
        double dense = (witness_operator(w) * build_state(st)).trace().real();
        double dev = std::fabs(dense - witness_expectation(w, st));
        r.worst = std::max(r.worst, dev);
        r.cases++;
    }
    r.passed = r.worst <= 1e-10;
    return r;
}

std::vector<CheckResult> run_oracle_suite(const std::string &suite, uint64_t seed) {
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool known = false;
    if (all || suite == "spectra") {
        out.push_back(check_pt_spectra(seed));
        known = true;
    }
    if (all || suite == "coefficients") {
        out.push_back(check_coefficients(seed));
        known = true;
    }
    if (all || suite == "channel") {
        out.push_back(check_local_channel());
        known = true;
    }
    if (all || suite == "decompositions") {
        out.push_back(check_decompositions(seed));
        known = true;
    }
    if (all || suite == "witness") {
        out.push_back(check_witness_operator(seed));
        known = true;
    }
    if (!known) {
        throw std::invalid_argument("unknown oracle suite '" + suite +
                                    "'; choose all, spectra, coefficients, channel, decompositions or witness");
    }
    return out;
}

}  // namespace graphdiag
