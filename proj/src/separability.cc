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

#include "graphdiag/separability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "graphdiag/gf2.h"
#include "graphdiag/ppt.h"
#include "graphdiag/simplex.h"
#include "json.hpp"

namespace graphdiag {

double Decomposition::min_term_coefficient() const {
    double out = std::numeric_limits<double>::infinity();
    for (const auto &t : terms) {
        out = std::min(out, t.coefficient);
    }
    return out;
}

double Decomposition::min_coefficient() const {
    return std::min(identity, min_term_coefficient());
}

double Decomposition::abs_coefficient_sum() const {
    double out = std::fabs(identity);
    for (const auto &t : terms) {
        out += std::fabs(t.coefficient);
    }
    return out;
}

bool Decomposition::is_nonnegative(double rel_tol) const {
    return min_coefficient() >= -rel_tol * abs_coefficient_sum();
}

std::vector<double> Decomposition::coefficient_table() const {
    int n = graph.num_vertices();
    if (n > 26) {
        throw std::invalid_argument("Decomposition::coefficient_table limited to 26 qubits");
    }
    std::vector<double> table(size_t{1} << n, 0.0);
    table[0] += identity;
    for (const auto &t : terms) {
        size_t k = t.blocks.size();
        for (uint64_t subset = 0; subset < (uint64_t{1} << k); subset++) {
            uint64_t y = 0;
            int sign = 1;
            for (size_t b = 0; b < k; b++) {
                if ((subset >> b) & 1) {
                    y ^= t.blocks[b];
                    sign *= t.signs[b];
                }
            }
            table[y] += sign * t.coefficient;
        }
    }
    return table;
}

std::string Decomposition::to_json() const {
    int n = graph.num_vertices();
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["identity"] = identity;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto &t : terms) {
        nlohmann::ordered_json term;
        term["coefficient"] = t.coefficient;
        std::vector<std::string> blocks;
        for (uint64_t b : t.blocks) {
            blocks.push_back(BitString(b, n).str());
        }
        term["blocks"] = blocks;
        term["signs"] = t.signs;
        doc["terms"].push_back(term);
    }
    return doc.dump(2);
}

std::vector<BitString> basic_blocks(const Graph &g, const BitString &y) {
    if (y.n != g.num_vertices()) {
        throw std::invalid_argument("basic_blocks: string length does not match the graph");
    }
    std::vector<BitString> out;
    for (uint64_t c : g.components(y.bits)) {
        out.emplace_back(c, y.n);
    }
    return out;
}

int h_sign(const Graph &g, uint64_t x) {
    return ((popcount(x) + g.edges_within(x)) & 1) ? -1 : 1;
}

int h_sign(const Graph &g, const BitString &x) {
    if (x.n != g.num_vertices()) {
        throw std::invalid_argument("h_sign: string length does not match the graph");
    }
    return h_sign(g, x.bits);
}

namespace {

/// Strings of an n-bit table sorted by decreasing weight, ties by value.
std::vector<uint64_t> weight_order(int n) {
    std::vector<uint64_t> order;
    for (uint64_t y = 1; y < (uint64_t{1} << n); y++) {
        order.push_back(y);
    }
    std::stable_sort(order.begin(), order.end(), [](uint64_t a, uint64_t b) { return popcount(a) > popcount(b); });
    return order;
}

/// Adds coefficient * prod (1 + sign_b K_b) to `terms` and removes every
/// lower-order cross term of the product from `c`, leaving c[y] = 0.
void peel_product(std::vector<double> &c, std::vector<DecompositionTerm> &terms, double coefficient,
                  const std::vector<uint64_t> &blocks, const std::vector<int> &signs) {
    size_t k = blocks.size();
    uint64_t full = (uint64_t{1} << k) - 1;
    for (uint64_t subset = 0; subset <= full; subset++) {
        uint64_t y = 0;
        int sign = 1;
        for (size_t b = 0; b < k; b++) {
            if ((subset >> b) & 1) {
                y ^= blocks[b];
                sign *= signs[b];
            }
        }
        c[y] -= sign * coefficient;
    }
    terms.push_back({coefficient, blocks, signs});
}

void require_table_size(int n, int limit, const char *what) {
    if (n < 1 || n > limit) {
        throw std::invalid_argument(std::string(what) + ": supported for 1 <= n <= " + std::to_string(limit));
    }
}

bool lex_less(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    return diff && !(a & diff & -diff);
}

}  // namespace

Decomposition tree_decomposition(const Graph &g, double s) {
    int n = g.num_vertices();
    require_table_size(n, 20, "tree_decomposition");
    if (!g.is_forest()) {
        throw std::invalid_argument("tree_decomposition: graph has a cycle");
    }
    Decomposition d{g, fast_bipartite_f(g, s), {}};
    for (uint64_t y = 1; y < (uint64_t{1} << n); y++) {
        uint64_t rest = g.all_vertices() & ~g.closed_neighbourhood(y);
        double f_rest = rest ? fast_bipartite_f(induced_subgraph(g, rest).graph, s) : 1.0;
        DecompositionTerm t;
        t.coefficient = std::pow(s, popcount(y)) * f_rest;
        t.blocks = g.components(y);
        t.signs.assign(t.blocks.size(), 1);
        d.terms.push_back(std::move(t));
    }
    return d;
}

Decomposition block_decomposition(const DiagonalState &st) {
    int n = st.num_qubits();
    require_table_size(n, 14, "block_decomposition");
    const Graph &g = st.graph();
    std::vector<double> c = st.coefficient_table();
    Decomposition d{g, 0, {}};
    for (uint64_t y : weight_order(n)) {
        if (c[y] == 0) {
            continue;
        }
        std::vector<uint64_t> blocks = g.components(y);
        std::vector<int> signs(blocks.size(), 1);
        double coefficient = c[y];
        if (coefficient < 0) {
            coefficient = -coefficient;
            signs.back() = -1;
        }
        peel_product(c, d.terms, coefficient, blocks, signs);
    }
    d.identity = c[0];
    return d;
}

OptimisedDecomposition optimised_block_decomposition(const DiagonalState &st) {
    int n = st.num_qubits();
    require_table_size(n, 6, "optimised_block_decomposition");
    const Graph &g = st.graph();
    uint64_t dim = uint64_t{1} << n;
    std::vector<double> target = st.coefficient_table();

    struct Column {
        std::vector<uint64_t> blocks;
        std::vector<int> signs;
    };
    std::vector<Column> columns;
    for (uint64_t y = 1; y < dim; y++) {
        std::vector<uint64_t> blocks = g.components(y);
        size_t k = blocks.size();
        for (uint64_t pattern = 0; pattern < (uint64_t{1} << k); pattern++) {
            std::vector<int> signs(k);
            for (size_t b = 0; b < k; b++) {
                signs[b] = ((pattern >> b) & 1) ? -1 : 1;
            }
            columns.push_back({blocks, signs});
        }
    }

    // Columns: one weight per signed product, then t+ and t- for the identity.
    LinearProgram lp;
    lp.num_vars = (int)columns.size() + 2;
    lp.a_eq.assign(dim, std::vector<double>(lp.num_vars, 0.0));
    lp.b_eq = target;
    for (size_t j = 0; j < columns.size(); j++) {
        const auto &col = columns[j];
        size_t k = col.blocks.size();
        for (uint64_t subset = 0; subset < (uint64_t{1} << k); subset++) {
            uint64_t y = 0;
            int sign = 1;
            for (size_t b = 0; b < k; b++) {
                if ((subset >> b) & 1) {
                    y ^= col.blocks[b];
                    sign *= col.signs[b];
                }
            }
            lp.a_eq[y][j] += sign;
        }
    }
    lp.a_eq[0][columns.size()] = 1;
    lp.a_eq[0][columns.size() + 1] = -1;
    lp.cost.assign(lp.num_vars, 0.0);
    lp.cost[columns.size()] = -1;
    lp.cost[columns.size() + 1] = 1;

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) {
        throw std::runtime_error("optimised_block_decomposition: linear program did not reach an optimum");
    }
    OptimisedDecomposition out;
    out.margin = res.x[columns.size()] - res.x[columns.size() + 1];
    out.decomposition = Decomposition{g, out.margin, {}};
    for (size_t j = 0; j < columns.size(); j++) {
        if (res.x[j] > 0) {
            out.decomposition.terms.push_back({res.x[j], columns[j].blocks, columns[j].signs});
        }
    }
    return out;
}

std::optional<std::pair<BitString, BitString>> eulerian_edge_cut(const Graph &g) {
    int n = g.num_vertices();
    if (n < 2 || n > 20 || !g.is_connected() || !two_colouring(g) || ((n + g.num_edges()) & 1)) {
        return std::nullopt;
    }
    // u = indicator of V2 solves (A + diag(deg)) u = 0 over GF(2).
    std::vector<uint64_t> rows(n);
    for (int v = 0; v < n; v++) {
        rows[v] = g.neighbours(v) | (uint64_t(g.degree(v) & 1) << v);
    }
    auto sol = gf2_solve(rows, 0, n);
    const auto &basis = sol->nullspace;
    uint64_t all = g.all_vertices();
    std::optional<uint64_t> best;
    uint64_t u = 0;
    for (uint64_t t = 0; t < (uint64_t{1} << basis.size()); t++) {
        if (t) {
            u ^= basis[std::countr_zero(t)];
        }
        if (u != 0 && u != all && (!best || lex_less(u, *best))) {
            best = u;
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return std::make_pair(BitString(all & ~*best, n), BitString(*best, n));
}

bool eulerian_edge_cut_exists_brute(const Graph &g) {
    int n = g.num_vertices();
    if (n > 20) {
        throw std::invalid_argument("eulerian_edge_cut_exists_brute limited to 20 vertices");
    }
    uint64_t all = g.all_vertices();
    for (uint64_t u = 1; u < all; u++) {
        bool ok = true;
        for (int v = 0; v < n && ok; v++) {
            uint64_t other = ((u >> v) & 1) ? (all & ~u) : u;
            ok = (popcount(g.neighbours(v) & other) & 1) == 0;
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

Decomposition two_colourable_decomposition(const Graph &g, double s) {
    int n = g.num_vertices();
    require_table_size(n, 14, "two_colourable_decomposition");
    if (!two_colouring(g)) {
        throw std::invalid_argument("two_colourable_decomposition: graph is not two-colourable");
    }
    std::vector<double> c(uint64_t{1} << n);
    for (uint64_t y = 0; y < c.size(); y++) {
        c[y] = std::pow(s, popcount(y));
    }
    Decomposition d{g, 0, {}};
    for (uint64_t x : weight_order(n)) {
        double cx = c[x];
        if (cx == 0) {
            continue;
        }
        std::vector<uint64_t> blocks = g.components(x);
        if (blocks.size() > 1) {
            std::vector<int> signs;
            int product = 1;
            for (uint64_t b : blocks) {
                signs.push_back(-h_sign(g, b));
                product *= signs.back();
            }
            if (product < 0) {
                signs.back() = -signs.back();
            }
            peel_product(c, d.terms, cx, blocks, signs);
        } else if (h_sign(g, x) < 0) {
            peel_product(c, d.terms, cx, {x}, {1});
        } else {
            InducedSubgraph sub = induced_subgraph(g, x);
            auto cut = eulerian_edge_cut(sub.graph);
            if (!cut) {
                throw std::logic_error("two_colourable_decomposition: no Eulerian edge cut for an h = +1 block");
            }
            uint64_t y = sub.lift(cut->first.bits);
            uint64_t r = sub.lift(cut->second.bits);
            int hy = h_sign(g, y);
            // c_x (1 - h_y K_y)(1 - h_y K_r) = c_x (1 - h_y K_y - h_y K_r + K_x).
            peel_product(c, d.terms, cx, {y, r}, {-hy, -hy});
        }
    }
    d.identity = c[0];
    return d;
}

double reconstruction_error(const Decomposition &d, const DiagonalState &st) {
    if (d.graph.num_vertices() != st.num_qubits() || st.num_qubits() > 20) {
        throw std::invalid_argument("reconstruction_error: size mismatch or more than 20 qubits");
    }
    auto a = d.coefficient_table();
    auto b = st.coefficient_table();
    double out = 0;
    for (size_t k = 0; k < a.size(); k++) {
        out = std::max(out, std::fabs(a[k] - b[k]));
    }
    return out;
}

}  // namespace graphdiag
