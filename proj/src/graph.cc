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

#include "graphdiag/graph.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace graphdiag {

Graph::Graph(int num_vertices) : n_(num_vertices), adjacency_(num_vertices, 0) {
    if (num_vertices < 0 || num_vertices > MAX_BITS) {
        throw std::invalid_argument("Graph: vertex count must be in [0, 63], got " + std::to_string(num_vertices));
    }
}

Graph Graph::from_edges(int num_vertices, std::span<const std::pair<int, int>> edges) {
    Graph g(num_vertices);
    for (const auto &[a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        throw std::out_of_range(
            "Graph: edge {" + std::to_string(a) + "," + std::to_string(b) + "} outside 0.." + std::to_string(n_ - 1));
    }
    if (a == b) {
        throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
    }
    if (has_edge(a, b)) {
        throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    adjacency_[a] |= uint64_t{1} << b;
    adjacency_[b] |= uint64_t{1} << a;
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

Graph Graph::chain(int n) {
    if (n < 1) {
        throw std::invalid_argument("chain needs at least one vertex");
    }
    Graph g(n);
    for (int k = 0; k + 1 < n; k++) {
        g.add_edge(k, k + 1);
    }
    return g;
}

Graph Graph::ring(int n) {
    if (n < 3) {
        throw std::invalid_argument("ring needs at least three vertices");
    }
    Graph g = chain(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::star(int n) {
    if (n < 1) {
        throw std::invalid_argument("star needs at least one vertex");
    }
    Graph g(n);
    for (int k = 1; k < n; k++) {
        g.add_edge(0, k);
    }
    return g;
}

Graph Graph::lattice(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols > MAX_BITS) {
        throw std::invalid_argument("lattice dimensions out of range");
    }
    Graph g(rows * cols);
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            int v = r * cols + c;
            if (c + 1 < cols) {
                g.add_edge(v, v + 1);
            }
            if (r + 1 < rows) {
                g.add_edge(v, v + cols);
            }
        }
    }
    return g;
}

Graph Graph::tree(std::span<const int> parents) {
    Graph g((int)parents.size());
    int roots = 0;
    for (size_t k = 0; k < parents.size(); k++) {
        if (parents[k] < 0) {
            roots++;
        } else {
            g.add_edge((int)k, parents[k]);
        }
    }
    if (roots != 1 || !g.is_tree()) {
        throw std::invalid_argument("tree: parent array must describe a single rooted tree");
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            g.add_edge(a, b);
        }
    }
    return g;
}

uint64_t Graph::adjacency_times(uint64_t mask) const {
    uint64_t out = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out ^= adjacency_[v];
    }
    return out;
}

int Graph::edges_within(uint64_t mask) const {
    int twice = 0;
    uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        twice += popcount(adjacency_[v] & mask);
    }
    return twice / 2;
}

uint64_t Graph::closed_neighbourhood(uint64_t mask) const {
    uint64_t out = mask;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out |= adjacency_[v];
    }
    return out;
}

std::vector<uint64_t> Graph::components(uint64_t mask) const {
    std::vector<uint64_t> out;
    uint64_t remaining = mask & all_vertices();
    while (remaining) {
        uint64_t comp = remaining & -remaining;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t grown = comp | (closed_neighbourhood(frontier) & remaining);
            frontier = grown & ~comp;
            comp = grown;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

bool Graph::is_connected() const {
    return n_ == 0 || components(all_vertices()).size() == 1;
}

bool Graph::is_forest() const {
    return (int)edges_.size() + (int)components(all_vertices()).size() == n_;
}

bool Graph::is_tree() const {
    return n_ > 0 && is_connected() && (int)edges_.size() == n_ - 1;
}

int edge_cross_parity(const Graph &g, uint64_t y, uint64_t z) {
    // Count each crossing edge from its endpoint on the z = 0 side.
    uint64_t low_side = y & ~z;
    uint64_t high_side = y & z;
    int parity = 0;
    while (low_side) {
        int v = std::countr_zero(low_side);
        low_side &= low_side - 1;
        parity ^= popcount(g.neighbours(v) & high_side);
    }
    return parity & 1;
}

int edge_cross_parity(const Graph &g, const BitString &y, const BitString &z) {
    if (y.n != g.num_vertices() || z.n != g.num_vertices()) {
        throw std::invalid_argument("edge_cross_parity: bit-length mismatch with graph size");
    }
    return edge_cross_parity(g, y.bits, z.bits);
}

uint64_t InducedSubgraph::restrict(uint64_t parent_mask) const {
    uint64_t out = 0;
    for (size_t k = 0; k < to_parent.size(); k++) {
        out |= ((parent_mask >> to_parent[k]) & 1) << k;
    }
    return out;
}

uint64_t InducedSubgraph::lift(uint64_t sub_mask) const {
    uint64_t out = 0;
    for (size_t k = 0; k < to_parent.size(); k++) {
        out |= ((sub_mask >> k) & 1) << to_parent[k];
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph &g, uint64_t keep) {
    InducedSubgraph out;
    keep &= g.all_vertices();
    out.to_sub.assign(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); v++) {
        if ((keep >> v) & 1) {
            out.to_sub[v] = (int)out.to_parent.size();
            out.to_parent.push_back(v);
        }
    }
    out.graph = Graph((int)out.to_parent.size());
    for (const auto &[a, b] : g.edges()) {
        if (out.to_sub[a] >= 0 && out.to_sub[b] >= 0) {
            out.graph.add_edge(out.to_sub[a], out.to_sub[b]);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph &g, const BitString &keep) {
    if (keep.n != g.num_vertices()) {
        throw std::invalid_argument("induced_subgraph: keep mask length mismatch");
    }
    return induced_subgraph(g, keep.bits);
}

Graph crossing_subgraph(const Graph &g, uint64_t z) {
    Graph out(g.num_vertices());
    for (const auto &[a, b] : g.edges()) {
        if (((z >> a) ^ (z >> b)) & 1) {
            out.add_edge(a, b);
        }
    }
    return out;
}

TwoColouring two_colouring(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> colour(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<int> depth(n, 0);
    for (int root = 0; root < n; root++) {
        if (colour[root] >= 0) {
            continue;
        }
        colour[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            uint64_t nb = g.neighbours(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (colour[w] < 0) {
                    colour[w] = colour[v] ^ 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    // Odd cycle: walk both BFS paths up to their meeting point.
                    std::vector<int> left, right;
                    int a = v, b = w;
                    while (depth[a] > depth[b]) {
                        left.push_back(a);
                        a = parent[a];
                    }
                    while (depth[b] > depth[a]) {
                        right.push_back(b);
                        b = parent[b];
                    }
                    while (a != b) {
                        left.push_back(a);
                        right.push_back(b);
                        a = parent[a];
                        b = parent[b];
                    }
                    left.push_back(a);
                    TwoColouring out;
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                    return out;
                }
            }
        }
    }
    uint64_t bits = 0;
    for (int v = 0; v < n; v++) {
        bits |= uint64_t(colour[v]) << v;
    }
    TwoColouring out;
    out.colouring = BitString(bits, n);
    return out;
}

}  // namespace graphdiag
