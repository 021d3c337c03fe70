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

#ifndef GRAPHDIAG_GRAPH_H
#define GRAPHDIAG_GRAPH_H

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphdiag/bitstring.h"

namespace graphdiag {

/// Simple undirected graph on at most 63 vertices.
///
/// Each vertex carries its neighbourhood as a bit mask so that stabilizer
/// products and induced subgraphs reduce to word operations.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int num_vertices);

    static Graph from_edges(int num_vertices, std::span<const std::pair<int, int>> edges);
    static Graph chain(int n);
    static Graph ring(int n);
    /// Star with vertex 0 at the centre and n - 1 leaves.
    static Graph star(int n);
    /// rows x cols square lattice, vertex index r * cols + c.
    static Graph lattice(int rows, int cols);
    /// Tree from a parent array; exactly one entry must be -1 (the root).
    static Graph tree(std::span<const int> parents);
    static Graph complete(int n);

    void add_edge(int a, int b);

    int num_vertices() const {
        return n_;
    }
    size_t num_edges() const {
        return edges_.size();
    }
    /// Edges as (min, max) pairs in insertion order.
    const std::vector<std::pair<int, int>> &edges() const {
        return edges_;
    }
    uint64_t neighbours(int v) const {
        return adjacency_[v];
    }
    int degree(int v) const {
        return popcount(adjacency_[v]);
    }
    bool has_edge(int a, int b) const {
        return (adjacency_[a] >> b) & 1;
    }
    uint64_t all_vertices() const {
        return low_mask(n_);
    }
    /// XOR of the neighbourhoods of the vertices in `mask`, i.e. A.mask mod 2.
    uint64_t adjacency_times(uint64_t mask) const;
    /// Number of edges with both endpoints in `mask`.
    int edges_within(uint64_t mask) const;
    /// `mask` plus every vertex adjacent to it.
    uint64_t closed_neighbourhood(uint64_t mask) const;

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const;

    /// Vertices of the induced subgraph on `mask`, one mask per component,
    /// ordered by lowest vertex.
    std::vector<uint64_t> components(uint64_t mask) const;

    bool operator==(const Graph &other) const {
        return n_ == other.n_ && adjacency_ == other.adjacency_;
    }

   private:
    int n_ = 0;
    std::vector<uint64_t> adjacency_;
    std::vector<std::pair<int, int>> edges_;
};

/// (sum over edges {n,m} of y_n y_m (z_n xor z_m)) mod 2.
int edge_cross_parity(const Graph &g, uint64_t y, uint64_t z);
int edge_cross_parity(const Graph &g, const BitString &y, const BitString &z);

struct InducedSubgraph {
    Graph graph;
    /// Parent vertex -> subgraph vertex, or -1 if removed.
    std::vector<int> to_sub;
    /// Subgraph vertex -> parent vertex.
    std::vector<int> to_parent;

    uint64_t restrict(uint64_t parent_mask) const;
    uint64_t lift(uint64_t sub_mask) const;
};

InducedSubgraph induced_subgraph(const Graph &g, const BitString &keep);
InducedSubgraph induced_subgraph(const Graph &g, uint64_t keep);

/// Graph keeping only the edges whose endpoints lie on opposite sides of z.
Graph crossing_subgraph(const Graph &g, uint64_t z);

struct TwoColouring {
    /// Colour class indicator (1 = second class); empty iff an odd cycle exists.
    std::optional<BitString> colouring;
    /// Vertices of an odd cycle, in cycle order, when not two-colourable.
    std::vector<int> odd_cycle;

    explicit operator bool() const {
        return colouring.has_value();
    }
};

/// BFS colouring; the lowest vertex of every component gets colour 0.
TwoColouring two_colouring(const Graph &g);

}  // namespace graphdiag

#endif
