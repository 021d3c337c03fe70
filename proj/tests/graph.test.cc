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

#include <gtest/gtest.h>

#include <random>

#include "graphdiag/gf2.h"
#include "graphdiag/oracle_checks.h"

namespace graphdiag {
namespace {

bool brute_two_colourable(const Graph &g) {
    int n = g.num_vertices();
    for (uint64_t c = 0; c < (uint64_t{1} << n); c++) {
        bool ok = true;
        for (auto [a, b] : g.edges()) {
            ok = ok && (((c >> a) ^ (c >> b)) & 1);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

TEST(Graph, NamedFamilies) {
    EXPECT_EQ(Graph::chain(5).num_edges(), 4u);
    EXPECT_EQ(Graph::ring(6).num_edges(), 6u);
    EXPECT_EQ(Graph::star(4).degree(0), 3);
    Graph lat = Graph::lattice(3, 3);
    EXPECT_EQ(lat.num_vertices(), 9);
    EXPECT_EQ(lat.num_edges(), 12u);
    std::vector<int> parents{-1, 0, 0, 1};
    Graph t = Graph::tree(parents);
    EXPECT_TRUE(t.is_tree());
    EXPECT_TRUE(t.has_edge(3, 1));
}

TEST(Graph, RejectsBadEdges) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
}

TEST(InducedSubgraph, RemovingTheMiddleOfAChain) {
    auto sub = induced_subgraph(Graph::chain(3), BitString::from_string("101"));
    EXPECT_EQ(sub.graph.num_vertices(), 2);
    EXPECT_EQ(sub.graph.num_edges(), 0u);
}

TEST(InducedSubgraph, TailOfAChainIsAChain) {
    auto sub = induced_subgraph(Graph::chain(4), BitString::from_string("0111"));
    EXPECT_EQ(sub.graph, Graph::chain(3));
    EXPECT_EQ(sub.lift(sub.restrict(0b1110)), 0b1110u);
}

TEST(InducedSubgraph, KeepingEverythingIsIdentity) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; k++) {
        Graph g = random_graph(1 + k % 9, rng);
        EXPECT_EQ(induced_subgraph(g, g.all_vertices()).graph, g);
    }
}

TEST(TwoColouring, ChainAlternatesFromVertexZero) {
    auto c = two_colouring(Graph::chain(4));
    ASSERT_TRUE(c);
    EXPECT_EQ(c.colouring->str(), "0101");
}

TEST(TwoColouring, StarPutsCentreAlone) {
    auto c = two_colouring(Graph::star(4));
    ASSERT_TRUE(c);
    EXPECT_EQ(c.colouring->str(), "0111");
}

TEST(TwoColouring, TriangleReportsOddCycle) {
    auto c = two_colouring(Graph::ring(3));
    EXPECT_FALSE(c);
    EXPECT_EQ(c.odd_cycle.size() % 2, 1u);
    for (size_t i = 0; i < c.odd_cycle.size(); i++) {
        EXPECT_TRUE(Graph::ring(3).has_edge(c.odd_cycle[i], c.odd_cycle[(i + 1) % c.odd_cycle.size()]));
    }
}

TEST(TwoColouring, AgreesWithExhaustiveSearch) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; k++) {
        Graph g = random_graph(1 + k % 8, rng);
        auto c = two_colouring(g);
        ASSERT_EQ(bool(c), brute_two_colourable(g));
        if (c) {
            for (auto [a, b] : g.edges()) {
                EXPECT_NE((*c.colouring)[a], (*c.colouring)[b]);
            }
        } else {
            const auto &cyc = c.odd_cycle;
            ASSERT_EQ(cyc.size() % 2, 1u);
            for (size_t i = 0; i < cyc.size(); i++) {
                EXPECT_TRUE(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
        }
    }
}

TEST(Graph, EdgeCrossParityCountsOnlyCrossingEdges) {
    Graph g = Graph::chain(3);
    // y = 111 has edges 01 and 12; z = 010 cuts both.
    EXPECT_EQ(edge_cross_parity(g, 0b111, 0b010), 0);
    EXPECT_EQ(edge_cross_parity(g, 0b011, 0b010), 1);
    EXPECT_EQ(edge_cross_parity(g, 0b011, 0b100), 0);
}

TEST(Gf2, IdentitySystemHasUniqueSolution) {
    auto sol = gf2_solve({0b001, 0b010, 0b100}, 0b101, 3);
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular, 0b101u);
    EXPECT_TRUE(sol->nullspace.empty());
}

TEST(Gf2, ZeroSystemHasFullNullspace) {
    auto sol = gf2_solve({0, 0, 0}, 0, 3);
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular, 0u);
    EXPECT_EQ(sol->nullspace.size(), 3u);
    EXPECT_EQ(gf2_rank(sol->nullspace), 3);
}

TEST(Gf2, ContradictoryRowsHaveNoSolution) {
    EXPECT_FALSE(gf2_solve({0b11, 0b11}, 0b01, 2));
}

TEST(Gf2, SolutionSetMatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; k++) {
        int cols = 1 + k % 12;
        int rows = 1 + (k * 7) % 12;
        std::vector<uint64_t> a(rows);
        for (auto &r : a) {
            r = rng() & low_mask(cols);
        }
        uint64_t rhs = rng() & low_mask(rows);
        auto apply = [&](uint64_t x) {
            uint64_t out = 0;
            for (int i = 0; i < rows; i++) {
                out |= uint64_t(dot_parity(a[i], x)) << i;
            }
            return out;
        };
        int count = 0;
        for (uint64_t x = 0; x < (uint64_t{1} << cols); x++) {
            count += apply(x) == rhs;
        }
        auto sol = gf2_solve(a, rhs, cols);
        if (count == 0) {
            EXPECT_FALSE(sol);
            continue;
        }
        ASSERT_TRUE(sol);
        EXPECT_EQ(apply(sol->particular), rhs);
        for (uint64_t v : sol->nullspace) {
            EXPECT_EQ(apply(v), 0u);
        }
        EXPECT_EQ(gf2_rank(sol->nullspace), (int)sol->nullspace.size());
        EXPECT_EQ(count, 1 << sol->nullspace.size());
    }
}

}  // namespace
}  // namespace graphdiag
