// Copyright 2026 The qiso Authors
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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qiso/homcount.hpp"
#include "qiso/patterns.hpp"

namespace qiso {
namespace {

using Int = std::vector<std::vector<BigInt>>;

Int integer_adjacency(const Graph &g) {
    Int a(static_cast<std::size_t>(g.n()), std::vector<BigInt>(static_cast<std::size_t>(g.n()), 0));
    for (int u = 0; u < g.n(); u++) {
        for (int v = 0; v < g.n(); v++) a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = g.adjacent(u, v) ? 1 : 0;
    }
    return a;
}

Int multiply(const Int &a, const Int &b) {
    const std::size_t n = a.size();
    Int c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; j++) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

TEST(HomCount, MatchesBruteForceOnAllSmallPatterns) {
    std::vector<Graph> targets = {testing::random_graph(9, 0.5, 1), testing::random_graph(10, 0.3, 2), testing::petersen()};
    for (const auto &p : enumerate_connected_graphs(4)) {
        for (const auto &g : targets) {
            EXPECT_EQ(hom_count(p.graph, g), BigInt(static_cast<unsigned long>(testing::brute_hom(p.graph, g)))) << p.id;
        }
    }
}

TEST(HomCount, MatchesBruteForceOnFiveVertexPatterns) {
    Graph g = testing::random_graph(8, 0.5, 4);
    for (const auto &p : enumerate_connected_graphs(5)) {
        if (p.graph.n() != 5) continue;
        EXPECT_EQ(hom_count(p.graph, g), BigInt(static_cast<unsigned long>(testing::brute_hom(p.graph, g)))) << p.id;
    }
}

TEST(HomCount, LibraryBruteForceAgrees) {
    Graph g = testing::random_graph(7, 0.5, 8);
    for (const auto &p : enumerate_connected_graphs(4)) {
        EXPECT_EQ(hom_count_brute(p.graph, g), BigInt(static_cast<unsigned long>(testing::brute_hom(p.graph, g))));
    }
}

TEST(HomCount, DisconnectedPatternsMultiply) {
    Graph g = testing::random_graph(9, 0.4, 3);
    EXPECT_EQ(hom_count(Graph(2), g), BigInt(81));
    std::vector<std::pair<int, int>> two_edges = {{0, 1}, {2, 3}};
    BigInt e = 2 * static_cast<unsigned long>(g.edge_count());
    EXPECT_EQ(hom_count(Graph::from_edges(4, two_edges), g), e * e);
}

TEST(HomCount, CyclesAreTracesOfPowers) {
    Graph g = testing::random_graph(30, 0.4, 6);
    Int a = integer_adjacency(g), power = a;
    for (int k = 2; k <= 7; k++) {
        power = multiply(power, a);
        if (k < 3) continue;
        BigInt trace = 0;
        for (std::size_t i = 0; i < power.size(); i++) trace += power[i][i];
        EXPECT_EQ(hom_count(cycle_graph(k), g), trace) << k;
        EXPECT_EQ(closed_walks(g, k), trace) << k;
    }
}

TEST(HomCount, PathsAreWalkSums) {
    Graph g = testing::random_graph(30, 0.3, 7);
    Int a = integer_adjacency(g), power = a;
    for (int edges = 1; edges <= 6; edges++) {
        if (edges > 1) power = multiply(power, a);
        BigInt total = 0;
        for (const auto &row : power) {
            for (const auto &x : row) total += x;
        }
        EXPECT_EQ(hom_count(path_graph(edges + 1), g), total) << edges;
        EXPECT_EQ(walks(g, edges), total) << edges;
    }
}

TEST(HomCount, CompleteGraphsCountOrderedCliques) {
    Graph g = testing::random_graph(11, 0.7, 9);
    for (int k = 2; k <= 5; k++) {
        EXPECT_EQ(hom_count(complete_graph(k), g), hom_complete(k, g)) << k;
        EXPECT_EQ(hom_complete(k, g), BigInt(static_cast<unsigned long>(testing::brute_hom(complete_graph(k), g)))) << k;
    }
}

TEST(HomCount, ProfileOfIdenticalGraphsHasNoDifferences) {
    Graph g = testing::petersen();
    auto r = hom_profile_compare(g, g.relabeled(testing::random_permutation(10, 5)), 5, false);
    EXPECT_EQ(r.differences, 0u);
    EXPECT_EQ(r.rows.size(), 1u + 1 + 2 + 6 + 21);
}

TEST(HomCount, ProfileSeparatesShrikhandeFromRookGraph) {
    auto r = hom_profile_compare(testing::rook4(), testing::shrikhande(), 4, true);
    EXPECT_GT(r.planar_differences, 0u);
    bool k4_differs = false;
    for (const auto &row : r.rows) {
        if (row.id == canonical_id(complete_graph(4))) k4_differs = !row.equal() && row.left > 0 && row.right == 0;
    }
    EXPECT_TRUE(k4_differs);
    auto text = format_hom_profile(r);
    EXPECT_NE(text.find(" no\n"), std::string::npos);
}

}  // namespace
}  // namespace qiso
