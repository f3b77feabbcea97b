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
#include "qiso/graph.hpp"
#include "qiso/graph_io.hpp"

namespace qiso {
namespace {

TEST(Graph, BasicQueries) {
    Graph g = testing::cycle(5);
    EXPECT_EQ(g.n(), 5);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_TRUE(g.adjacent(0, 4));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_FALSE(g.adjacent(3, 3));
    EXPECT_EQ(g.neighbors(0), (std::vector<int>{1, 4}));
    EXPECT_EQ(g.complement().edge_count(), 5u);
    EXPECT_EQ(g.with_edge_flipped(0, 2).edge_count(), 6u);
    EXPECT_THROW((void)g.adjacent(0, 5), std::out_of_range);
}

TEST(Graph, RejectsLoopsAndAsymmetry) {
    std::vector<std::pair<int, int>> loop = {{1, 1}};
    EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
    EXPECT_THROW(Graph::from_adjacency_matrix({{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST(Graph, SrgParametersOfKnownGraphs) {
    EXPECT_EQ(srg_parameters(testing::petersen()), (SrgParameters{10, 3, 0, 1}));
    EXPECT_EQ(srg_parameters(testing::shrikhande()), (SrgParameters{16, 6, 2, 2}));
    EXPECT_EQ(srg_parameters(testing::rook4()), (SrgParameters{16, 6, 2, 2}));
    EXPECT_EQ(srg_parameters(testing::cycle(5)), (SrgParameters{5, 2, 0, 1}));
    EXPECT_FALSE(srg_parameters(testing::cycle(6)).has_value());
    EXPECT_EQ(complement_parameters({10, 3, 0, 1}), (SrgParameters{10, 6, 3, 4}));
}

TEST(Graph, ComplementParametersMatchComputedComplement) {
    for (const Graph &g : {testing::petersen(), testing::shrikhande()}) {
        EXPECT_EQ(srg_parameters(g.complement()), complement_parameters(*srg_parameters(g)));
    }
}

TEST(Graph, Distances) {
    Graph g = testing::cycle(6);
    EXPECT_EQ(distance(g, 0, 3), 3);
    EXPECT_EQ(distance(g, 0, 0), 0);
    Graph two = Graph::from_predicate(4, [](int a, int b) { return a / 2 == b / 2; });
    EXPECT_FALSE(distance(two, 0, 3).has_value());
}

TEST(Graph, RelabelingPreservesStructure) {
    Graph g = testing::petersen();
    auto perm = testing::random_permutation(10, 3);
    Graph h = g.relabeled(perm);
    EXPECT_TRUE(is_isomorphism(g, h, perm));
    EXPECT_EQ(srg_parameters(h), srg_parameters(g));
}

TEST(Graph, AutomorphismCheck) {
    Graph g = testing::cycle(7);
    std::vector<int> rotate(7), bad = {1, 0, 2, 3, 4, 5, 6};
    for (int i = 0; i < 7; i++) rotate[static_cast<std::size_t>(i)] = (i + 1) % 7;
    EXPECT_TRUE(is_automorphism(g, rotate));
    EXPECT_FALSE(is_automorphism(g, bad));
}

TEST(GraphIo, Graph6KnownEncoding) {
    EXPECT_EQ(graph6_encode(testing::petersen()), "IheA@GUAo");
    EXPECT_EQ(graph6_decode("IheA@GUAo"), testing::petersen());
    EXPECT_EQ(graph6_encode(Graph(0)), "?");
}

TEST(GraphIo, Graph6RoundTripOnLargeGraphs) {
    for (int n : {1, 62, 63, 120, 300}) {
        Graph g = testing::random_graph(n, 0.4, static_cast<std::uint64_t>(n));
        EXPECT_EQ(graph6_decode(graph6_encode(g)), g) << n;
    }
}

TEST(GraphIo, DimacsRoundTrip) {
    Graph g = testing::random_graph(40, 0.3, 11);
    EXPECT_EQ(dimacs_decode(dimacs_encode(g)), g);
}

TEST(GraphIo, MalformedInputReportsPosition) {
    EXPECT_THROW(graph6_decode("I he"), FormatError);
    try {
        dimacs_decode("c comment\np edge 3 1\ne 1 9\n");
        FAIL();
    } catch (const FormatError &e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

}  // namespace
}  // namespace qiso
