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
#include "qiso/graph_io.hpp"
#include "qiso/magic.hpp"
#include "qiso/polynomial.hpp"
#include "qiso/roots.hpp"
#include "qiso/switching.hpp"

namespace qiso {
namespace {

/// C = {0,1,2,3} independent; D = {4,5,6} with 4 seeing half of C, 5 all of it, 6 none.
Graph small_example() {
    std::vector<std::pair<int, int>> edges = {{4, 0}, {4, 1}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {4, 5}, {5, 6}};
    return Graph::from_edges(7, edges);
}

TEST(Switching, SmallExampleSwapsTheHalfJoin) {
    GmPartition p{{{0, 1, 2, 3}}, {4, 5, 6}};
    Graph g = small_example();
    auto v = validate_gm_partition(g, p);
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(v.half_joins, 1u);
    Graph s = gm_switch(g, p);
    EXPECT_FALSE(s.adjacent(4, 0));
    EXPECT_TRUE(s.adjacent(4, 2));
    EXPECT_TRUE(s.adjacent(4, 3));
    EXPECT_TRUE(s.adjacent(5, 1));
    EXPECT_EQ(s.edge_count(), g.edge_count());
    EXPECT_EQ(char_poly(s.adjacency_matrix()), char_poly(g.adjacency_matrix()));
}

TEST(Switching, QMatrixConjugatesAdjacency) {
    GmPartition p{{{0, 1, 2, 3}}, {4, 5, 6}};
    Graph g = small_example();
    RationalMatrix q = build_Q(p, 7);
    EXPECT_EQ(mat_mul(q, q), RationalMatrix::identity(7));
    EXPECT_EQ(q(0, 0), Rational(-1, 2));
    EXPECT_EQ(q(0, 1), Rational(1, 2));
    EXPECT_EQ(q(4, 4), Rational(1));
    EXPECT_EQ(mat_mul(mat_mul(q, g.adjacency_matrix()), q), gm_switch(g, p).adjacency_matrix());
    EXPECT_TRUE(verify_QAQ(g, p));
}

TEST(Switching, InvalidPartitionsAreRejected) {
    Graph g = small_example();
    GmPartition uneven{{{0, 1, 2, 4}}, {3, 5, 6}};
    EXPECT_FALSE(validate_gm_partition(g, uneven).passed());
    EXPECT_THROW(gm_switch(g, uneven), std::invalid_argument);
    GmPartition overlap{{{0, 1, 2, 3}}, {3, 4, 5, 6}};
    EXPECT_THROW(validate_gm_partition(g, overlap), std::invalid_argument);
    GmPartition missing{{{0, 1, 2, 3}}, {4, 5}};
    EXPECT_THROW(validate_gm_partition(g, missing), std::invalid_argument);
}

TEST(Switching, CospectralityCheck) {
    EXPECT_TRUE(cospectral(testing::shrikhande(), testing::rook4()));
    EXPECT_FALSE(cospectral(testing::cycle(6), testing::random_graph(6, 0.5, 2)));
    EXPECT_THROW(cospectral(Graph(3), Graph(4)), DimensionError);
}

TEST(Switching, TextFormatRoundTripsAndReportsLines) {
    GmPartition p{{{0, 1, 2, 3}, {7, 8}}, {4, 5, 6}};
    EXPECT_EQ(parse_gm_partition(format_gm_partition(p)).cells, p.cells);
    EXPECT_EQ(parse_gm_partition("# comment\nC 0 1\nD 2 3\n").d, (std::vector<int>{2, 3}));
    try {
        parse_gm_partition("C 0 1\n\nQ 2 3\n");
        FAIL();
    } catch (const FormatError &e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_gm_partition("C 0 x\n"), FormatError);
    EXPECT_THROW(parse_gm_partition("D 0\nD 1\n"), FormatError);
}

class SwitchingE8 : public ::testing::Test {
   protected:
    std::vector<Line> lines = build_root_lines();
    OrbitPartition cells = compute_orbits(lines);
    Graph e8 = build_orthogonality_graph(lines);
    Graph gw = build_Gw(lines, cells, WChoice::standard());
};

TEST_F(SwitchingE8, LastCellPartitionValidatesOnBothGraphs) {
    GmPartition p = v15_partition(cells);
    EXPECT_EQ(p.cells.size(), 14u);
    EXPECT_EQ(p.d, cells.cells[14]);
    for (const Graph *g : {&e8, &gw}) {
        auto v = validate_gm_partition(*g, p);
        EXPECT_TRUE(v.passed());
        EXPECT_EQ(v.half_joins, 112u);
        EXPECT_EQ(v.half_joins_of_four, 112u);
    }
}

TEST_F(SwitchingE8, SwitchedGraphsStayStronglyRegular) {
    GmPartition p = v15_partition(cells);
    EXPECT_EQ(srg_parameters(gm_switch(e8, p)), (SrgParameters{120, 63, 30, 36}));
    EXPECT_EQ(gm_switch(gm_switch(gw, p), p), gw);
}

TEST_F(SwitchingE8, GroupedOrbitCells) {
    GmPartition p = partition_from_orbit_groups(cells, {{1, 2}, {3}}, {15});
    EXPECT_EQ(p.cells[0].size(), 16u);
    EXPECT_THROW(partition_from_orbit_groups(cells, {{1, 16}}, {15}), std::invalid_argument);
}

TEST_F(SwitchingE8, MisalignedPartitionIsReported) {
    MagicUnitary u = build_magic_unitary(lines, cells, WChoice::standard());
    GmPartition p = v15_partition(cells);
    EXPECT_TRUE(verify_uQ_commute(u, p));
    std::swap(p.cells[0][0], p.cells[1][0]);
    EXPECT_THROW(verify_uQ_commute(u, p), std::invalid_argument);
}

}  // namespace
}  // namespace qiso
