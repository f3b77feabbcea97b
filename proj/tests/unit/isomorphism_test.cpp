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
#include "qiso/isomorphism.hpp"

namespace qiso {
namespace {

TEST(Isomorphism, TriangleVersusPathFailsOnDegrees) {
    Graph triangle = testing::cycle(3);
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
    Graph path = Graph::from_edges(3, edges);
    auto r = are_isomorphic(triangle, path);
    ASSERT_EQ(r.outcome, IsoOutcome::non_isomorphic);
    EXPECT_EQ(r.certificate->kind, "edge_count");
    EXPECT_TRUE(recheck_certificate(triangle, path, *r.certificate));
}

TEST(Isomorphism, DegreeSequenceSeparatesEqualEdgeCounts) {
    std::vector<std::pair<int, int>> star = {{0, 1}, {0, 2}, {0, 3}}, path = {{0, 1}, {1, 2}, {2, 3}};
    auto r = are_isomorphic(Graph::from_edges(4, star), Graph::from_edges(4, path));
    ASSERT_EQ(r.outcome, IsoOutcome::non_isomorphic);
    EXPECT_EQ(r.certificate->kind, "degree_sequence");
}

TEST(Isomorphism, ShrikhandeIsNotTheRookGraph) {
    Graph s = testing::shrikhande(), r4 = testing::rook4();
    auto r = are_isomorphic(s, r4);
    ASSERT_EQ(r.outcome, IsoOutcome::non_isomorphic);
    EXPECT_TRUE(recheck_certificate(s, r4, *r.certificate));
    auto back = are_isomorphic(r4, s);
    EXPECT_EQ(back.outcome, IsoOutcome::non_isomorphic);
}

TEST(Isomorphism, RelabeledCopiesAreFoundWithVerifiedMaps) {
    std::vector<Graph> graphs = {testing::petersen(), testing::shrikhande(), testing::rook4(),
                                 testing::random_graph(30, 0.5, 1), testing::cycle(12)};
    for (std::size_t i = 0; i < graphs.size(); i++) {
        const Graph &g = graphs[i];
        Graph h = g.relabeled(testing::random_permutation(g.n(), i + 10));
        auto r = are_isomorphic(g, h);
        ASSERT_EQ(r.outcome, IsoOutcome::isomorphic) << i;
        EXPECT_TRUE(is_isomorphism(g, h, r.map)) << i;
    }
}

TEST(Isomorphism, ReflexiveAndSymmetric) {
    for (std::uint64_t seed = 0; seed < 15; seed++) {
        Graph g = testing::random_graph(12, 0.4, seed), h = testing::random_graph(12, 0.4, seed + 50);
        EXPECT_EQ(are_isomorphic(g, g).outcome, IsoOutcome::isomorphic);
        EXPECT_EQ(are_isomorphic(g, h).outcome, are_isomorphic(h, g).outcome);
    }
}

TEST(Isomorphism, CertificatesAreSound) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        Graph g = testing::random_graph(10, 0.5, seed), h = testing::random_graph(10, 0.5, seed + 1000);
        auto r = are_isomorphic(g, h);
        if (r.outcome != IsoOutcome::non_isomorphic) continue;
        EXPECT_NE(r.certificate->value_left, r.certificate->value_right);
        EXPECT_TRUE(recheck_certificate(g, h, *r.certificate)) << r.certificate->kind;
    }
}

TEST(Isomorphism, ForgedCertificateIsRejected) {
    Graph g = testing::petersen();
    NonIsoCertificate forged{"vertex_count", "10", "11"};
    EXPECT_FALSE(recheck_certificate(g, g, forged));
}

TEST(Isomorphism, InvariantKindsAreComputable) {
    Graph g = testing::petersen();
    for (const auto &kind : invariant_kinds()) {
        EXPECT_TRUE(invariant_value(g, kind).has_value()) << kind;
    }
    EXPECT_EQ(*invariant_value(g, "independence_number"), "4");
}

TEST(Isomorphism, RefinementSplitsByDegree) {
    std::vector<std::pair<int, int>> star = {{0, 1}, {0, 2}, {0, 3}};
    auto colors = refine_colors(Graph::from_edges(4, star), std::vector<std::uint64_t>(4, 0));
    EXPECT_NE(colors[0], colors[1]);
    EXPECT_EQ(colors[1], colors[2]);
}

}  // namespace
}  // namespace qiso
