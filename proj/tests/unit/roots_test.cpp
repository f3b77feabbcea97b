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

#include <set>

#include "qiso/roots.hpp"

namespace qiso {
namespace {

class Roots : public ::testing::Test {
   protected:
    std::vector<Line> lines = build_root_lines();
    OrbitPartition cells = compute_orbits(lines);
    Graph e8 = build_orthogonality_graph(lines);

    std::set<int> indices(std::initializer_list<Line> xs) const {
        std::set<int> out;
        for (const auto &x : xs) out.insert(line_index(lines, x));
        return out;
    }
    std::set<int> cell(int i) const {
        const auto &c = cells.cells[static_cast<std::size_t>(i)];
        return {c.begin(), c.end()};
    }
};

TEST_F(Roots, EnumerationMatchesDirectCount) {
    std::set<Line> expected;
    for (int i = 1; i <= 8; i++) {
        for (int j = i + 1; j <= 8; j++) {
            expected.insert(Line::e(i, 1, j));
            expected.insert(Line::e(i, -1, j));
        }
    }
    for (unsigned mask = 0; mask < 256; mask++) {
        if (__builtin_popcount(mask) % 2) continue;
        Line::Coords c{};
        for (int k = 0; k < 8; k++) c[static_cast<std::size_t>(k)] = mask >> k & 1 ? -1 : 1;
        expected.insert(Line(c));
    }
    ASSERT_EQ(lines.size(), 120u);
    EXPECT_EQ(std::set<Line>(lines.begin(), lines.end()), expected);
    for (const auto &x : lines) EXPECT_TRUE(x.is_root());
    EXPECT_EQ(lines[56].label(), "x{}");
    EXPECT_EQ(lines[0].label(), "e1+e2");
}

TEST_F(Roots, LabelsAndIndexLookup) {
    EXPECT_EQ(Line::e(3, -1, 7).label(), "e3-e7");
    EXPECT_EQ(Line::x({2, 4, 5, 8}).label(), "x{2,4,5,8}");
    EXPECT_EQ(Line::x({1, 2}), Line::x({3, 4, 5, 6, 7, 8}));
    EXPECT_THROW(line_index(lines, Line(Line::Coords{1, 0, 0, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_F(Roots, OrthogonalityGraphIsStronglyRegular) {
    EXPECT_EQ(srg_parameters(e8), (SrgParameters{120, 63, 30, 36}));
    for (int a = 0; a < 120; a += 7) {
        for (int b = 0; b < 120; b++) {
            if (a == b) continue;
            EXPECT_EQ(e8.adjacent(a, b), inner(lines[static_cast<std::size_t>(a)], lines[static_cast<std::size_t>(b)]) == 0);
        }
    }
}

TEST_F(Roots, FifteenOrbitsOfEightOrthogonalLines) {
    ASSERT_EQ(cells.cell_count(), 15);
    for (const auto &c : cells.cells) {
        EXPECT_EQ(c.size(), 8u);
        for (int a : c) {
            for (int b : c) {
                if (a == b) continue;
                EXPECT_EQ(inner(lines[static_cast<std::size_t>(a)], lines[static_cast<std::size_t>(b)]), 0);
            }
        }
    }
}

TEST_F(Roots, OrbitsMatchReferenceRows) {
    EXPECT_EQ(cell(0), indices({Line::e(1, 1, 2), Line::e(1, -1, 2), Line::e(3, 1, 4), Line::e(3, -1, 4),
                                Line::e(5, 1, 6), Line::e(5, -1, 6), Line::e(7, 1, 8), Line::e(7, -1, 8)}));
    EXPECT_EQ(cell(7), indices({Line::x({1, 2}), Line::x({3, 4}), Line::x({5, 6}), Line::x({7, 8}), Line::x({1, 4, 6, 8}),
                                Line::x({2, 3, 6, 8}), Line::x({2, 4, 5, 8}), Line::x({2, 4, 6, 7})}));
    EXPECT_EQ(cell(14), indices({Line::x({}), Line::x({5, 6, 7, 8}), Line::x({3, 4, 7, 8}), Line::x({2, 4, 6, 8}),
                                 Line::x({3, 4, 5, 6}), Line::x({2, 4, 5, 7}), Line::x({2, 3, 6, 7}), Line::x({2, 3, 5, 8})}));
    auto table = reference_orbit_table();
    for (int i = 0; i < 15; i++) {
        std::set<int> listed;
        for (const auto &x : table[static_cast<std::size_t>(i)]) listed.insert(line_index(lines, x));
        EXPECT_EQ(listed, cell(i)) << "V" << i + 1;
    }
}

TEST_F(Roots, StabilizersMatchReferenceGenerators) {
    auto gens = reference_stabilizer_generators();
    EXPECT_EQ(gens[0][0].str(), "IIX");
    EXPECT_EQ(gens[14][2].str(), "IIX");
    for (int i = 0; i < 15; i++) {
        for (int v : cells.cells[static_cast<std::size_t>(i)]) {
            auto stab = stabilizer(lines[static_cast<std::size_t>(v)]);
            ASSERT_EQ(stab.size(), 8u);
            for (const auto &g : gens[static_cast<std::size_t>(i)]) {
                EXPECT_NE(std::find(stab.begin(), stab.end(), g), stab.end()) << "V" << i + 1 << " " << g.str();
            }
        }
    }
}

TEST_F(Roots, GroupActsByAutomorphisms) {
    for (const auto &g : enumerate_L()) {
        auto perm = line_permutation(lines, g);
        EXPECT_TRUE(is_automorphism(e8, perm)) << g.str();
        for (int v = 0; v < 120; v++) EXPECT_EQ(cells.cell_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])], cells.cell_of[static_cast<std::size_t>(v)]);
    }
}

TEST_F(Roots, StandardChoiceIsValid) {
    WChoice w = WChoice::standard();
    ASSERT_EQ(w.reps.size(), 15u);
    EXPECT_EQ(w.reps[0], Line::e(1, -1, 2));
    EXPECT_EQ(w.reps[14], Line::x({}));
    EXPECT_NO_THROW(validate_wchoice(lines, cells, w));
    WChoice bad = w;
    bad.reps[3] = bad.reps[4];
    EXPECT_THROW(validate_wchoice(lines, cells, bad), std::invalid_argument);
}

TEST_F(Roots, FlippedGraphDiffersExactlyOnFlippedCellPairs) {
    WChoice w = WChoice::standard();
    Graph gw = build_Gw(lines, cells, w);
    auto flipped = flipped_cell_pairs(w);
    EXPECT_EQ(flipped.size(), 14u);
    std::set<std::pair<int, int>> flip(flipped.begin(), flipped.end());
    for (int a = 0; a < 120; a++) {
        for (int b = a + 1; b < 120; b++) {
            int i = cells.cell_of[static_cast<std::size_t>(a)], j = cells.cell_of[static_cast<std::size_t>(b)];
            bool swapped = flip.count({std::min(i, j), std::max(i, j)}) > 0;
            ASSERT_EQ(gw.adjacent(a, b) != e8.adjacent(a, b), swapped) << a << " " << b;
        }
    }
    EXPECT_EQ(srg_parameters(gw), (SrgParameters{120, 63, 30, 36}));
}

TEST_F(Roots, RepresentativesAreIndependentInFlippedGraph) {
    WChoice w = WChoice::standard();
    Graph gw = build_Gw(lines, cells, w);
    std::vector<int> reps;
    for (const auto &x : w.reps) reps.push_back(line_index(lines, x));
    for (int a : reps) {
        for (int b : reps) EXPECT_FALSE(gw.adjacent(a, b));
    }
}

TEST_F(Roots, OtherChoicesGiveIsomorphicGraphs) {
    WChoice w = WChoice::standard(), other;
    for (const auto &c : cells.cells) other.reps.push_back(lines[static_cast<std::size_t>(c[3])]);
    auto perm = gw_choice_isomorphism(lines, cells, w, other);
    EXPECT_TRUE(is_isomorphism(build_Gw(lines, cells, w), build_Gw(lines, cells, other), perm));
}

}  // namespace
}  // namespace qiso
