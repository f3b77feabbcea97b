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

#ifndef QISO_ROOTS_HPP
#define QISO_ROOTS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/line.hpp"
#include "qiso/pauli.hpp"

namespace qiso {

/// The 120 canonical E8 root lines: 56 of the form e_i +- e_j (pairs in lexicographic order,
/// + before -) followed by 64 all-(+-1) lines ordered by the number of -1 entries, then
/// lexicographically by their positions. Vertex ids everywhere are indices into this list.
std::vector<Line> build_root_lines();

/// Index of `x` in `lines`; throws std::invalid_argument if absent.
int line_index(std::span<const Line> lines, const Line &x);

/// Lines adjacent iff orthogonal.
Graph build_orthogonality_graph(std::span<const Line> lines);

/// The 15 orbits of L, in the fixed order V1..V15 used throughout.
struct OrbitPartition {
    std::vector<std::vector<int>> cells;  ///< sorted vertex ids of V1..V15
    std::vector<int> cell_of;             ///< vertex id -> 0-based cell index

    int cell_count() const { return static_cast<int>(cells.size()); }
    int vertex_count() const { return static_cast<int>(cell_of.size()); }
};

/// Distinguished member of each cell: e1+e2 .. e1+e8 for V1..V7, x{1,j} for V8..V14, x{} for V15.
std::vector<Line> distinguished_cell_members();

/// Orbits of the L action, cells matched to V1..V15 by distinguished member.
/// Throws VerificationError unless the action has exactly 15 orbits of size 8.
OrbitPartition compute_orbits(std::span<const Line> lines);

/// Builds a partition from explicit cells; validates that the cells partition 0..n-1.
OrbitPartition partition_from_cells(std::vector<std::vector<int>> cells, int n);

/// {g in L : g x = +-x}, in lexicographic order.
std::vector<GroupElementL> stabilizer(const Line &x);

/// The reference orbit listing, one row per cell (not necessarily canonical representatives).
std::vector<std::vector<Line>> reference_orbit_table();
/// The reference stabilizer generators, three per cell.
std::vector<std::array<GroupElementL, 3>> reference_stabilizer_generators();

/// One chosen line per cell.
struct WChoice {
    std::vector<Line> reps;

    /// e1-e_j for V1..V7, x{1,j} for V8..V14 and x{} for V15.
    static WChoice standard();
};

/// Throws std::invalid_argument if a representative is missing or lies outside its cell.
void validate_wchoice(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w);

/// Unordered cell pairs (i < j) whose representatives are orthogonal; these are the flipped pairs.
std::vector<std::pair<int, int>> flipped_cell_pairs(const WChoice &w);

/// Copies G_E8 adjacency inside cells and between cells with non-orthogonal representatives,
/// and complements it between cells with orthogonal representatives.
Graph build_Gw(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w);

/// The map v_x in V_i -> v_{N_i x}, N_i the transporter from w1.reps[i] to w2.reps[i].
/// Verified to be an isomorphism G^{w1} -> G^{w2}; throws VerificationError otherwise.
std::vector<int> gw_choice_isomorphism(std::span<const Line> lines, const OrbitPartition &partition,
                                       const WChoice &w1, const WChoice &w2);

/// Vertex permutation induced by g on the lines.
std::vector<int> line_permutation(std::span<const Line> lines, const GroupElementL &g);

}  // namespace qiso

#endif
