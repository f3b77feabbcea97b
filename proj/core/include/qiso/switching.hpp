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


#ifndef QISO_SWITCHING_HPP
#define QISO_SWITCHING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/magic.hpp"
#include "qiso/matrix.hpp"
#include "qiso/report.hpp"
#include "qiso/roots.hpp"

namespace qiso {

/// Cells C_1..C_k and the switching set D of a Godsil-McKay partition.
struct GmPartition {
    std::vector<std::vector<int>> cells;
    std::vector<int> d;
};

struct GmValidation {
    /// Any two vertices of C_i have equally many neighbours in C_j.
    CheckReport equitable{"cells are equitable"};
    /// Every vertex of D has 0, half or all of C_i as neighbours.
    CheckReport d_condition{"D vertices see none, half or all of each cell"};
    /// Number of (v, C_i) pairs with v in D joined to exactly half of C_i.
    std::size_t half_joins = 0;
    /// Number of (v, C_i) half-joined pairs where the half is exactly 4.
    std::size_t half_joins_of_four = 0;

    bool passed() const { return equitable.passed() && d_condition.passed(); }
};

/// Throws std::invalid_argument unless the cells and D partition the vertex set.
GmValidation validate_gm_partition(const Graph &g, const GmPartition &p);

/// Complements the adjacency between v and C_i for every half-joined pair (v in D).
/// Throws std::invalid_argument when the partition does not validate.
Graph gm_switch(const Graph &g, const GmPartition &p);

/// (2/m) J_m - I_m on each cell of size m, identity on D, in native vertex order.
RationalMatrix build_Q(const GmPartition &p, int n);

/// Q A_g Q equals the adjacency matrix of gm_switch(g, p).
bool verify_QAQ(const Graph &g, const GmPartition &p);

/// u (Q tensor I) = (Q tensor I) u. Throws std::invalid_argument when a cell of p (or D) is not
/// a union of cells of u.
bool verify_uQ_commute(const MagicUnitary &u, const GmPartition &p);

/// Equal characteristic polynomials. Throws DimensionError on different vertex counts.
bool cospectral(const Graph &g, const Graph &h);

/// C_i = V_i for i = 1..14 and D = V_15.
GmPartition v15_partition(const OrbitPartition &orbits);

/// The partition with the listed cells (1-based orbit cell labels, one group per entry) and D the
/// union of the cells in `d_cells`.
GmPartition partition_from_orbit_groups(const OrbitPartition &orbits, const std::vector<std::vector<int>> &groups,
                                        const std::vector<int> &d_cells);

/// Text form: one "C v1 v2 ..." line per cell and one "D v1 v2 ..." line; '#' starts a comment.
/// Throws FormatError carrying the 1-based line number.
GmPartition parse_gm_partition(std::string_view text);
std::string format_gm_partition(const GmPartition &p);

}  // namespace qiso

#endif
