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


#ifndef QISO_MAGIC_HPP
#define QISO_MAGIC_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/line.hpp"
#include "qiso/matrix.hpp"
#include "qiso/pauli.hpp"
#include "qiso/report.hpp"
#include "qiso/roots.hpp"

namespace qiso {

/// A block-diagonal magic unitary: u_{st} is nonzero only when s and t share a cell, and then
/// equals blocks[i][a * m + b] with i the cell, a and b the positions of s and t inside it.
struct MagicUnitary {
    OrbitPartition partition;
    /// Representatives used to build the entries, when the unitary came from build_magic_unitary.
    std::optional<WChoice> w;
    std::size_t dim = 0;
    std::vector<std::vector<RationalMatrix>> blocks;
    /// Same indexing as blocks; empty for unitaries not built from transporters.
    std::vector<std::vector<GroupElementL>> transporters;

    int cell_size(int i) const { return static_cast<int>(partition.cells[static_cast<std::size_t>(i)].size()); }
    const RationalMatrix &entry(int i, int a, int b) const {
        return blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * cell_size(i) + b)];
    }
    RationalMatrix &entry(int i, int a, int b) {
        return blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * cell_size(i) + b)];
    }
    /// Position of vertex v inside its cell.
    int position(int v) const;

    /// u_{st} = delta_{st} * I_dim, blocked by `partition`.
    static MagicUnitary identity(const OrbitPartition &partition, std::size_t dim);
};

/// u^{(i)}_{yz} = P_{M w_i} with M the least transporter from y to z. Checks the magic unitary
/// axioms before returning; throws VerificationError naming the first failing block entry.
MagicUnitary build_magic_unitary(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w);

struct MagicAxiomsReport {
    CheckReport projections{"entries are projections"};
    CheckReport row_sums{"block rows sum to identity"};
    CheckReport column_sums{"block columns sum to identity"};

    bool passed() const { return projections.passed() && row_sums.passed() && column_sums.passed(); }
};

MagicAxiomsReport verify_magic_axioms(const MagicUnitary &u);

/// Compares (A_{g1} u)_{st} with (u A_{g2})_{st} for every vertex pair. Throws DimensionError
/// when the graphs do not match the unitary's vertex count.
CheckReport intertwiner_report(const MagicUnitary &u, const Graph &g1, const Graph &g2);
bool verify_intertwiner(const MagicUnitary &u, const Graph &g1, const Graph &g2);

struct ProductRelationsReport {
    /// u_{ks} u_{lt} = 0 exactly when g1(k,l) and g2(s,t) disagree, over all cross-cell quadruples.
    CheckReport zero_pattern{"cross-cell products vanish exactly on adjacency mismatches"};
    /// Every product entry has denominator dividing 64.
    CheckReport denominators{"product denominators divide 64"};
    /// For fixed k, s, l exactly four t give a zero product.
    CheckReport four_zero{"each entry annihilates four entries of every other block"};
    /// Zero products sit at d(k,l) = d(s,t) on flipped cell pairs and at d(k,l) != d(s,t) elsewhere,
    /// both distances taken in g1. Only run when u carries its representatives.
    CheckReport distance_dichotomy{"zero products follow the distance dichotomy"};
    double seconds = 0;

    bool passed() const {
        return zero_pattern.passed() && denominators.passed() && four_zero.passed() && distance_dichotomy.passed();
    }
};

ProductRelationsReport verify_product_relations(const MagicUnitary &u, const Graph &g1, const Graph &g2);

/// The restriction of (g1, g2, u) to the union of the cells in `cells` (1-based cell labels).
struct SubPair {
    std::vector<int> vertices;
    Graph g1;
    Graph g2;
    MagicUnitary u;
};

/// Throws std::invalid_argument when fewer than 9 cells are requested or a label is out of range.
SubPair induced_subpair(const Graph &g1, const Graph &g2, const MagicUnitary &u, std::span<const int> cells);

/// The signs (s1, s2, s3) with P_x = (1/8)(1 + s1 N1)(1 + s2 N2)(1 + s3 N3), if any.
std::optional<std::array<int, 3>> projection_sign_pattern(const Line &x, const std::array<GroupElementL, 3> &gens);

/// P_x as an exact rational matrix.
RationalMatrix line_projection(const Line &x);

}  // namespace qiso

#endif
