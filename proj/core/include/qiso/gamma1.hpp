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


#ifndef QISO_GAMMA1_HPP
#define QISO_GAMMA1_HPP

#include <span>
#include <string>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/line.hpp"
#include "qiso/pauli.hpp"
#include "qiso/roots.hpp"

namespace qiso {

/// A coset N C(i) of a cell stabilizer, stored as a sorted set of eight signless words.
struct CliqueLabel {
    std::vector<GroupElementL> words;

    /// Space-separated words, e.g. "III IIX IZI IZX ZII ZIX ZZI ZZX".
    std::string str() const;
    friend bool operator==(const CliqueLabel &, const CliqueLabel &) = default;
};

/// C(i) = {M : sigma_M stabilizes V_i}, for the cells of `partition`.
std::vector<CliqueLabel> base_cliques(std::span<const Line> lines, const OrbitPartition &partition);

struct Gamma1 {
    Graph graph;
    /// Vertex 8 i + c is the c-th coset of C(i+1), cosets ordered by their least word.
    std::vector<CliqueLabel> labels;
};

/// Vertices are the 120 cosets; two are adjacent iff they share exactly two words.
/// Throws VerificationError on duplicate cosets, a count other than 120, or an intersection size
/// other than 0 or 2.
Gamma1 build_gamma1(std::span<const Line> lines, const OrbitPartition &partition);

/// Index of `label` among the Gamma1 labels; throws std::invalid_argument when absent.
int clique_label_index(const Gamma1 &gamma1, const CliqueLabel &label);

/// The map v_x in V_i -> M C(i), M the least transporter from w_i to x. Verified to be an
/// isomorphism from the complement of `gw` to Gamma1; throws VerificationError otherwise.
std::vector<int> gamma1_isomorphism_witness(std::span<const Line> lines, const OrbitPartition &partition,
                                            const WChoice &w, const Graph &gw, const Gamma1 &gamma1);

/// Parity of the number of Y letters: the quadratic form z1 z2 + z3 z4 + z5 z6 on the six bits.
int quadratic_form(const GroupElementL &g);
/// The associated bilinear form; 1 exactly when the two words anticommute.
int bilinear_form(const GroupElementL &a, const GroupElementL &b);
/// Distinct words adjacent in VO6+(2): their product has an even number of Y letters.
bool vo6_adjacent(const GroupElementL &a, const GroupElementL &b);
/// The transvection x -> x + B(x, v) v.
GroupElementL transvection(const GroupElementL &v, const GroupElementL &x);

}  // namespace qiso

#endif
