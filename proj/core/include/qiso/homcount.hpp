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


#ifndef QISO_HOMCOUNT_HPP
#define QISO_HOMCOUNT_HPP

#include <string>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/patterns.hpp"
#include "qiso/rational.hpp"

namespace qiso {

/// Number of adjacency-preserving maps V(h) -> V(g), by variable elimination along a min-fill
/// order. Intermediate tables span at most three pattern vertices; wider patterns are handled by
/// summing over the image of a conditioning vertex.
BigInt hom_count(const Graph &h, const Graph &g);

/// The same count by backtracking over all assignments; for cross-checks on small patterns.
BigInt hom_count_brute(const Graph &h, const Graph &g);

/// trace(A^k): closed walks of length k, equal to hom(C_k, g) for k >= 3.
BigInt closed_walks(const Graph &g, int k);
/// Sum of the entries of A^length: walks with `length` edges, equal to hom(P_{length+1}, g).
BigInt walks(const Graph &g, int length);

/// hom(K_k, g) = k! times the number of k-cliques.
BigInt hom_complete(int k, const Graph &g);

Graph cycle_graph(int k);
Graph path_graph(int vertices);
Graph complete_graph(int k);

struct HomRow {
    std::string id;
    int vertices = 0;
    bool planar = false;
    BigInt left;
    BigInt right;

    bool equal() const { return left == right; }
};

struct HomProfileReport {
    std::vector<HomRow> rows;
    std::size_t differences = 0;
    std::size_t planar_differences = 0;
};

/// Counts from every connected pattern with at most n_max vertices (planar ones only when
/// planar_only is set) into both graphs.
HomProfileReport hom_profile_compare(const Graph &g1, const Graph &g2, int n_max, bool planar_only);

/// One "graph6 count_g1 count_g2 equal?" line per pattern.
std::string format_hom_profile(const HomProfileReport &report);

}  // namespace qiso

#endif
