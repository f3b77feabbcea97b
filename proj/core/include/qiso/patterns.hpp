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


#ifndef QISO_PATTERNS_HPP
#define QISO_PATTERNS_HPP

#include <string>
#include <vector>

#include "qiso/graph.hpp"

namespace qiso {

/// Largest pattern accepted by enumerate_connected_graphs.
inline constexpr int kMaxPatternVertices = 7;
/// Largest graph accepted by is_planar_small and canonical_form.
inline constexpr int kMaxSmallGraphVertices = 8;

struct PatternGraph {
    Graph graph;   ///< in canonical form
    std::string id;  ///< graph6 of the canonical form
    bool connected = false;
    bool planar = false;
};

/// The relabelling minimising the graph6 adjacency bits among orderings by non-increasing degree.
/// Equal for isomorphic graphs. Throws std::invalid_argument above kMaxSmallGraphVertices.
Graph canonical_form(const Graph &g);
std::string canonical_id(const Graph &g);

bool is_connected(const Graph &g);

/// Planarity via the edge bound and an exhaustive search for K5 or K3,3 minors.
/// Throws std::invalid_argument above kMaxSmallGraphVertices.
bool is_planar_small(const Graph &g);

/// All connected graphs on 1..n_max vertices up to isomorphism, ordered by vertex count, edge
/// count, then id. Throws std::invalid_argument unless 1 <= n_max <= kMaxPatternVertices.
std::vector<PatternGraph> enumerate_connected_graphs(int n_max);

}  // namespace qiso

#endif
