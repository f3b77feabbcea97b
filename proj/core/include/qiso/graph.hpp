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

#ifndef QISO_GRAPH_HPP
#define QISO_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qiso/matrix.hpp"

namespace qiso {

/// Finite simple graph with bit-row adjacency. Symmetric with zero diagonal; immutable once built.
class Graph {
   public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops or out-of-range endpoints. Duplicate edges are merged.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    /// Throws std::invalid_argument on a nonzero diagonal, asymmetry or entries other than 0/1.
    static Graph from_adjacency_matrix(const std::vector<std::vector<int>> &a);
    /// adjacent(u, v) is queried once per unordered pair u < v.
    static Graph from_predicate(int n, const std::function<bool(int, int)> &adjacent);

    int n() const { return n_; }
    std::size_t words() const { return words_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    /// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
    Graph induced(std::span<const int> vertices) const;
    Graph with_edge_flipped(int u, int v) const;
    /// Graph H with H.adjacent(perm[u], perm[v]) == adjacent(u, v).
    Graph relabeled(std::span<const int> perm) const;
    /// Integer adjacency matrix lifted to rationals.
    RationalMatrix adjacency_matrix() const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    void set(int u, int v, bool value);
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct SrgParameters {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
    friend bool operator==(const SrgParameters &, const SrgParameters &) = default;
};

/// (n, k, lambda, mu) when g is strongly regular, otherwise empty. When g has no edges
/// (or no non-edges) the undefined parameter is reported as 0.
std::optional<SrgParameters> srg_parameters(const Graph &g);
/// Parameters of the complement of an SRG(n, k, lambda, mu).
SrgParameters complement_parameters(const SrgParameters &p);

/// Breadth-first distance, empty when v is unreachable. Throws std::out_of_range on bad indices.
std::optional<int> distance(const Graph &g, int u, int v);

/// Throws std::invalid_argument when perm is not a bijection on the vertices.
bool is_automorphism(const Graph &g, std::span<const int> perm);
/// True iff perm maps edges of g onto edges of h and non-edges onto non-edges.
bool is_isomorphism(const Graph &g, const Graph &h, std::span<const int> perm);

/// Number of common neighbours of u and v.
int common_neighbors(const Graph &g, int u, int v);

}  // namespace qiso

#endif
