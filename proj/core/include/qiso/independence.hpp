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

#ifndef QISO_INDEPENDENCE_HPP
#define QISO_INDEPENDENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/rational.hpp"

namespace qiso {

enum class AlphaMode {
    exact,          ///< branch and bound to optimality (or until the node budget runs out)
    lower_witness,  ///< seeded greedy restarts; the value is a lower bound with a witness
    upper_only,     ///< greedy clique-cover bound; no witness
};

/// Bounds lower <= value <= upper. `witness` has size `lower` except in upper_only mode.
struct IndependenceResult {
    int lower = 0;
    int upper = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;

    bool exact() const { return lower == upper; }
};

struct CliqueResult {
    int lower = 0;
    int upper = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    bool exact() const { return lower == upper; }
};

/// Maximum clique by bit-parallel branch and bound with greedy colouring bounds.
/// Vertices are ordered by degree, descending. node_budget == 0 means unlimited.
/// Deterministic: the same input always yields the same witness.
CliqueResult max_clique(const Graph &g, std::uint64_t node_budget = 0);

/// Independence number via max_clique on the complement (exact mode) or heuristics.
IndependenceResult independence_number(const Graph &g, AlphaMode mode, std::uint64_t node_budget = 0,
                                       std::uint64_t seed = 1);

bool is_independent_set(const Graph &g, std::span<const int> vertices);
bool is_clique(const Graph &g, std::span<const int> vertices);

/// Number of k-element cliques of g.
BigInt count_cliques(const Graph &g, int k);

}  // namespace qiso

#endif
