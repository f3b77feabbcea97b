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


#ifndef QISO_ISOMORPHISM_HPP
#define QISO_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qiso/graph.hpp"

namespace qiso {

/// Two graphs differ in the named isomorphism invariant.
struct NonIsoCertificate {
    std::string kind;
    std::string value_left;
    std::string value_right;
};

enum class IsoOutcome { isomorphic, non_isomorphic, inconclusive };

std::string outcome_name(IsoOutcome outcome);

struct IsoOptions {
    /// Search-tree nodes for individualization-refinement; 0 means unlimited.
    std::uint64_t search_budget = 200000;
    /// Branch-and-bound nodes per independence-number computation; 0 means unlimited.
    std::uint64_t alpha_budget = 5000000;
};

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::inconclusive;
    /// Set when isomorphic: h.adjacent(map[u], map[v]) == g.adjacent(u, v).
    std::vector<int> map;
    std::optional<NonIsoCertificate> certificate;
    std::uint64_t search_nodes = 0;
};

/// Invariant names in the order they are tried.
const std::vector<std::string> &invariant_kinds();

/// The value of a named invariant, or nullopt when it is not affordable within `options`.
/// Throws std::invalid_argument for an unknown kind.
std::optional<std::string> invariant_value(const Graph &g, const std::string &kind, const IsoOptions &options = {});

/// Invariant separation first, then a budgeted individualization-refinement search.
/// Never reports a wrong answer: an isomorphism is verified edge by edge, a certificate names a
/// differing invariant, and an exhausted budget yields `inconclusive`.
IsoResult are_isomorphic(const Graph &g, const Graph &h, const IsoOptions &options = {});

/// Recomputes the certificate's invariant on both graphs and confirms the recorded values.
bool recheck_certificate(const Graph &g, const Graph &h, const NonIsoCertificate &certificate,
                         const IsoOptions &options = {});

/// Stable colour-refinement colouring. Colours are hashes of the refinement history, so they are
/// comparable across graphs.
std::vector<std::uint64_t> refine_colors(const Graph &g, std::vector<std::uint64_t> colors);

}  // namespace qiso

#endif
