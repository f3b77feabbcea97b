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


#include "qiso/patterns.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qiso/graph_io.hpp"

namespace qiso {

namespace {

void check_small(const Graph &g, const char *what) {
    if (g.n() > kMaxSmallGraphVertices) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds the cap of " +
                                    std::to_string(kMaxSmallGraphVertices));
    }
}

/// Adjacency bits of g relabelled by `order` (order[i] = old vertex at new position i), in
/// graph6 order: column by column over the upper triangle, most significant first.
std::uint64_t code(const Graph &g, const std::vector<int> &order) {
    std::uint64_t bits = 0;
    const int n = g.n();
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            bits = bits << 1 | static_cast<std::uint64_t>(g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
        }
    }
    return bits;
}

bool connected_subset(const Graph &g, unsigned mask) {
    if (!mask) return false;
    unsigned seen = mask & (~mask + 1);
    unsigned frontier = seen;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        for (int u = 0; u < g.n(); u++) {
            unsigned bit = 1u << u;
            if ((mask & bit) && !(seen & bit) && g.adjacent(v, u)) {
                seen |= bit;
                frontier |= bit;
            }
        }
    }
    return seen == mask;
}

bool sets_touch(const Graph &g, unsigned a, unsigned b) {
    for (int u = 0; u < g.n(); u++) {
        if (!(a >> u & 1)) continue;
        for (int v = 0; v < g.n(); v++) {
            if ((b >> v & 1) && g.adjacent(u, v)) return true;
        }
    }
    return false;
}

/// Searches for k disjoint connected branch sets satisfying `accept` on their touch relation.
/// Branch sets are labelled in order of their least vertex, so each partition is visited once.
bool find_minor(const Graph &g, int k, const std::function<bool(const std::vector<unsigned> &)> &accept) {
    const int n = g.n();
    std::vector<unsigned> sets(static_cast<std::size_t>(k), 0);
    std::function<bool(int, int)> assign = [&](int v, int used) -> bool {
        if (used + (n - v) < k) return false;
        if (v == n) {
            if (used < k) return false;
            for (unsigned s : sets) {
                if (!connected_subset(g, s)) return false;
            }
            return accept(sets);
        }
        if (assign(v + 1, used)) return true;  // v deleted
        for (int label = 0; label < std::min(used + 1, k); label++) {
            sets[static_cast<std::size_t>(label)] |= 1u << v;
            bool found = assign(v + 1, std::max(used, label + 1));
            sets[static_cast<std::size_t>(label)] &= ~(1u << v);
            if (found) return true;
        }
        return false;
    };
    return assign(0, 0);
}

}  // namespace

Graph canonical_form(const Graph &g) {
    check_small(g, "canonical_form");
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Permute freely only within runs of equal degree.
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[static_cast<std::size_t>(j)]) == g.degree(order[static_cast<std::size_t>(i)])) j++;
        std::sort(order.begin() + i, order.begin() + j);
        runs.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_order = order;
    std::function<void(std::size_t)> walk = [&](std::size_t r) {
        if (r == runs.size()) {
            std::uint64_t c = code(g, order);
            if (c < best) {
                best = c;
                best_order = order;
            }
            return;
        }
        auto [i, j] = runs[r];
        do {
            walk(r + 1);
        } while (std::next_permutation(order.begin() + i, order.begin() + j));
    };
    walk(0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i++) perm[static_cast<std::size_t>(best_order[static_cast<std::size_t>(i)])] = i;
    return g.relabeled(perm);
}

std::string canonical_id(const Graph &g) { return graph6_encode(canonical_form(g)); }

bool is_connected(const Graph &g) {
    if (g.n() == 0) return true;
    for (int v = 1; v < g.n(); v++) {
        if (!distance(g, 0, v)) return false;
    }
    return true;
}

bool is_planar_small(const Graph &g) {
    check_small(g, "is_planar_small");
    const int n = g.n();
    if (n <= 4) return true;
    if (static_cast<int>(g.edge_count()) > 3 * n - 6) return false;
    auto k5 = [&](const std::vector<unsigned> &s) {
        for (std::size_t a = 0; a < s.size(); a++) {
            for (std::size_t b = a + 1; b < s.size(); b++) {
                if (!sets_touch(g, s[a], s[b])) return false;
            }
        }
        return true;
    };
    if (find_minor(g, 5, k5)) return false;
    auto k33 = [&](const std::vector<unsigned> &s) {
        // Try every split of the six branch sets into two sides of three containing set 0.
        for (unsigned side = 0; side < 64; side++) {
            if (std::popcount(side) != 3 || !(side & 1)) continue;
            bool ok = true;
            for (int a = 0; a < 6 && ok; a++) {
                for (int b = 0; b < 6 && ok; b++) {
                    if ((side >> a & 1) && !(side >> b & 1)) ok = sets_touch(g, s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
                }
            }
            if (ok) return true;
        }
        return false;
    };
    return !find_minor(g, 6, k33);
}

std::vector<PatternGraph> enumerate_connected_graphs(int n_max) {
    if (n_max < 1 || n_max > kMaxPatternVertices) {
        throw std::invalid_argument("enumerate_connected_graphs: n_max must be in 1.." +
                                    std::to_string(kMaxPatternVertices) + ", got " + std::to_string(n_max));
    }
    std::vector<Graph> layer{Graph(1)};
    std::vector<PatternGraph> out;
    for (int n = 1; n <= n_max; n++) {
        if (n > 1) {
            // Every connected graph arises by attaching a new vertex to a connected graph on n-1
            // vertices (delete a non-cut vertex).
            std::set<std::string> seen;
            std::vector<Graph> next;
            for (const auto &base : layer) {
                for (unsigned mask = 1; mask < (1u << (n - 1)); mask++) {
                    std::vector<std::pair<int, int>> edges = base.edges();
                    for (int v = 0; v < n - 1; v++) {
                        if (mask >> v & 1) edges.emplace_back(v, n - 1);
                    }
                    Graph c = canonical_form(Graph::from_edges(n, edges));
                    if (seen.insert(graph6_encode(c)).second) next.push_back(std::move(c));
                }
            }
            layer = std::move(next);
        }
        std::vector<PatternGraph> level;
        for (const auto &g : layer) level.push_back({g, graph6_encode(g), true, is_planar_small(g)});
        std::sort(level.begin(), level.end(), [](const PatternGraph &a, const PatternGraph &b) {
            if (a.graph.edge_count() != b.graph.edge_count()) return a.graph.edge_count() < b.graph.edge_count();
            return a.id < b.id;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace qiso
