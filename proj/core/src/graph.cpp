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

#include "qiso/graph.hpp"

#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace qiso {

Graph::Graph(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
}

void Graph::set(int u, int v, bool value) {
    auto bit = [&](int a, int b) -> std::uint64_t & {
        return rows_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64];
    };
    std::uint64_t mu = std::uint64_t{1} << (v % 64), mv = std::uint64_t{1} << (u % 64);
    if (value) {
        bit(u, v) |= mu;
        bit(v, u) |= mv;
    } else {
        bit(u, v) &= ~mu;
        bit(v, u) &= ~mv;
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.set(u, v, true);
    }
    return g;
}

Graph Graph::from_adjacency_matrix(const std::vector<std::vector<int>> &a) {
    const int n = static_cast<int>(a.size());
    Graph g(n);
    for (int i = 0; i < n; i++) {
        if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("adjacency matrix is not square");
        }
    }
    for (int i = 0; i < n; i++) {
        auto ui = static_cast<std::size_t>(i);
        if (a[ui][ui] != 0) throw std::invalid_argument("nonzero diagonal entry at " + std::to_string(i));
        for (int j = i + 1; j < n; j++) {
            auto uj = static_cast<std::size_t>(j);
            if (a[ui][uj] != a[uj][ui]) {
                throw std::invalid_argument("asymmetric entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (a[ui][uj] != 0 && a[ui][uj] != 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
            if (a[ui][uj]) g.set(i, j, true);
        }
    }
    return g;
}

Graph Graph::from_predicate(int n, const std::function<bool(int, int)> &adjacent) {
    Graph g(n);
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            if (adjacent(u, v)) g.set(u, v, true);
        }
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t w = 0; w < words_; w++) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complement() const {
    return from_predicate(n_, [this](int u, int v) { return !adjacent(u, v); });
}

Graph Graph::induced(std::span<const int> vertices) const {
    for (int v : vertices) check_vertex(v);
    const int k = static_cast<int>(vertices.size());
    Graph g(k);
    for (int a = 0; a < k; a++) {
        for (int b = a + 1; b < k; b++) {
            auto va = vertices[static_cast<std::size_t>(a)], vb = vertices[static_cast<std::size_t>(b)];
            if (va == vb) throw std::invalid_argument("induced: repeated vertex " + std::to_string(va));
            if (adjacent(va, vb)) g.set(a, b, true);
        }
    }
    return g;
}

Graph Graph::with_edge_flipped(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge_flipped: loop");
    Graph g = *this;
    g.set(u, v, !adjacent(u, v));
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<char> hit(static_cast<std::size_t>(n_), 0);
    for (int p : perm) {
        check_vertex(p);
        if (hit[static_cast<std::size_t>(p)]++) throw std::invalid_argument("relabeled: not a bijection");
    }
    Graph g(n_);
    for (auto [u, v] : edges()) g.set(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], true);
    return g;
}

RationalMatrix Graph::adjacency_matrix() const {
    std::vector<Rational> entries(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; u++) {
        for (int v : neighbors(u)) entries[static_cast<std::size_t>(u * n_ + v)] = 1;
    }
    return {static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), std::move(entries)};
}

int common_neighbors(const Graph &g, int u, int v) {
    auto a = g.row(u), b = g.row(v);
    int c = 0;
    for (std::size_t w = 0; w < g.words(); w++) c += std::popcount(a[w] & b[w]);
    return c;
}

std::optional<SrgParameters> srg_parameters(const Graph &g) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    SrgParameters p{n, g.degree(0), -1, -1};
    for (int v = 1; v < n; v++) {
        if (g.degree(v) != p.k) return std::nullopt;
    }
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            int c = common_neighbors(g, u, v);
            int &slot = g.adjacent(u, v) ? p.lambda : p.mu;
            if (slot < 0) {
                slot = c;
            } else if (slot != c) {
                return std::nullopt;
            }
        }
    }
    if (p.lambda < 0) p.lambda = 0;
    if (p.mu < 0) p.mu = 0;
    return p;
}

SrgParameters complement_parameters(const SrgParameters &p) {
    return {p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
}

std::optional<int> distance(const Graph &g, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) {
        throw std::out_of_range("distance: vertex index outside 0.." + std::to_string(g.n() - 1));
    }
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return dist[static_cast<std::size_t>(y)];
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

namespace {

void require_bijection(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]++) {
            throw std::invalid_argument("map is not a bijection on the vertex set");
        }
    }
}

}  // namespace

bool is_automorphism(const Graph &g, std::span<const int> perm) { return is_isomorphism(g, g, perm); }

bool is_isomorphism(const Graph &g, const Graph &h, std::span<const int> perm) {
    if (g.n() != h.n()) return false;
    require_bijection(perm, g.n());
    for (int u = 0; u < g.n(); u++) {
        for (int v = u + 1; v < g.n(); v++) {
            if (g.adjacent(u, v) != h.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qiso
