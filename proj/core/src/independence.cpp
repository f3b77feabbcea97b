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

#include "qiso/independence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace qiso {

namespace {

using Word = std::uint64_t;

bool any(const Word *p, std::size_t w) {
    for (std::size_t i = 0; i < w; i++) {
        if (p[i]) return true;
    }
    return false;
}

int first_bit(const Word *p, std::size_t w) {
    for (std::size_t i = 0; i < w; i++) {
        if (p[i]) return static_cast<int>(i * 64) + std::countr_zero(p[i]);
    }
    return -1;
}

void clear_bit(Word *p, int v) { p[v / 64] &= ~(Word{1} << (v % 64)); }

/// Branch and bound over a relabelled copy of the graph (bit i = i-th vertex in degree order).
class CliqueSearch {
   public:
    CliqueSearch(const Graph &g, std::uint64_t budget) : budget_(budget) {
        n_ = g.n();
        w_ = static_cast<std::size_t>((n_ + 63) / 64);
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; i++) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        adj_.assign(static_cast<std::size_t>(n_) * w_, 0);
        for (int i = 0; i < n_; i++) {
            for (int u : g.neighbors(order_[static_cast<std::size_t>(i)])) {
                int j = pos[static_cast<std::size_t>(u)];
                adj_[static_cast<std::size_t>(i) * w_ + static_cast<std::size_t>(j / 64)] |= Word{1} << (j % 64);
            }
        }
        stack_.assign(static_cast<std::size_t>(n_ + 2) * w_, 0);
    }

    CliqueResult run() {
        CliqueResult result;
        if (n_ == 0) return result;
        Word *root = frame(0);
        for (int v = 0; v < n_; v++) root[v / 64] |= Word{1} << (v % 64);
        seed_greedy();
        std::vector<int> order, colors;
        color_sort(root, order, colors);
        root_bound_ = colors.empty() ? 0 : colors.back();
        expand(0);
        result.lower = static_cast<int>(best_.size());
        result.upper = exhausted_ ? std::max(result.lower, root_bound_) : result.lower;
        result.nodes = nodes_;
        result.budget_exhausted = exhausted_;
        for (int v : best_) result.witness.push_back(order_[static_cast<std::size_t>(v)]);
        std::sort(result.witness.begin(), result.witness.end());
        return result;
    }

   private:
    Word *frame(std::size_t depth) { return stack_.data() + depth * w_; }
    const Word *nbrs(int v) const { return adj_.data() + static_cast<std::size_t>(v) * w_; }

    void seed_greedy() {
        // Lowest-index-first greedy clique gives an initial incumbent.
        std::vector<Word> p(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(w_));
        std::vector<int> clique;
        while (any(p.data(), w_)) {
            int v = first_bit(p.data(), w_);
            clique.push_back(v);
            for (std::size_t i = 0; i < w_; i++) p[i] &= nbrs(v)[i];
        }
        best_ = clique;
    }

    void color_sort(const Word *p, std::vector<int> &order, std::vector<int> &colors) const {
        std::vector<Word> u(p, p + w_), q(w_);
        int color = 0;
        while (any(u.data(), w_)) {
            color++;
            q = u;
            while (any(q.data(), w_)) {
                int v = first_bit(q.data(), w_);
                clear_bit(q.data(), v);
                clear_bit(u.data(), v);
                for (std::size_t i = 0; i < w_; i++) q[i] &= ~nbrs(v)[i];
                order.push_back(v);
                colors.push_back(color);
            }
        }
    }

    void expand(std::size_t depth) {
        if (exhausted_) return;
        if (budget_ && nodes_ >= budget_) {
            exhausted_ = true;
            return;
        }
        nodes_++;
        Word *p = frame(depth);
        Word *np = frame(depth + 1);
        std::vector<int> order, colors;
        color_sort(p, order, colors);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(colors[i]) <= best_.size()) return;
            int v = order[i];
            current_.push_back(v);
            for (std::size_t k = 0; k < w_; k++) np[k] = p[k] & nbrs(v)[k];
            if (!any(np, w_)) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(depth + 1);
            }
            current_.pop_back();
            clear_bit(p, v);
            if (exhausted_) return;
        }
    }

    int n_ = 0;
    std::size_t w_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int root_bound_ = 0;
    std::vector<int> order_;
    std::vector<Word> adj_;
    std::vector<Word> stack_;
    std::vector<int> current_;
    std::vector<int> best_;
};

IndependenceResult greedy_independent(const Graph &g, std::uint64_t seed) {
    IndependenceResult out;
    std::mt19937_64 rng(seed);
    const int n = g.n();
    constexpr int kRestarts = 64;
    for (int attempt = 0; attempt < kRestarts; attempt++) {
        std::vector<char> alive(static_cast<std::size_t>(n), 1);
        std::vector<int> chosen;
        std::vector<int> tiebreak(static_cast<std::size_t>(n));
        std::iota(tiebreak.begin(), tiebreak.end(), 0);
        if (attempt > 0) std::shuffle(tiebreak.begin(), tiebreak.end(), rng);
        while (true) {
            int best = -1, best_deg = 0;
            for (int v : tiebreak) {
                if (!alive[static_cast<std::size_t>(v)]) continue;
                int d = 0;
                for (int u : g.neighbors(v)) d += alive[static_cast<std::size_t>(u)];
                if (best < 0 || d < best_deg) {
                    best = v;
                    best_deg = d;
                }
            }
            if (best < 0) break;
            chosen.push_back(best);
            alive[static_cast<std::size_t>(best)] = 0;
            for (int u : g.neighbors(best)) alive[static_cast<std::size_t>(u)] = 0;
        }
        if (chosen.size() > out.witness.size()) out.witness = chosen;
        out.nodes++;
    }
    std::sort(out.witness.begin(), out.witness.end());
    out.lower = static_cast<int>(out.witness.size());
    out.upper = n;
    return out;
}

int clique_cover_bound(const Graph &g) {
    // Greedy colouring of the complement: each colour class is a clique of g.
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int used = 0;
    for (int v = 0; v < n; v++) {
        std::vector<char> blocked(static_cast<std::size_t>(used), 0);
        for (int u = 0; u < v; u++) {
            if (!g.adjacent(u, v)) blocked[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
        }
        int c = 0;
        while (c < used && blocked[static_cast<std::size_t>(c)]) c++;
        if (c == used) used++;
        color[static_cast<std::size_t>(v)] = c;
    }
    return used;
}

void count_from(const Graph &g, std::vector<Word> &p, int remaining, std::uint64_t &total) {
    const std::size_t w = g.words();
    if (remaining == 1) {
        for (auto x : p) total += static_cast<std::uint64_t>(std::popcount(x));
        return;
    }
    std::vector<Word> q(w);
    for (std::size_t i = 0; i < w; i++) {
        Word bits = p[i];
        while (bits) {
            int v = static_cast<int>(i * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            // Neighbours of v with larger index, restricted to p.
            auto row = g.row(v);
            bool nonempty = false;
            for (std::size_t k = 0; k < w; k++) {
                Word higher = k < static_cast<std::size_t>(v) / 64   ? 0
                              : k > static_cast<std::size_t>(v) / 64 ? ~Word{0}
                                                                    : (v % 64 == 63 ? 0 : ~Word{0} << (v % 64 + 1));
                q[k] = p[k] & row[k] & higher;
                nonempty |= q[k] != 0;
            }
            if (nonempty) count_from(g, q, remaining - 1, total);
        }
    }
}

}  // namespace

CliqueResult max_clique(const Graph &g, std::uint64_t node_budget) { return CliqueSearch(g, node_budget).run(); }

IndependenceResult independence_number(const Graph &g, AlphaMode mode, std::uint64_t node_budget,
                                       std::uint64_t seed) {
    switch (mode) {
        case AlphaMode::lower_witness:
            return greedy_independent(g, seed);
        case AlphaMode::upper_only: {
            IndependenceResult r;
            r.upper = clique_cover_bound(g);
            return r;
        }
        case AlphaMode::exact:
            break;
    }
    CliqueResult c = max_clique(g.complement(), node_budget);
    IndependenceResult r;
    r.lower = c.lower;
    r.upper = std::min(c.upper, clique_cover_bound(g));
    r.witness = std::move(c.witness);
    r.nodes = c.nodes;
    r.budget_exhausted = c.budget_exhausted;
    return r;
}

bool is_independent_set(const Graph &g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); a++) {
        for (std::size_t b = a + 1; b < vertices.size(); b++) {
            if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

bool is_clique(const Graph &g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); a++) {
        for (std::size_t b = a + 1; b < vertices.size(); b++) {
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

BigInt count_cliques(const Graph &g, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    std::vector<Word> all(g.words(), 0);
    for (int v = 0; v < g.n(); v++) all[static_cast<std::size_t>(v / 64)] |= Word{1} << (v % 64);
    std::uint64_t total = 0;
    count_from(g, all, k, total);
    return BigInt(std::to_string(total));
}

}  // namespace qiso
