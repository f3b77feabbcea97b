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


#include "qiso/homcount.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "qiso/independence.hpp"
#include "qiso/matrix.hpp"
#include "qiso/parallel.hpp"

namespace qiso {

namespace {

using Bits = std::vector<std::uint64_t>;
constexpr int kMaxTableArity = 3;

bool fits_u64(int n, int p) {
    unsigned __int128 bound = 1;
    for (int i = 0; i < p; i++) {
        bound *= static_cast<unsigned>(n);
        if (bound > std::numeric_limits<std::uint64_t>::max()) return false;
    }
    return true;
}

BigInt to_big(std::uint64_t x) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
    return b;
}

struct Pattern {
    int p = 0;
    std::vector<std::vector<char>> adj;  // p x p
    std::vector<char> active;
};

/// Elimination order and width of the active part of a pattern (min-fill, then min degree).
std::pair<std::vector<int>, int> min_fill_order(const Pattern &pat) {
    auto adj = pat.adj;
    std::vector<char> alive = pat.active;
    std::vector<int> order;
    int width = 0;
    while (true) {
        int best = -1;
        long best_fill = 0;
        int best_deg = 0;
        for (int v = 0; v < pat.p; v++) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            std::vector<int> nb;
            for (int u = 0; u < pat.p; u++) {
                if (alive[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) nb.push_back(u);
            }
            long fill = 0;
            for (std::size_t a = 0; a < nb.size(); a++) {
                for (std::size_t b = a + 1; b < nb.size(); b++) fill += !adj[static_cast<std::size_t>(nb[a])][static_cast<std::size_t>(nb[b])];
            }
            int deg = static_cast<int>(nb.size());
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        if (best < 0) break;
        std::vector<int> nb;
        for (int u = 0; u < pat.p; u++) {
            if (alive[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(best)][static_cast<std::size_t>(u)]) nb.push_back(u);
        }
        for (int a : nb) {
            for (int b : nb) {
                if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
            }
        }
        width = std::max(width, static_cast<int>(nb.size()));
        alive[static_cast<std::size_t>(best)] = 0;
        order.push_back(best);
    }
    return {order, width};
}

template <typename Count>
class Eliminator {
   public:
    explicit Eliminator(const Graph &g) : g_(g), n_(g.n()), words_(g.words()) {}

    Count count(const Pattern &pat, const std::vector<Bits> &domains) {
        auto [order, width] = min_fill_order(pat);
        if (width > kMaxTableArity) return condition(pat, domains);
        return eliminate(pat, domains, order);
    }

   private:
    struct Table {
        std::vector<int> scope;  // sorted pattern vertices
        std::vector<Count> values;
    };

    Count condition(const Pattern &pat, const std::vector<Bits> &domains) {
        int c = -1, best_deg = -1;
        for (int v = 0; v < pat.p; v++) {
            if (!pat.active[static_cast<std::size_t>(v)]) continue;
            int deg = 0;
            for (int u = 0; u < pat.p; u++) deg += pat.active[static_cast<std::size_t>(u)] && pat.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            if (deg > best_deg) {
                best_deg = deg;
                c = v;
            }
        }
        Pattern rest = pat;
        rest.active[static_cast<std::size_t>(c)] = 0;
        Count total = 0;
        for_each_bit(domains[static_cast<std::size_t>(c)], [&](int a) {
            auto narrowed = domains;
            bool empty = false;
            for (int u = 0; u < pat.p; u++) {
                if (!rest.active[static_cast<std::size_t>(u)] || !pat.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)]) continue;
                auto row = g_.row(a);
                bool any = false;
                for (std::size_t k = 0; k < words_; k++) {
                    narrowed[static_cast<std::size_t>(u)][k] &= row[k];
                    any |= narrowed[static_cast<std::size_t>(u)][k] != 0;
                }
                empty |= !any;
            }
            if (!empty) total += count(rest, narrowed);
        });
        return total;
    }

    template <typename F>
    static void for_each_bit(const Bits &b, F &&f) {
        for (std::size_t k = 0; k < b.size(); k++) {
            std::uint64_t w = b[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    Count eliminate(const Pattern &pat, const std::vector<Bits> &domains, const std::vector<int> &order) {
        auto edges = pat.adj;
        std::vector<Table> tables;
        Count scalar = 1;
        for (int v : order) {
            std::vector<int> edge_nbrs;
            std::set<int> scope;
            for (int u = 0; u < pat.p; u++) {
                if (pat.active[static_cast<std::size_t>(u)] && edges[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                    edge_nbrs.push_back(u);
                    scope.insert(u);
                }
            }
            std::vector<Table> touching, rest;
            for (auto &t : tables) {
                if (std::find(t.scope.begin(), t.scope.end(), v) != t.scope.end()) {
                    for (int u : t.scope) {
                        if (u != v) scope.insert(u);
                    }
                    touching.push_back(std::move(t));
                } else {
                    rest.push_back(std::move(t));
                }
            }
            tables = std::move(rest);
            Table out{{scope.begin(), scope.end()}, {}};
            build(out, v, edge_nbrs, touching, edges, domains);
            for (int u : edge_nbrs) {
                edges[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 0;
                edges[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 0;
            }
            if (out.scope.empty()) {
                scalar *= out.values[0];
                if (scalar == 0) return 0;
            } else {
                tables.push_back(std::move(out));
            }
        }
        return scalar;
    }

    std::size_t index_stride(int k) const {
        std::size_t s = 1;
        for (int i = 0; i < k; i++) s *= static_cast<std::size_t>(n_);
        return s;
    }

    void build(Table &out, int v, const std::vector<int> &edge_nbrs, const std::vector<Table> &touching,
               const std::vector<std::vector<char>> &edges, const std::vector<Bits> &domains) {
        const std::size_t arity = out.scope.size();
        out.values.assign(index_stride(static_cast<int>(arity)), Count(0));
        // For each table: stride of v and strides of the scope members.
        struct Lookup {
            const Table *table;
            std::size_t v_stride;
            std::vector<std::pair<std::size_t, std::size_t>> terms;  // (position in out.scope, stride)
        };
        std::vector<Lookup> lookups;
        for (const auto &t : touching) {
            Lookup l{&t, 0, {}};
            for (std::size_t k = 0; k < t.scope.size(); k++) {
                const std::size_t stride = index_stride(static_cast<int>(k));
                if (t.scope[k] == v) {
                    l.v_stride = stride;
                } else {
                    auto pos = static_cast<std::size_t>(std::find(out.scope.begin(), out.scope.end(), t.scope[k]) - out.scope.begin());
                    l.terms.emplace_back(pos, stride);
                }
            }
            lookups.push_back(std::move(l));
        }
        std::vector<int> assignment(arity);
        std::vector<Bits> allowed(arity + 1, Bits(words_));
        std::vector<std::size_t> bases(lookups.size());
        Bits candidates(words_);

        std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t out_index) {
            if (depth == arity) {
                candidates = domains[static_cast<std::size_t>(v)];
                for (int u : edge_nbrs) {
                    auto pos = static_cast<std::size_t>(std::find(out.scope.begin(), out.scope.end(), u) - out.scope.begin());
                    auto row = g_.row(assignment[pos]);
                    for (std::size_t k = 0; k < words_; k++) candidates[k] &= row[k];
                }
                Count sum = 0;
                if (lookups.empty()) {
                    std::uint64_t c = 0;
                    for (auto w : candidates) c += static_cast<std::uint64_t>(std::popcount(w));
                    sum = Count(c);
                } else {
                    for (std::size_t l = 0; l < lookups.size(); l++) {
                        std::size_t base = 0;
                        for (auto [pos, stride] : lookups[l].terms) base += static_cast<std::size_t>(assignment[pos]) * stride;
                        bases[l] = base;
                    }
                    for_each_bit(candidates, [&](int x) {
                        Count term = lookups[0].table->values[bases[0] + static_cast<std::size_t>(x) * lookups[0].v_stride];
                        for (std::size_t l = 1; l < lookups.size() && term != 0; l++) {
                            term *= lookups[l].table->values[bases[l] + static_cast<std::size_t>(x) * lookups[l].v_stride];
                        }
                        sum += term;
                    });
                }
                out.values[out_index] = sum;
                return;
            }
            const int u = out.scope[depth];
            Bits &choices = allowed[depth];
            choices = domains[static_cast<std::size_t>(u)];
            // Remaining pattern edges inside the scope force adjacency; other entries stay zero.
            for (std::size_t e = 0; e < depth; e++) {
                if (!edges[static_cast<std::size_t>(u)][static_cast<std::size_t>(out.scope[e])]) continue;
                auto row = g_.row(assignment[e]);
                for (std::size_t k = 0; k < words_; k++) choices[k] &= row[k];
            }
            const std::size_t stride = index_stride(static_cast<int>(depth));
            for_each_bit(choices, [&](int x) {
                assignment[depth] = x;
                walk(depth + 1, out_index + static_cast<std::size_t>(x) * stride);
            });
        };
        walk(0, 0);
    }

    const Graph &g_;
    int n_;
    std::size_t words_;
};

template <typename Count>
Count run_hom(const Graph &h, const Graph &g) {
    Pattern pat;
    pat.p = h.n();
    pat.adj.assign(static_cast<std::size_t>(pat.p), std::vector<char>(static_cast<std::size_t>(pat.p), 0));
    for (auto [a, b] : h.edges()) {
        pat.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        pat.adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    pat.active.assign(static_cast<std::size_t>(pat.p), 1);
    Bits all(g.words(), 0);
    for (int v = 0; v < g.n(); v++) all[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    std::vector<Bits> domains(static_cast<std::size_t>(pat.p), all);
    return Eliminator<Count>(g).count(pat, domains);
}

}  // namespace

BigInt hom_count(const Graph &h, const Graph &g) {
    if (h.n() == 0) return 1;
    if (g.n() == 0) return 0;
    // Every partial sum is bounded by n^p, so 64-bit tables are exact whenever n^p fits.
    if (fits_u64(g.n(), h.n())) return to_big(run_hom<std::uint64_t>(h, g));
    return run_hom<BigInt>(h, g);
}

BigInt hom_count_brute(const Graph &h, const Graph &g) {
    const int p = h.n();
    BigInt total = 0;
    std::vector<int> image(static_cast<std::size_t>(p));
    std::function<void(int)> assign = [&](int i) {
        if (i == p) {
            total += 1;
            return;
        }
        for (int x = 0; x < g.n(); x++) {
            bool ok = true;
            for (int j = 0; j < i && ok; j++) {
                if (h.adjacent(i, j)) ok = g.adjacent(x, image[static_cast<std::size_t>(j)]);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(i)] = x;
            assign(i + 1);
        }
    };
    assign(0);
    return total;
}

namespace {

RationalMatrix adjacency_power(const Graph &g, int k) {
    RationalMatrix a = g.adjacency_matrix();
    RationalMatrix power = RationalMatrix::identity(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < k; i++) power = mat_mul(power, a);
    return power;
}

}  // namespace

BigInt closed_walks(const Graph &g, int k) {
    RationalMatrix m = adjacency_power(g, k);
    BigInt t = 0;
    for (std::size_t i = 0; i < m.rows(); i++) t += m(i, i).numerator();
    return t;
}

BigInt walks(const Graph &g, int length) {
    RationalMatrix m = adjacency_power(g, length);
    BigInt t = 0;
    for (const auto &x : m.entries()) t += x.numerator();
    return t;
}

BigInt hom_complete(int k, const Graph &g) {
    BigInt factorial = 1;
    for (int i = 2; i <= k; i++) factorial *= i;
    return factorial * count_cliques(g, k);
}

Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; i++) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, e);
}

Graph path_graph(int vertices) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < vertices; i++) e.emplace_back(i, i + 1);
    return Graph::from_edges(vertices, e);
}

Graph complete_graph(int k) {
    return Graph::from_predicate(k, [](int, int) { return true; });
}

HomProfileReport hom_profile_compare(const Graph &g1, const Graph &g2, int n_max, bool planar_only) {
    std::vector<PatternGraph> patterns;
    for (auto &p : enumerate_connected_graphs(n_max)) {
        if (!planar_only || p.planar) patterns.push_back(std::move(p));
    }
    HomProfileReport report;
    report.rows.resize(patterns.size());
    parallel_for(patterns.size(), [&](std::size_t i) {
        const auto &p = patterns[i];
        report.rows[i] = {p.id, p.graph.n(), p.planar, hom_count(p.graph, g1), hom_count(p.graph, g2)};
    });
    for (const auto &row : report.rows) {
        if (row.equal()) continue;
        report.differences++;
        report.planar_differences += row.planar;
    }
    return report;
}

std::string format_hom_profile(const HomProfileReport &report) {
    std::string out;
    for (const auto &row : report.rows) {
        out += row.id + " " + row.left.get_str() + " " + row.right.get_str() + " " + (row.equal() ? "yes" : "no") + "\n";
    }
    return out;
}

}  // namespace qiso
