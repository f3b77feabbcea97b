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


#include "qiso/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qiso/independence.hpp"

namespace qiso {

namespace {

constexpr std::uint64_t kIndividualized = 0x1d8e4e27c47d124fULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t distinct(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::uint64_t multiset_hash(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    std::uint64_t h = v.size();
    for (auto x : v) h = mix(h, x);
    return h;
}

std::string hex(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string histogram_str(const std::map<int, std::size_t> &h) {
    std::string out;
    for (auto [value, count] : h) {
        if (!out.empty()) out += ",";
        out += std::to_string(value) + ":" + std::to_string(count);
    }
    return out.empty() ? "-" : out;
}

std::string common_neighbor_histogram(const Graph &g, bool on_edges) {
    std::map<int, std::size_t> h;
    for (int u = 0; u < g.n(); u++) {
        for (int v = u + 1; v < g.n(); v++) {
            if (g.adjacent(u, v) == on_edges) h[common_neighbors(g, u, v)]++;
        }
    }
    return histogram_str(h);
}

std::string k4_per_edge(const Graph &g) {
    std::map<int, std::size_t> h;
    std::vector<std::uint64_t> common(g.words());
    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u), rv = g.row(v);
        for (std::size_t k = 0; k < g.words(); k++) common[k] = ru[k] & rv[k];
        int count = 0;
        for (std::size_t k = 0; k < g.words(); k++) {
            std::uint64_t bits = common[k];
            while (bits) {
                int a = static_cast<int>(k * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                auto ra = g.row(a);
                for (std::size_t j = 0; j < g.words(); j++) count += std::popcount(ra[j] & common[j]);
            }
        }
        h[count / 2]++;
    }
    return histogram_str(h);
}

std::string refinement_signature(const Graph &g) {
    auto colors = refine_colors(g, std::vector<std::uint64_t>(static_cast<std::size_t>(g.n()), 0));
    return "classes=" + std::to_string(distinct(colors)) + " hash=" + hex(multiset_hash(colors));
}

std::string individualized_signature(const Graph &g) {
    std::vector<std::uint64_t> per_vertex;
    for (int v = 0; v < g.n(); v++) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(g.n()), 0);
        c[static_cast<std::size_t>(v)] = kIndividualized;
        per_vertex.push_back(multiset_hash(refine_colors(g, std::move(c))));
    }
    return "types=" + std::to_string(distinct(per_vertex)) + " hash=" + hex(multiset_hash(per_vertex));
}

class Search {
   public:
    Search(const Graph &g, const Graph &h, std::uint64_t budget) : g_(g), h_(h), budget_(budget) {}

    bool run(std::vector<std::uint64_t> cg, std::vector<std::uint64_t> ch) {
        if (budget_ && nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        nodes_++;
        cg = refine_colors(g_, std::move(cg));
        ch = refine_colors(h_, std::move(ch));
        auto sg = cg, sh = ch;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;

        // Target the smallest non-singleton colour class.
        std::uint64_t target = 0;
        std::size_t best = 0;
        for (std::size_t i = 0; i < sg.size();) {
            std::size_t j = i;
            while (j < sg.size() && sg[j] == sg[i]) j++;
            if (j - i > 1 && (best == 0 || j - i < best)) {
                best = j - i;
                target = sg[i];
            }
            i = j;
        }
        const int n = g_.n();
        if (best == 0) {
            std::map<std::uint64_t, int> where;
            for (int u = 0; u < n; u++) where[ch[static_cast<std::size_t>(u)]] = u;
            std::vector<int> map(static_cast<std::size_t>(n));
            for (int v = 0; v < n; v++) map[static_cast<std::size_t>(v)] = where[cg[static_cast<std::size_t>(v)]];
            if (!is_isomorphism(g_, h_, map)) return false;
            map_ = std::move(map);
            return true;
        }
        int v = 0;
        while (cg[static_cast<std::size_t>(v)] != target) v++;
        for (int u = 0; u < n; u++) {
            if (ch[static_cast<std::size_t>(u)] != target) continue;
            auto ng = cg, nh = ch;
            ng[static_cast<std::size_t>(v)] = mix(target, kIndividualized);
            nh[static_cast<std::size_t>(u)] = mix(target, kIndividualized);
            if (run(std::move(ng), std::move(nh))) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }
    std::vector<int> &map() { return map_; }

   private:
    const Graph &g_;
    const Graph &h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> map_;
};

const std::string kSearchKind = "exhaustive_search";

}  // namespace

std::string outcome_name(IsoOutcome outcome) {
    switch (outcome) {
        case IsoOutcome::isomorphic:
            return "isomorphic";
        case IsoOutcome::non_isomorphic:
            return "non_isomorphic";
        case IsoOutcome::inconclusive:
            break;
    }
    return "inconclusive";
}

std::vector<std::uint64_t> refine_colors(const Graph &g, std::vector<std::uint64_t> colors) {
    std::size_t classes = distinct(colors);
    std::vector<std::uint64_t> next(colors.size()), nbr;
    while (true) {
        for (int v = 0; v < g.n(); v++) {
            nbr.clear();
            for (int u : g.neighbors(v)) nbr.push_back(colors[static_cast<std::size_t>(u)]);
            next[static_cast<std::size_t>(v)] = mix(colors[static_cast<std::size_t>(v)], multiset_hash(nbr));
        }
        std::size_t refined = distinct(next);
        if (refined == classes) return colors;
        classes = refined;
        colors.swap(next);
    }
}

const std::vector<std::string> &invariant_kinds() {
    static const std::vector<std::string> kinds = {
        "vertex_count",    "edge_count",  "degree_sequence", "edge_common_neighbors", "nonedge_common_neighbors",
        "color_refinement", "independence_number", "k4_per_edge", "individualized_refinement",
    };
    return kinds;
}

std::optional<std::string> invariant_value(const Graph &g, const std::string &kind, const IsoOptions &options) {
    if (kind == "vertex_count") return std::to_string(g.n());
    if (kind == "edge_count") return std::to_string(g.edge_count());
    if (kind == "degree_sequence") {
        std::map<int, std::size_t> h;
        for (int v = 0; v < g.n(); v++) h[g.degree(v)]++;
        return histogram_str(h);
    }
    if (kind == "edge_common_neighbors") return common_neighbor_histogram(g, true);
    if (kind == "nonedge_common_neighbors") return common_neighbor_histogram(g, false);
    if (kind == "color_refinement") return refinement_signature(g);
    if (kind == "independence_number") {
        auto r = independence_number(g, AlphaMode::exact, options.alpha_budget);
        if (!r.exact()) return std::nullopt;
        return std::to_string(r.lower);
    }
    if (kind == "k4_per_edge") return k4_per_edge(g);
    if (kind == "individualized_refinement") return individualized_signature(g);
    throw std::invalid_argument("unknown invariant kind '" + kind + "'");
}

IsoResult are_isomorphic(const Graph &g, const Graph &h, const IsoOptions &options) {
    IsoResult result;
    if (g == h) {
        result.outcome = IsoOutcome::isomorphic;
        result.map.resize(static_cast<std::size_t>(g.n()));
        std::iota(result.map.begin(), result.map.end(), 0);
        return result;
    }
    for (const auto &kind : invariant_kinds()) {
        auto left = invariant_value(g, kind, options);
        if (!left) continue;
        auto right = invariant_value(h, kind, options);
        if (!right) continue;
        if (*left != *right) {
            result.outcome = IsoOutcome::non_isomorphic;
            result.certificate = NonIsoCertificate{kind, *left, *right};
            return result;
        }
    }
    Search search(g, h, options.search_budget);
    const std::vector<std::uint64_t> start(static_cast<std::size_t>(g.n()), 0);
    bool found = search.run(start, start);
    result.search_nodes = search.nodes();
    if (found) {
        result.outcome = IsoOutcome::isomorphic;
        result.map = std::move(search.map());
    } else if (!search.exhausted()) {
        result.outcome = IsoOutcome::non_isomorphic;
        result.certificate = NonIsoCertificate{kSearchKind, "complete search of " + std::to_string(search.nodes()) + " nodes",
                                               "no isomorphism"};
    }
    return result;
}

bool recheck_certificate(const Graph &g, const Graph &h, const NonIsoCertificate &certificate,
                         const IsoOptions &options) {
    if (certificate.kind == kSearchKind) {
        Search search(g, h, options.search_budget);
        const std::vector<std::uint64_t> start(static_cast<std::size_t>(g.n()), 0);
        return g.n() == h.n() && !search.run(start, start) && !search.exhausted();
    }
    auto left = invariant_value(g, certificate.kind, options);
    auto right = invariant_value(h, certificate.kind, options);
    return left && right && *left == certificate.value_left && *right == certificate.value_right && *left != *right;
}

}  // namespace qiso
