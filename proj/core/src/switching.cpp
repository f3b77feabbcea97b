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


#include "qiso/switching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qiso/graph_io.hpp"
#include "qiso/parallel.hpp"
#include "qiso/polynomial.hpp"

namespace qiso {

namespace {

std::vector<int> cell_index(const GmPartition &p, int n) {
    std::vector<int> where(static_cast<std::size_t>(n), -2);
    auto place = [&](int v, int c) {
        if (v < 0 || v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
        if (where[static_cast<std::size_t>(v)] != -2) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " appears twice in the partition");
        }
        where[static_cast<std::size_t>(v)] = c;
    };
    for (std::size_t c = 0; c < p.cells.size(); c++) {
        if (p.cells[c].empty()) throw std::invalid_argument("partition cell " + std::to_string(c + 1) + " is empty");
        for (int v : p.cells[c]) place(v, static_cast<int>(c));
    }
    for (int v : p.d) place(v, -1);
    for (int v = 0; v < n; v++) {
        if (where[static_cast<std::size_t>(v)] == -2) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not covered by the partition");
        }
    }
    return where;
}

int neighbours_in(const Graph &g, int v, const std::vector<int> &cell) {
    int k = 0;
    for (int u : cell) k += g.adjacent(v, u);
    return k;
}

}  // namespace

GmValidation validate_gm_partition(const Graph &g, const GmPartition &p) {
    cell_index(p, g.n());
    GmValidation out;
    for (std::size_t i = 0; i < p.cells.size(); i++) {
        for (std::size_t j = 0; j < p.cells.size(); j++) {
            const int first = neighbours_in(g, p.cells[i].front(), p.cells[j]);
            for (int v : p.cells[i]) {
                out.equitable.record(neighbours_in(g, v, p.cells[j]) == first, [&] {
                    return "vertex " + std::to_string(v) + " of C" + std::to_string(i + 1) + " has a different count in C" +
                           std::to_string(j + 1);
                });
            }
        }
    }
    for (int v : p.d) {
        for (std::size_t i = 0; i < p.cells.size(); i++) {
            const int m = static_cast<int>(p.cells[i].size());
            const int k = neighbours_in(g, v, p.cells[i]);
            const bool half = 2 * k == m;
            out.d_condition.record(k == 0 || k == m || half, [&] {
                return "D vertex " + std::to_string(v) + " has " + std::to_string(k) + " of " + std::to_string(m) +
                       " neighbours in C" + std::to_string(i + 1);
            });
            if (half && k > 0) {
                out.half_joins++;
                out.half_joins_of_four += k == 4;
            }
        }
    }
    return out;
}

Graph gm_switch(const Graph &g, const GmPartition &p) {
    auto report = validate_gm_partition(g, p);
    if (!report.passed()) {
        const auto &bad = report.equitable.passed() ? report.d_condition : report.equitable;
        throw std::invalid_argument("not a Godsil-McKay partition: " + bad.failures.front());
    }
    Graph out = g;
    for (int v : p.d) {
        for (const auto &cell : p.cells) {
            const int k = neighbours_in(g, v, cell);
            if (k == 0 || 2 * k != static_cast<int>(cell.size())) continue;
            for (int u : cell) out = out.with_edge_flipped(v, u);
        }
    }
    return out;
}

RationalMatrix build_Q(const GmPartition &p, int n) {
    auto where = cell_index(p, n);
    std::vector<Rational> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; r++) {
        const int c = where[static_cast<std::size_t>(r)];
        if (c < 0) {
            entries[static_cast<std::size_t>(r * n + r)] = 1;
            continue;
        }
        const auto &cell = p.cells[static_cast<std::size_t>(c)];
        const Rational scale(2, static_cast<long>(cell.size()));
        for (int s : cell) entries[static_cast<std::size_t>(r * n + s)] = s == r ? scale - 1 : scale;
    }
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(n), std::move(entries)};
}

bool verify_QAQ(const Graph &g, const GmPartition &p) {
    RationalMatrix q = build_Q(p, g.n());
    return mat_mul(mat_mul(q, g.adjacency_matrix()), q) == gm_switch(g, p).adjacency_matrix();
}

bool verify_uQ_commute(const MagicUnitary &u, const GmPartition &p) {
    const int n = u.partition.vertex_count();
    auto where = cell_index(p, n);
    // Every orbit cell must sit inside a single switching cell (or inside D).
    for (int i = 0; i < u.partition.cell_count(); i++) {
        const auto &cell = u.partition.cells[static_cast<std::size_t>(i)];
        for (int v : cell) {
            if (where[static_cast<std::size_t>(v)] != where[static_cast<std::size_t>(cell.front())]) {
                const int c = where[static_cast<std::size_t>(v)];
                throw std::invalid_argument("partition is not aligned with the orbit cells: " +
                                            (c < 0 ? std::string("D") : "C" + std::to_string(c + 1)) +
                                            " splits orbit cell V" + std::to_string(i + 1));
            }
        }
    }
    RationalMatrix q = build_Q(p, n);
    const std::size_t area = u.dim * u.dim;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; v++) pos[static_cast<std::size_t>(v)] = u.position(v);
    std::vector<char> ok(static_cast<std::size_t>(n), 1);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t sr) {
        const int cs = u.partition.cell_of[sr];
        std::vector<mpq_class> left(area), right(area);
        for (int t = 0; t < n && ok[sr]; t++) {
            const int ct = u.partition.cell_of[static_cast<std::size_t>(t)];
            std::fill(left.begin(), left.end(), 0);
            std::fill(right.begin(), right.end(), 0);
            // (uQ)_{st} = sum over c in cell(s) of u_{sc} Q_{ct}; (Qu)_{st} = sum over c in cell(t) of Q_{sc} u_{ct}.
            for (int c : u.partition.cells[static_cast<std::size_t>(cs)]) {
                const Rational &f = q(static_cast<std::size_t>(c), static_cast<std::size_t>(t));
                if (f.is_zero()) continue;
                auto e = u.entry(cs, pos[sr], pos[static_cast<std::size_t>(c)]).entries();
                for (std::size_t k = 0; k < area; k++) left[k] += f.raw() * e[k].raw();
            }
            for (int c : u.partition.cells[static_cast<std::size_t>(ct)]) {
                const Rational &f = q(sr, static_cast<std::size_t>(c));
                if (f.is_zero()) continue;
                auto e = u.entry(ct, pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(t)]).entries();
                for (std::size_t k = 0; k < area; k++) right[k] += f.raw() * e[k].raw();
            }
            if (left != right) ok[sr] = 0;
        }
    });
    return std::all_of(ok.begin(), ok.end(), [](char x) { return x != 0; });
}

bool cospectral(const Graph &g, const Graph &h) {
    if (g.n() != h.n()) {
        throw DimensionError("cospectral: graphs on " + std::to_string(g.n()) + " and " + std::to_string(h.n()) +
                             " vertices");
    }
    return char_poly(g.adjacency_matrix()) == char_poly(h.adjacency_matrix());
}

GmPartition v15_partition(const OrbitPartition &orbits) {
    std::vector<std::vector<int>> groups;
    for (int i = 1; i < orbits.cell_count(); i++) groups.push_back({i});
    return partition_from_orbit_groups(orbits, groups, {orbits.cell_count()});
}

GmPartition partition_from_orbit_groups(const OrbitPartition &orbits, const std::vector<std::vector<int>> &groups,
                                        const std::vector<int> &d_cells) {
    auto cell = [&](int label) -> const std::vector<int> & {
        if (label < 1 || label > orbits.cell_count()) {
            throw std::invalid_argument("orbit cell label " + std::to_string(label) + " out of range");
        }
        return orbits.cells[static_cast<std::size_t>(label - 1)];
    };
    GmPartition p;
    for (const auto &group : groups) {
        std::vector<int> merged;
        for (int label : group) {
            const auto &c = cell(label);
            merged.insert(merged.end(), c.begin(), c.end());
        }
        std::sort(merged.begin(), merged.end());
        p.cells.push_back(std::move(merged));
    }
    for (int label : d_cells) {
        const auto &c = cell(label);
        p.d.insert(p.d.end(), c.begin(), c.end());
    }
    std::sort(p.d.begin(), p.d.end());
    return p;
}

GmPartition parse_gm_partition(std::string_view text) {
    GmPartition p;
    bool have_d = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        number++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag != "C" && tag != "D") throw FormatError("line " + std::to_string(number) + ": expected 'C' or 'D', got '" + tag + "'", number);
        if (tag == "D" && have_d) throw FormatError("line " + std::to_string(number) + ": second D line", number);
        std::vector<int> vertices;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || v < 0) {
                throw FormatError("line " + std::to_string(number) + ": bad vertex '" + token + "'", number);
            }
            vertices.push_back(v);
        }
        if (tag == "D") {
            p.d = std::move(vertices);
            have_d = true;
        } else {
            if (vertices.empty()) throw FormatError("line " + std::to_string(number) + ": empty cell", number);
            p.cells.push_back(std::move(vertices));
        }
    }
    return p;
}

std::string format_gm_partition(const GmPartition &p) {
    std::string out;
    auto emit = [&](char tag, const std::vector<int> &vs) {
        out += tag;
        for (int v : vs) out += ' ' + std::to_string(v);
        out += '\n';
    };
    for (const auto &c : p.cells) emit('C', c);
    emit('D', p.d);
    return out;
}

}  // namespace qiso
