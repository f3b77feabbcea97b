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

#include "qiso/roots.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "qiso/errors.hpp"
#include "qiso/transporter.hpp"

namespace qiso {

std::vector<Line> build_root_lines() {
    std::vector<Line> lines;
    for (int i = 1; i <= 8; i++) {
        for (int j = i + 1; j <= 8; j++) {
            lines.push_back(Line::e(i, +1, j));
            lines.push_back(Line::e(i, -1, j));
        }
    }
    // Canonical all-(+-1) lines have x_1 = +1 and an even set S of -1 positions inside {2..8}.
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < 128; mask++) {
        if (std::popcount(mask) % 2) continue;
        std::vector<int> s;
        for (int b = 0; b < 7; b++) {
            if (mask >> b & 1) s.push_back(b + 2);
        }
        subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto &s : subsets) {
        Line::Coords c;
        c.fill(1);
        for (int p : s) c[static_cast<std::size_t>(p - 1)] = -1;
        lines.emplace_back(c);
    }
    return lines;
}

int line_index(std::span<const Line> lines, const Line &x) {
    auto it = std::find(lines.begin(), lines.end(), x);
    if (it == lines.end()) throw std::invalid_argument("line " + x.label() + " is not in the line list");
    return static_cast<int>(it - lines.begin());
}

Graph build_orthogonality_graph(std::span<const Line> lines) {
    return Graph::from_predicate(static_cast<int>(lines.size()), [&](int u, int v) {
        return inner(lines[static_cast<std::size_t>(u)], lines[static_cast<std::size_t>(v)]) == 0;
    });
}

std::vector<Line> distinguished_cell_members() {
    std::vector<Line> out;
    for (int j = 2; j <= 8; j++) out.push_back(Line::e(1, +1, j));
    for (int j = 2; j <= 8; j++) out.push_back(Line::x({1, j}));
    out.push_back(Line::x({}));
    return out;
}

std::vector<int> line_permutation(std::span<const Line> lines, const GroupElementL &g) {
    std::vector<int> perm;
    perm.reserve(lines.size());
    for (const auto &x : lines) perm.push_back(line_index(lines, act_on_line(g, x)));
    return perm;
}

OrbitPartition compute_orbits(std::span<const Line> lines) {
    const int n = static_cast<int>(lines.size());
    const auto group = enumerate_L();
    std::vector<int> orbit_id(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; v++) {
        if (orbit_id[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> orbit;
        for (const auto &g : group) {
            int u = line_index(lines, act_on_line(g, lines[static_cast<std::size_t>(v)]));
            if (orbit_id[static_cast<std::size_t>(u)] < 0) {
                orbit_id[static_cast<std::size_t>(u)] = static_cast<int>(orbits.size());
                orbit.push_back(u);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    if (orbits.size() != 15) {
        throw VerificationError("L has " + std::to_string(orbits.size()) + " orbits on the lines, expected 15");
    }
    for (const auto &o : orbits) {
        if (o.size() != 8) throw VerificationError("L-orbit of size " + std::to_string(o.size()) + ", expected 8");
    }

    OrbitPartition p;
    p.cell_of.assign(static_cast<std::size_t>(n), -1);
    for (const auto &member : distinguished_cell_members()) {
        int id = orbit_id[static_cast<std::size_t>(line_index(lines, member))];
        auto &cell = orbits[static_cast<std::size_t>(id)];
        if (cell.empty()) throw VerificationError("two distinguished members share the orbit of " + member.label());
        for (int v : cell) p.cell_of[static_cast<std::size_t>(v)] = p.cell_count();
        p.cells.push_back(std::move(cell));
        cell.clear();
    }
    return p;
}

OrbitPartition partition_from_cells(std::vector<std::vector<int>> cells, int n) {
    OrbitPartition p;
    p.cell_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < cells.size(); c++) {
        std::sort(cells[c].begin(), cells[c].end());
        for (int v : cells[c]) {
            if (v < 0 || v >= n) throw std::invalid_argument("cell vertex " + std::to_string(v) + " out of range");
            if (p.cell_of[static_cast<std::size_t>(v)] >= 0) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two cells");
            }
            p.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; v++) {
        if (p.cell_of[static_cast<std::size_t>(v)] < 0) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no cell");
        }
    }
    p.cells = std::move(cells);
    return p;
}

std::vector<GroupElementL> stabilizer(const Line &x) {
    std::vector<GroupElementL> out;
    for (const auto &g : enumerate_L()) {
        if (act_on_line(g, x) == x) out.push_back(g);
    }
    return out;
}

std::vector<std::vector<Line>> reference_orbit_table() {
    auto pairs = [](std::initializer_list<std::pair<int, int>> ps) {
        std::vector<Line> row;
        for (auto [i, j] : ps) {
            row.push_back(Line::e(i, +1, j));
            row.push_back(Line::e(i, -1, j));
        }
        return row;
    };
    using X = std::initializer_list<int>;
    auto xs = [](std::initializer_list<X> sets) {
        std::vector<Line> row;
        for (const auto &s : sets) row.push_back(Line::x(s));
        return row;
    };
    return {
        pairs({{1, 2}, {3, 4}, {5, 6}, {7, 8}}),
        pairs({{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
        pairs({{1, 4}, {2, 3}, {5, 8}, {6, 7}}),
        pairs({{1, 5}, {2, 6}, {3, 7}, {4, 8}}),
        pairs({{1, 6}, {2, 5}, {3, 8}, {4, 7}}),
        pairs({{1, 7}, {2, 8}, {3, 5}, {4, 6}}),
        pairs({{1, 8}, {2, 7}, {3, 6}, {4, 5}}),
        xs({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {1, 4, 6, 8}, {2, 3, 6, 8}, {2, 4, 5, 8}, {2, 4, 6, 7}}),
        xs({{1, 3}, {2, 4}, {5, 7}, {6, 8}, {1, 4, 7, 8}, {1, 4, 5, 6}, {1, 2, 6, 7}, {1, 2, 5, 8}}),
        xs({{1, 4}, {2, 3}, {5, 8}, {6, 7}, {1, 3, 7, 8}, {1, 3, 5, 6}, {1, 2, 5, 7}, {1, 2, 6, 8}}),
        xs({{1, 5}, {2, 6}, {3, 7}, {4, 8}, {1, 6, 7, 8}, {2, 5, 7, 8}, {4, 5, 6, 7}, {1, 2, 4, 7}}),
        xs({{1, 6}, {2, 5}, {3, 8}, {4, 7}, {1, 5, 7, 8}, {2, 6, 7, 8}, {3, 5, 6, 7}, {4, 5, 6, 8}}),
        xs({{1, 7}, {2, 8}, {3, 5}, {4, 6}, {1, 5, 6, 8}, {3, 6, 7, 8}, {2, 5, 6, 7}, {4, 5, 7, 8}}),
        xs({{1, 8}, {2, 7}, {3, 6}, {4, 5}, {1, 5, 6, 7}, {4, 6, 7, 8}, {2, 5, 6, 8}, {3, 5, 7, 8}}),
        xs({{}, {5, 6, 7, 8}, {3, 4, 7, 8}, {2, 4, 6, 8}, {3, 4, 5, 6}, {2, 4, 5, 7}, {2, 3, 6, 7}, {2, 3, 5, 8}}),
    };
}

std::vector<std::array<GroupElementL, 3>> reference_stabilizer_generators() {
    static constexpr const char *kTable[15][3] = {
        {"IIX", "IZI", "ZII"}, {"ZII", "IXI", "IIZ"}, {"ZII", "IXX", "IZZ"}, {"XII", "IIZ", "IZI"},
        {"XIX", "IZI", "ZIZ"}, {"XXI", "IIZ", "ZZI"}, {"XXX", "ZZI", "IZZ"}, {"IIX", "ZXI", "XZI"},
        {"IXI", "ZIX", "XIZ"}, {"IXX", "ZXI", "XZZ"}, {"XII", "IXZ", "IZX"}, {"XIX", "IZX", "ZXZ"},
        {"XXI", "IXZ", "ZZX"}, {"XXX", "ZZX", "XZZ"}, {"XII", "IXI", "IIX"},
    };
    std::vector<std::array<GroupElementL, 3>> out;
    for (const auto &row : kTable) {
        out.push_back({GroupElementL::parse(row[0]), GroupElementL::parse(row[1]), GroupElementL::parse(row[2])});
    }
    return out;
}

WChoice WChoice::standard() {
    WChoice w;
    for (int j = 2; j <= 8; j++) w.reps.push_back(Line::e(1, -1, j));
    for (int j = 2; j <= 8; j++) w.reps.push_back(Line::x({1, j}));
    w.reps.push_back(Line::x({}));
    return w;
}

void validate_wchoice(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w) {
    if (static_cast<int>(w.reps.size()) != partition.cell_count()) {
        throw std::invalid_argument("w choice has " + std::to_string(w.reps.size()) + " representatives for " +
                                    std::to_string(partition.cell_count()) + " cells");
    }
    for (int i = 0; i < partition.cell_count(); i++) {
        const Line &rep = w.reps[static_cast<std::size_t>(i)];
        int v = line_index(lines, rep);
        if (partition.cell_of[static_cast<std::size_t>(v)] != i) {
            throw std::invalid_argument("representative " + rep.label() + " is not in cell V" + std::to_string(i + 1));
        }
    }
}

std::vector<std::pair<int, int>> flipped_cell_pairs(const WChoice &w) {
    std::vector<std::pair<int, int>> out;
    const int m = static_cast<int>(w.reps.size());
    for (int i = 0; i < m; i++) {
        for (int j = i + 1; j < m; j++) {
            if (inner(w.reps[static_cast<std::size_t>(i)], w.reps[static_cast<std::size_t>(j)]) == 0) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

Graph build_Gw(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w) {
    validate_wchoice(lines, partition, w);
    return Graph::from_predicate(static_cast<int>(lines.size()), [&](int s, int t) {
        bool orthogonal = inner(lines[static_cast<std::size_t>(s)], lines[static_cast<std::size_t>(t)]) == 0;
        int i = partition.cell_of[static_cast<std::size_t>(s)];
        int j = partition.cell_of[static_cast<std::size_t>(t)];
        if (i == j) return orthogonal;
        bool flipped = inner(w.reps[static_cast<std::size_t>(i)], w.reps[static_cast<std::size_t>(j)]) == 0;
        return flipped ? !orthogonal : orthogonal;
    });
}

std::vector<int> gw_choice_isomorphism(std::span<const Line> lines, const OrbitPartition &partition,
                                       const WChoice &w1, const WChoice &w2) {
    validate_wchoice(lines, partition, w1);
    validate_wchoice(lines, partition, w2);
    std::vector<GroupElementL> movers;
    for (int i = 0; i < partition.cell_count(); i++) {
        movers.push_back(find_transporter(w1.reps[static_cast<std::size_t>(i)], w2.reps[static_cast<std::size_t>(i)]).element);
    }
    std::vector<int> map(lines.size());
    for (std::size_t v = 0; v < lines.size(); v++) {
        int i = partition.cell_of[v];
        map[v] = line_index(lines, act_on_line(movers[static_cast<std::size_t>(i)], lines[v]));
        if (partition.cell_of[static_cast<std::size_t>(map[v])] != i) {
            throw VerificationError("choice isomorphism leaves cell V" + std::to_string(i + 1));
        }
    }
    Graph g1 = build_Gw(lines, partition, w1);
    Graph g2 = build_Gw(lines, partition, w2);
    if (!is_isomorphism(g1, g2, map)) {
        throw VerificationError("transporter relabelling is not an isomorphism between the two G^w graphs");
    }
    return map;
}

}  // namespace qiso
