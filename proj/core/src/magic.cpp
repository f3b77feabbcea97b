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


#include "qiso/magic.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "qiso/errors.hpp"
#include "qiso/parallel.hpp"
#include "qiso/transporter.hpp"

namespace qiso {

namespace {

using Accumulator = std::vector<mpq_class>;

void accumulate(Accumulator &acc, const RationalMatrix &m) {
    auto e = m.entries();
    for (std::size_t k = 0; k < acc.size(); k++) acc[k] += e[k].raw();
}

bool equals(const Accumulator &a, const Accumulator &b) {
    for (std::size_t k = 0; k < a.size(); k++) {
        if (a[k] != b[k]) return false;
    }
    return true;
}

bool is_identity(const Accumulator &acc, std::size_t dim) {
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            if (acc[r * dim + c] != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

std::string cell_entry(int i, int a, int b) {
    return "block V" + std::to_string(i + 1) + " entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_sizes(const MagicUnitary &u, const Graph &g1, const Graph &g2) {
    const int n = u.partition.vertex_count();
    if (g1.n() != n || g2.n() != n) {
        throw DimensionError("graphs on " + std::to_string(g1.n()) + " and " + std::to_string(g2.n()) +
                             " vertices do not match a magic unitary on " + std::to_string(n) + " vertices");
    }
}

}  // namespace

int MagicUnitary::position(int v) const {
    const auto &cell = partition.cells[static_cast<std::size_t>(partition.cell_of[static_cast<std::size_t>(v)])];
    return static_cast<int>(std::find(cell.begin(), cell.end(), v) - cell.begin());
}

MagicUnitary MagicUnitary::identity(const OrbitPartition &partition, std::size_t dim) {
    MagicUnitary u;
    u.partition = partition;
    u.dim = dim;
    for (int i = 0; i < partition.cell_count(); i++) {
        const int m = static_cast<int>(partition.cells[static_cast<std::size_t>(i)].size());
        std::vector<RationalMatrix> block;
        for (int a = 0; a < m; a++) {
            for (int b = 0; b < m; b++) {
                block.push_back(a == b ? RationalMatrix::identity(dim) : RationalMatrix::zero(dim, dim));
            }
        }
        u.blocks.push_back(std::move(block));
    }
    return u;
}

RationalMatrix line_projection(const Line &x) {
    std::array<long, 8> v{};
    for (int k = 0; k < 8; k++) v[static_cast<std::size_t>(k)] = x[k];
    return RationalMatrix::projection_onto(v);
}

MagicUnitary build_magic_unitary(std::span<const Line> lines, const OrbitPartition &partition, const WChoice &w) {
    validate_wchoice(lines, partition, w);
    MagicUnitary u;
    u.partition = partition;
    u.w = w;
    u.dim = 8;
    for (int i = 0; i < partition.cell_count(); i++) {
        const auto &cell = partition.cells[static_cast<std::size_t>(i)];
        const Line &rep = w.reps[static_cast<std::size_t>(i)];
        std::vector<RationalMatrix> block;
        std::vector<GroupElementL> movers;
        for (int y : cell) {
            for (int z : cell) {
                Transporter m = find_transporter(lines[static_cast<std::size_t>(y)], lines[static_cast<std::size_t>(z)]);
                block.push_back(line_projection(act_on_line(m.element, rep)));
                movers.push_back(m.element);
            }
        }
        u.blocks.push_back(std::move(block));
        u.transporters.push_back(std::move(movers));
    }
    auto report = verify_magic_axioms(u);
    for (const auto *check : {&report.projections, &report.row_sums, &report.column_sums}) {
        if (!check->passed()) throw VerificationError(check->name + " failed at " + check->failures.front());
    }
    return u;
}

MagicAxiomsReport verify_magic_axioms(const MagicUnitary &u) {
    MagicAxiomsReport report;
    const std::size_t cells = static_cast<std::size_t>(u.partition.cell_count());
    std::vector<MagicAxiomsReport> per_cell(cells);
    parallel_for(cells, [&](std::size_t ci) {
        const int i = static_cast<int>(ci);
        const int m = u.cell_size(i);
        auto &r = per_cell[ci];
        for (int a = 0; a < m; a++) {
            for (int b = 0; b < m; b++) {
                r.projections.record(mat_is_projection(u.entry(i, a, b)), [&] { return cell_entry(i, a, b); });
            }
        }
        for (int a = 0; a < m; a++) {
            Accumulator row(u.dim * u.dim), col(u.dim * u.dim);
            for (int b = 0; b < m; b++) {
                accumulate(row, u.entry(i, a, b));
                accumulate(col, u.entry(i, b, a));
            }
            r.row_sums.record(is_identity(row, u.dim), [&] { return "block V" + std::to_string(i + 1) + " row " + std::to_string(a); });
            r.column_sums.record(is_identity(col, u.dim),
                                 [&] { return "block V" + std::to_string(i + 1) + " column " + std::to_string(a); });
        }
    });
    for (const auto &r : per_cell) {
        report.projections.merge(r.projections);
        report.row_sums.merge(r.row_sums);
        report.column_sums.merge(r.column_sums);
    }
    return report;
}

CheckReport intertwiner_report(const MagicUnitary &u, const Graph &g1, const Graph &g2) {
    check_sizes(u, g1, g2);
    const int n = g1.n();
    const std::size_t area = u.dim * u.dim;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; v++) pos[static_cast<std::size_t>(v)] = u.position(v);
    std::vector<CheckReport> rows(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t sr) {
        const int s = static_cast<int>(sr);
        const int cs = u.partition.cell_of[sr];
        const auto &cell_s = u.partition.cells[static_cast<std::size_t>(cs)];
        for (int t = 0; t < n; t++) {
            const int ct = u.partition.cell_of[static_cast<std::size_t>(t)];
            const auto &cell_t = u.partition.cells[static_cast<std::size_t>(ct)];
            // (A1 u)_{st} = sum over c in cell(t) of A1(s,c) u_{ct}; (u A2)_{st} = sum over c in cell(s) of u_{sc} A2(c,t).
            Accumulator left(area), right(area);
            for (int c : cell_t) {
                if (g1.adjacent(s, c)) accumulate(left, u.entry(ct, pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(t)]));
            }
            for (int c : cell_s) {
                if (g2.adjacent(c, t)) accumulate(right, u.entry(cs, pos[sr], pos[static_cast<std::size_t>(c)]));
            }
            rows[sr].record(equals(left, right), [&] {
                return "(A1 u) and (u A2) differ at vertex pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
            });
        }
    });
    CheckReport report{"A1 u = u A2"};
    for (const auto &r : rows) report.merge(r);
    return report;
}

bool verify_intertwiner(const MagicUnitary &u, const Graph &g1, const Graph &g2) {
    return intertwiner_report(u, g1, g2).passed();
}

ProductRelationsReport verify_product_relations(const MagicUnitary &u, const Graph &g1, const Graph &g2) {
    check_sizes(u, g1, g2);
    const auto start = std::chrono::steady_clock::now();
    const int n = g1.n();
    const int cells = u.partition.cell_count();
    const bool structured = u.w.has_value();

    std::vector<int> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    if (structured) {
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                auto d = distance(g1, a, b);
                dist[static_cast<std::size_t>(a * n + b)] = d ? *d : -1;
            }
        }
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < cells; i++) {
        for (int j = 0; j < cells; j++) {
            if (i != j) pairs.emplace_back(i, j);
        }
    }
    std::vector<ProductRelationsReport> partial(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        auto [i, j] = pairs[p];
        auto &r = partial[p];
        const auto &ci = u.partition.cells[static_cast<std::size_t>(i)];
        const auto &cj = u.partition.cells[static_cast<std::size_t>(j)];
        const bool flipped = structured && inner(u.w->reps[static_cast<std::size_t>(i)], u.w->reps[static_cast<std::size_t>(j)]) == 0;
        for (std::size_t a = 0; a < ci.size(); a++) {
            for (std::size_t b = 0; b < ci.size(); b++) {
                const int k = ci[a], s = ci[b];
                const auto &left = u.entry(i, static_cast<int>(a), static_cast<int>(b));
                for (std::size_t c = 0; c < cj.size(); c++) {
                    int zeros = 0;
                    for (std::size_t d = 0; d < cj.size(); d++) {
                        const int l = cj[c], t = cj[d];
                        RationalMatrix prod = mat_mul(left, u.entry(j, static_cast<int>(c), static_cast<int>(d)));
                        const bool zero = prod.is_zero();
                        zeros += zero;
                        auto where = [&] {
                            return "k=" + std::to_string(k) + " s=" + std::to_string(s) + " l=" + std::to_string(l) +
                                   " t=" + std::to_string(t);
                        };
                        r.zero_pattern.record(zero == (g1.adjacent(k, l) != g2.adjacent(s, t)), where);
                        bool small = std::all_of(prod.entries().begin(), prod.entries().end(), [](const Rational &x) {
                            return x.denominator() <= 64 && 64 % x.denominator().get_ui() == 0;
                        });
                        r.denominators.record(small, where);
                        if (structured) {
                            const int dkl = dist[static_cast<std::size_t>(k * n + l)];
                            const int dst = dist[static_cast<std::size_t>(s * n + t)];
                            r.distance_dichotomy.record(zero == (flipped ? dkl == dst : dkl != dst), where);
                        }
                    }
                    if (structured) {
                        r.four_zero.record(zeros == 4, [&] {
                            return "k=" + std::to_string(k) + " s=" + std::to_string(s) + " l=" + std::to_string(cj[c]) +
                                   " has " + std::to_string(zeros) + " zero products";
                        });
                    }
                }
            }
        }
    });
    ProductRelationsReport report;
    for (const auto &r : partial) {
        report.zero_pattern.merge(r.zero_pattern);
        report.denominators.merge(r.denominators);
        report.four_zero.merge(r.four_zero);
        report.distance_dichotomy.merge(r.distance_dichotomy);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SubPair induced_subpair(const Graph &g1, const Graph &g2, const MagicUnitary &u, std::span<const int> cells) {
    std::set<int> chosen(cells.begin(), cells.end());
    if (chosen.size() != cells.size()) throw std::invalid_argument("induced_subpair: repeated cell label");
    if (chosen.size() < 9) {
        throw std::invalid_argument("induced_subpair: need at least 9 cells, got " + std::to_string(chosen.size()));
    }
    for (int c : chosen) {
        if (c < 1 || c > u.partition.cell_count()) {
            throw std::invalid_argument("induced_subpair: cell label " + std::to_string(c) + " out of range");
        }
    }
    SubPair out;
    std::vector<std::vector<int>> sub_cells;
    for (int c : chosen) {
        std::vector<int> cell;
        for (int v : u.partition.cells[static_cast<std::size_t>(c - 1)]) {
            cell.push_back(static_cast<int>(out.vertices.size()));
            out.vertices.push_back(v);
        }
        sub_cells.push_back(std::move(cell));
    }
    out.g1 = g1.induced(out.vertices);
    out.g2 = g2.induced(out.vertices);
    out.u.partition = partition_from_cells(std::move(sub_cells), static_cast<int>(out.vertices.size()));
    out.u.dim = u.dim;
    if (u.w) out.u.w = WChoice{};
    for (int c : chosen) {
        out.u.blocks.push_back(u.blocks[static_cast<std::size_t>(c - 1)]);
        if (!u.transporters.empty()) out.u.transporters.push_back(u.transporters[static_cast<std::size_t>(c - 1)]);
        if (u.w) out.u.w->reps.push_back(u.w->reps[static_cast<std::size_t>(c - 1)]);
    }
    return out;
}

std::optional<std::array<int, 3>> projection_sign_pattern(const Line &x, const std::array<GroupElementL, 3> &gens) {
    const RationalMatrix target = line_projection(x);
    const RationalMatrix id = RationalMatrix::identity(8);
    for (int mask = 0; mask < 8; mask++) {
        std::array<int, 3> signs{};
        RationalMatrix product = id.scaled(Rational(1, 8));
        for (int k = 0; k < 3; k++) {
            signs[static_cast<std::size_t>(k)] = (mask >> k & 1) ? -1 : +1;
            RationalMatrix n = word_matrix(gens[static_cast<std::size_t>(k)].word()).scaled(signs[static_cast<std::size_t>(k)]);
            product = mat_mul(product, mat_add(id, n));
        }
        if (product == target) return signs;
    }
    return std::nullopt;
}

}  // namespace qiso
