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


#include "suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "qiso/gamma1.hpp"
#include "qiso/independence.hpp"
#include "qiso/isomorphism.hpp"
#include "qiso/magic.hpp"
#include "qiso/polynomial.hpp"
#include "qiso/switching.hpp"
#include "qiso/transporter.hpp"

namespace qiso::cli {

namespace {

using nlohmann::json;

const SrgParameters kE8{120, 63, 30, 36};
const SrgParameters kGamma1{120, 56, 28, 24};

json srg_json(const std::optional<SrgParameters> &p) {
    if (!p) return nullptr;
    return json::array({p->n, p->k, p->lambda, p->mu});
}

json report_json(const CheckReport &r) {
    return {{"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

bool record(json &d, const CheckReport &r) {
    d = report_json(r);
    return r.passed();
}

std::vector<std::string> labels(std::span<const Line> lines, std::span<const int> vertices) {
    std::vector<std::string> out;
    for (int v : vertices) out.push_back(lines[static_cast<std::size_t>(v)].label());
    return out;
}

std::vector<int> rep_vertices(const SuiteInputs &in) {
    std::vector<int> out;
    for (const auto &x : in.w.reps) out.push_back(line_index(in.lines, x));
    return out;
}

/// Characteristic polynomial predicted from SRG parameters: eigenvalues k, r, s with the
/// standard multiplicities.
std::optional<IntPolynomial> srg_char_poly(const SrgParameters &p) {
    const long b = p.lambda - p.mu, c = p.k - p.mu;
    const long disc = b * b + 4 * c;
    long root = 0;
    while ((root + 1) * (root + 1) <= disc) root++;
    if (root * root != disc || (b + root) % 2 != 0) return std::nullopt;
    const long r = (b + root) / 2, s = (b - root) / 2;
    // f + g = n - 1 and k + f r + g s = 0.
    const long num = -(p.k + (p.n - 1) * s);
    if (num % (r - s) != 0) return std::nullopt;
    const long f = num / (r - s), g = p.n - 1 - f;
    return IntPolynomial::linear(p.k) * IntPolynomial::linear(r).pow(static_cast<unsigned>(f)) *
           IntPolynomial::linear(s).pow(static_cast<unsigned>(g));
}

// ---------------------------------------------------------------------------------------------

void srg_suite(const SuiteInputs &in, Certificate &cert) {
    cert.run("srg.e8", "the root-line orthogonality graph is SRG(120,63,30,36)", [&](json &d) {
        auto p = srg_parameters(in.e8);
        d["parameters"] = srg_json(p);
        return p == kE8;
    });
    cert.run("srg.gw", "the edge-flipped graph is SRG(120,63,30,36)", [&](json &d) {
        auto p = srg_parameters(in.gw);
        d["parameters"] = srg_json(p);
        return p == kE8;
    });
    cert.run("srg.complement", "complements have the parameters predicted from (120,63,30,36)", [&](json &d) {
        auto a = srg_parameters(in.e8.complement()), b = srg_parameters(in.gw.complement());
        d["e8"] = srg_json(a);
        d["gw"] = srg_json(b);
        return a == complement_parameters(kE8) && b == complement_parameters(kE8);
    });
    cert.run("srg.e8_spectrum", "char(A_e8) = (x-63)(x-3)^84(x+9)^35, from the parameters", [&](json &d) {
        auto expected = srg_char_poly(kE8);
        auto actual = char_poly(in.e8.adjacency_matrix());
        d["char_poly"] = actual.str();
        return expected && actual == *expected;
    });
    cert.run("srg.cospectral", "the two graphs have equal characteristic polynomials", [&](json &d) {
        bool same = cospectral(in.e8, in.gw);
        d["equal"] = same;
        return same;
    });
}

void orbits_suite(const SuiteInputs &in, Certificate &cert) {
    const auto group = enumerate_L();
    cert.run("orbits.group", "L has 64 elements, is closed, abelian and of exponent 2 modulo sign", [&](json &d) {
        std::set<unsigned> elements;
        for (const auto &g : group) elements.insert(g.bits());
        bool closed = true, abelian = true, exponent2 = true;
        for (const auto &a : group) {
            exponent2 &= (a * a).is_identity();
            for (const auto &b : group) {
                closed &= elements.count((a * b).bits()) > 0;
                abelian &= word_mul(a.word(), b.word()).letters == word_mul(b.word(), a.word()).letters;
            }
        }
        d = {{"order", group.size()}, {"closed", closed}, {"abelian", abelian}, {"exponent_2", exponent2}};
        return group.size() == 64 && elements.size() == 64 && closed && abelian && exponent2;
    });
    cert.run("orbits.automorphisms", "every element of L is an automorphism of both graphs", [&](json &d) {
        CheckReport r;
        for (const auto &g : group) {
            auto perm = line_permutation(in.lines, g);
            r.record(is_automorphism(in.e8, perm), [&] { return g.str() + " on e8"; });
            r.record(is_automorphism(in.gw, perm), [&] { return g.str() + " on gw"; });
        }
        return record(d, r);
    });
    cert.run("orbits.cells_are_orbits", "the cells in use are exactly the 15 orbits of L, each of size 8", [&](json &d) {
        OrbitPartition computed = compute_orbits(in.lines);
        CheckReport r;
        for (int i = 0; i < computed.cell_count(); i++) {
            const auto &mine = i < in.cells.cell_count() ? in.cells.cells[static_cast<std::size_t>(i)] : std::vector<int>{};
            r.record(mine == computed.cells[static_cast<std::size_t>(i)], [&] {
                return "V" + std::to_string(i + 1) + " given " + json(mine).dump() + ", orbit " +
                       json(computed.cells[static_cast<std::size_t>(i)]).dump();
            });
        }
        d = report_json(r);
        d["cell_count"] = in.cells.cell_count();
        return r.passed() && in.cells.cell_count() == computed.cell_count();
    });
    cert.run("orbits.cliques", "each cell is an 8-clique of pairwise orthogonal lines", [&](json &d) {
        CheckReport r;
        for (int i = 0; i < in.cells.cell_count(); i++) {
            const auto &cell = in.cells.cells[static_cast<std::size_t>(i)];
            bool orth = true;
            for (int a : cell) {
                for (int b : cell) {
                    if (a != b) orth &= inner(in.lines[static_cast<std::size_t>(a)], in.lines[static_cast<std::size_t>(b)]) == 0;
                }
            }
            r.record(cell.size() == 8 && is_clique(in.e8, cell) && orth, [&] { return "V" + std::to_string(i + 1); });
        }
        return record(d, r);
    });
    cert.run("orbits.table", "computed orbits agree with the reference orbit listing", [&](json &d) {
        OrbitPartition computed = compute_orbits(in.lines);
        auto table = reference_orbit_table();
        CheckReport r;
        for (std::size_t i = 0; i < table.size(); i++) {
            std::set<int> listed;
            for (const auto &x : table[i]) listed.insert(line_index(in.lines, x));
            std::set<int> orbit(computed.cells[i].begin(), computed.cells[i].end());
            r.record(listed == orbit, [&] {
                std::vector<int> only_listed, only_orbit;
                std::set_difference(listed.begin(), listed.end(), orbit.begin(), orbit.end(), std::back_inserter(only_listed));
                std::set_difference(orbit.begin(), orbit.end(), listed.begin(), listed.end(), std::back_inserter(only_orbit));
                return "V" + std::to_string(i + 1) + ": listed only " + json(labels(in.lines, only_listed)).dump() +
                       ", computed only " + json(labels(in.lines, only_orbit)).dump();
            });
        }
        return record(d, r);
    });
    cert.run("orbits.stabilizers", "stabilizers have order 8, are constant on cells and match the reference generators",
             [&](json &d) {
                 auto gens = reference_stabilizer_generators();
                 CheckReport r;
                 for (int i = 0; i < in.cells.cell_count(); i++) {
                     const auto &cell = in.cells.cells[static_cast<std::size_t>(i)];
                     auto stab = stabilizer(in.lines[static_cast<std::size_t>(cell.front())]);
                     std::set<unsigned> generated{0};
                     for (const auto &g : gens[static_cast<std::size_t>(i)]) {
                         std::set<unsigned> next = generated;
                         for (unsigned x : generated) next.insert(x ^ g.bits());
                         generated = next;
                     }
                     std::set<unsigned> actual;
                     for (const auto &g : stab) actual.insert(g.bits());
                     bool constant = true;
                     for (int v : cell) constant &= stabilizer(in.lines[static_cast<std::size_t>(v)]) == stab;
                     r.record(stab.size() == 8 && constant && generated == actual,
                              [&] { return "V" + std::to_string(i + 1); });
                 }
                 return record(d, r);
             });
    cert.run("orbits.stabilizer_intersections", "distinct cells have stabilizers meeting in exactly 2 elements", [&](json &d) {
        CheckReport r;
        std::vector<std::vector<GroupElementL>> stabs;
        for (const auto &cell : in.cells.cells) stabs.push_back(stabilizer(in.lines[static_cast<std::size_t>(cell.front())]));
        for (std::size_t i = 0; i < stabs.size(); i++) {
            for (std::size_t j = i + 1; j < stabs.size(); j++) {
                std::size_t common = 0;
                for (const auto &g : stabs[i]) common += std::count(stabs[j].begin(), stabs[j].end(), g);
                r.record(common == 2, [&] { return "V" + std::to_string(i + 1) + ",V" + std::to_string(j + 1) + ": " + std::to_string(common); });
            }
        }
        return record(d, r);
    });
    cert.run("orbits.projection_identity", "every P_x is (1/8)(1+-N1)(1+-N2)(1+-N3) over its stabilizer generators",
             [&](json &d) {
                 auto gens = reference_stabilizer_generators();
                 CheckReport r;
                 for (std::size_t v = 0; v < in.lines.size(); v++) {
                     const int i = in.cells.cell_of[v];
                     r.record(projection_sign_pattern(in.lines[v], gens[static_cast<std::size_t>(i)]).has_value(),
                              [&] { return in.lines[v].label(); });
                 }
                 return record(d, r);
             });
    cert.run("orbits.four_neighbours", "every vertex has exactly 4 neighbours in each other cell of the e8 graph", [&](json &d) {
        CheckReport r;
        for (int v = 0; v < in.e8.n(); v++) {
            for (int j = 0; j < in.cells.cell_count(); j++) {
                if (in.cells.cell_of[static_cast<std::size_t>(v)] == j) continue;
                int k = 0;
                for (int u : in.cells.cells[static_cast<std::size_t>(j)]) k += in.e8.adjacent(v, u);
                r.record(k == 4, [&] { return "vertex " + std::to_string(v) + " in V" + std::to_string(j + 1) + ": " + std::to_string(k); });
            }
        }
        return record(d, r);
    });
    cert.run("orbits.flipped_pairs", "the standard choice flips exactly the 14 pairs (e1-ej, x{1,j}) and (e1-ej, x{})", [&](json &d) {
        auto pairs = flipped_cell_pairs(in.w);
        std::set<std::pair<int, int>> expected;
        for (int j = 0; j < 7; j++) {
            expected.emplace(j, 7 + j);
            expected.emplace(j, 14);
        }
        json list = json::array();
        for (auto [a, b] : pairs) list.push_back({a + 1, b + 1});
        d["pairs"] = list;
        return std::set<std::pair<int, int>>(pairs.begin(), pairs.end()) == expected;
    });
    cert.run("orbits.nonedge_criterion",
             "across cells, (x, y) is a non-edge of gw iff some g in L maps (w_i, w_j) to (x, y)", [&](json &d) {
                 std::set<std::pair<int, int>> images;
                 auto reps = rep_vertices(in);
                 for (const auto &g : group) {
                     auto perm = line_permutation(in.lines, g);
                     for (std::size_t i = 0; i < reps.size(); i++) {
                         for (std::size_t j = 0; j < reps.size(); j++) {
                             if (i != j) images.emplace(perm[static_cast<std::size_t>(reps[i])], perm[static_cast<std::size_t>(reps[j])]);
                         }
                     }
                 }
                 CheckReport r;
                 for (int x = 0; x < in.gw.n(); x++) {
                     for (int y = 0; y < in.gw.n(); y++) {
                         if (in.cells.cell_of[static_cast<std::size_t>(x)] == in.cells.cell_of[static_cast<std::size_t>(y)]) continue;
                         r.record(!in.gw.adjacent(x, y) == (images.count({x, y}) > 0),
                                  [&] { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; });
                     }
                 }
                 return record(d, r);
             });
}

void magic_suite(const SuiteInputs &in, Certificate &cert) {
    cert.run("magic.axioms", "all 960 entries are projections and every block row and column sums to I8", [&](json &d) {
        auto r = verify_magic_axioms(in.magic());
        d["projections"] = report_json(r.projections);
        d["row_sums"] = report_json(r.row_sums);
        d["column_sums"] = report_json(r.column_sums);
        return r.passed() && r.projections.checked == 960 && r.row_sums.checked == 120;
    });
    cert.run("magic.conjugation", "each entry equals M P_w M^T and P_{M w} for its transporter M", [&](json &d) {
        const auto &u = in.magic();
        if (u.transporters.empty() || !u.w) throw std::invalid_argument("unitary carries no transporters");
        CheckReport r;
        for (int i = 0; i < u.partition.cell_count(); i++) {
            const Line &rep = u.w->reps[static_cast<std::size_t>(i)];
            const RationalMatrix pw = line_projection(rep);
            for (int a = 0; a < u.cell_size(i); a++) {
                for (int b = 0; b < u.cell_size(i); b++) {
                    const auto &g = u.transporters[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * u.cell_size(i) + b)];
                    RationalMatrix m = word_matrix(g.word());
                    const auto &y = in.lines[static_cast<std::size_t>(u.partition.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)])];
                    const auto &z = in.lines[static_cast<std::size_t>(u.partition.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)])];
                    bool ok = act_on_line(g, y) == z && mat_mul(mat_mul(m, pw), m.transpose()) == u.entry(i, a, b) &&
                              line_projection(act_on_line(g, rep)) == u.entry(i, a, b);
                    r.record(ok, [&] { return "V" + std::to_string(i + 1) + " (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
                }
            }
        }
        return record(d, r);
    });
    cert.run("magic.transporter_cosets", "transporters y -> z form a coset of the stabilizer and all give the same entry",
             [&](json &d) {
                 const auto &u = in.magic();
                 if (!u.w) throw std::invalid_argument("unitary carries no representatives");
                 CheckReport r;
                 for (int i = 0; i < u.partition.cell_count(); i++) {
                     const auto &cell = u.partition.cells[static_cast<std::size_t>(i)];
                     const Line &rep = u.w->reps[static_cast<std::size_t>(i)];
                     for (int a = 0; a < u.cell_size(i); a++) {
                         const Line &y = in.lines[static_cast<std::size_t>(cell[static_cast<std::size_t>(a)])];
                         auto stab = stabilizer(y);
                         for (int b = 0; b < u.cell_size(i); b++) {
                             const Line &z = in.lines[static_cast<std::size_t>(cell[static_cast<std::size_t>(b)])];
                             auto all = all_transporters(y, z);
                             std::set<unsigned> coset, found;
                             for (const auto &s : stab) coset.insert((all.front() * s).bits());
                             bool same_entry = true;
                             for (const auto &g : all) {
                                 found.insert(g.bits());
                                 same_entry &= line_projection(act_on_line(g, rep)) == u.entry(i, a, b);
                             }
                             r.record(all.size() == 8 && coset == found && same_entry,
                                      [&] { return "V" + std::to_string(i + 1) + " " + y.label() + " -> " + z.label(); });
                         }
                     }
                 }
                 return record(d, r);
             });
    auto products = std::make_shared<ProductRelationsReport>();
    cert.run("magic.product_zero_pattern",
             "for all 860160 cross-block quadruples, u_ks u_lt = 0 exactly when e8(k,l) and gw(s,t) disagree", [&](json &d) {
                 *products = verify_product_relations(in.magic(), in.e8, in.gw);
                 return record(d, products->zero_pattern) && products->zero_pattern.checked == 860160;
             });
    cert.run("magic.product_denominators", "every product entry has a denominator dividing 64",
             [&](json &d) { return record(d, products->denominators) && products->denominators.checked > 0; });
    cert.run("magic.four_zero", "each entry annihilates exactly four entries in each row of every other block",
             [&](json &d) { return record(d, products->four_zero) && products->four_zero.checked > 0; });
    cert.run("magic.distance_dichotomy",
             "zero products sit at equal e8 distances on flipped pairs and at unequal distances elsewhere",
             [&](json &d) { return record(d, products->distance_dichotomy) && products->distance_dichotomy.checked > 0; });
    cert.run("magic.edge_permutation", "pairs (k,l), (s,t) across two cells at equal distance are related by some g in L",
             [&](json &d) {
                 std::vector<std::vector<int>> perms;
                 for (const auto &g : enumerate_L()) perms.push_back(line_permutation(in.lines, g));
                 CheckReport r;
                 for (int k = 0; k < in.e8.n(); k++) {
                     for (int l = 0; l < in.e8.n(); l++) {
                         const int i = in.cells.cell_of[static_cast<std::size_t>(k)], j = in.cells.cell_of[static_cast<std::size_t>(l)];
                         if (i == j) continue;
                         std::set<std::pair<int, int>> images;
                         for (const auto &p : perms) images.emplace(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(l)]);
                         std::size_t targets = 0;
                         for (int s : in.cells.cells[static_cast<std::size_t>(i)]) {
                             for (int t : in.cells.cells[static_cast<std::size_t>(j)]) targets += in.e8.adjacent(s, t) == in.e8.adjacent(k, l);
                         }
                         bool ok = images.size() == targets;
                         for (auto [s, t] : images) ok &= in.e8.adjacent(s, t) == in.e8.adjacent(k, l);
                         r.record(ok, [&] { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
                     }
                 }
                 return record(d, r);
             });
}

std::vector<std::vector<int>> sampled_cell_sets(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> labels(15);
    for (int i = 0; i < 15; i++) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    for (int size : {9, 12}) {
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> t(labels.begin(), labels.begin() + size);
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    out.push_back({1, 2, 3, 4, 5, 6, 7, 8, 9});
    out.push_back(labels);
    std::sort(out.back().begin(), out.back().end());
    return out;
}

void intertwiner_suite(const SuiteInputs &in, Certificate &cert) {
    cert.run("intertwiner.e8_gw", "A_e8 u = u A_gw, compared exactly block by block", [&](json &d) {
        return record(d, intertwiner_report(in.magic(), in.e8, in.gw));
    });
    cert.run("intertwiner.control", "the same u does not intertwine e8 with itself", [&](json &d) {
        bool holds = verify_intertwiner(in.magic(), in.e8, in.e8);
        d["intertwines"] = holds;
        return !holds;
    });
    cert.run("intertwiner.identity", "the identity magic unitary intertwines each graph with itself", [&](json &d) {
        auto id = MagicUnitary::identity(in.cells, 1);
        bool ok = verify_intertwiner(id, in.e8, in.e8) && verify_intertwiner(id, in.gw, in.gw);
        d["intertwines"] = ok;
        return ok;
    });
    for (const auto &t : sampled_cell_sets(in.seed)) {
        const std::string name = "intertwiner.subpair_" + std::to_string(t.size()) + "_" + std::to_string(t.front()) + "_" +
                                 std::to_string(t.back());
        cert.run(name, "on a union of at least 9 cells the restricted pair is intertwined and alpha separates", [&](json &d) {
            SubPair sub = induced_subpair(in.e8, in.gw, in.magic(), t);
            auto a1 = independence_number(sub.g1, AlphaMode::exact);
            std::vector<int> reps;
            for (int label : t) reps.push_back(static_cast<int>(std::find(sub.vertices.begin(), sub.vertices.end(), line_index(in.lines, in.w.reps[static_cast<std::size_t>(label - 1)])) - sub.vertices.begin()));
            bool intertwined = verify_intertwiner(sub.u, sub.g1, sub.g2);
            bool witness = is_independent_set(sub.g2, reps);
            d = {{"cells", t}, {"intertwined", intertwined}, {"alpha_e8_side", a1.upper}, {"gw_side_independent_reps", witness}};
            return intertwined && a1.exact() && a1.upper <= 8 && witness && reps.size() == t.size();
        });
    }
}

void gamma1_suite(const SuiteInputs &in, Certificate &cert) {
    auto gamma1 = std::make_shared<Gamma1>();
    cert.run("gamma1.labels", "the stabilizer cosets give 120 distinct 8-word cliques", [&](json &d) {
        *gamma1 = build_gamma1(in.lines, in.cells);
        std::set<std::string> distinct;
        for (const auto &l : gamma1->labels) distinct.insert(l.str());
        d = {{"labels", gamma1->labels.size()}, {"distinct", distinct.size()}};
        return gamma1->labels.size() == 120 && distinct.size() == 120;
    });
    cert.run("gamma1.base_intersections", "base cliques C(i), C(j) share exactly two words; C(1) and C(2) share III and ZII",
             [&](json &d) {
                 auto bases = base_cliques(in.lines, in.cells);
                 CheckReport r;
                 for (std::size_t i = 0; i < bases.size(); i++) {
                     for (std::size_t j = i + 1; j < bases.size(); j++) {
                         std::size_t k = 0;
                         for (const auto &x : bases[i].words) k += std::count(bases[j].words.begin(), bases[j].words.end(), x);
                         r.record(k == 2, [&] { return std::to_string(i + 1) + "," + std::to_string(j + 1); });
                     }
                 }
                 std::vector<std::string> common;
                 for (const auto &x : bases[0].words) {
                     if (std::count(bases[1].words.begin(), bases[1].words.end(), x)) common.push_back(x.str());
                 }
                 d = report_json(r);
                 d["c1_c2"] = common;
                 return r.passed() && common == std::vector<std::string>{"III", "ZII"};
             });
    cert.run("gamma1.srg", "the coset graph is SRG(120,56,28,24)", [&](json &d) {
        auto p = srg_parameters(gamma1->graph);
        d["parameters"] = srg_json(p);
        return p == kGamma1;
    });
    cert.run("gamma1.witness", "v_x in V_i -> M_{w_i x} C(i) is an isomorphism from the complement of gw", [&](json &d) {
        auto map = gamma1_isomorphism_witness(in.lines, in.cells, in.w, in.gw, *gamma1);
        bool reps_to_bases = true;
        for (int i = 0; i < in.cells.cell_count(); i++) {
            reps_to_bases &= map[static_cast<std::size_t>(line_index(in.lines, in.w.reps[static_cast<std::size_t>(i)]))] == 8 * i;
        }
        d = {{"pairs_checked", 7140}, {"representatives_to_base_cliques", reps_to_bases}};
        return reps_to_bases;
    });
    cert.run("gamma1.vo6_model", "each coset is a clique of the even-Y graph on the 64 words, which is 35-regular and strongly regular",
             [&](json &d) {
                 auto group = enumerate_L();
                 Graph vo6 = Graph::from_predicate(64, [&](int a, int b) {
                     return vo6_adjacent(group[static_cast<std::size_t>(a)], group[static_cast<std::size_t>(b)]);
                 });
                 auto p = srg_parameters(vo6);
                 bool cliques = true;
                 for (const auto &l : gamma1->labels) {
                     for (const auto &x : l.words) {
                         for (const auto &y : l.words) cliques &= x == y || vo6_adjacent(x, y);
                     }
                 }
                 d = {{"parameters", srg_json(p)}, {"cosets_are_cliques", cliques}};
                 return p && p->k == 35 && cliques;
             });
    cert.run("gamma1.transvection", "t_v t_w with v = IYI, w = IIY maps C(1) onto C(2)", [&](json &d) {
        auto bases = base_cliques(in.lines, in.cells);
        auto v = GroupElementL::parse("IYI"), w = GroupElementL::parse("IIY");
        std::vector<GroupElementL> image;
        for (const auto &x : bases[0].words) image.push_back(transvection(v, transvection(w, x)));
        std::sort(image.begin(), image.end());
        d["image"] = CliqueLabel{image}.str();
        return image == bases[1].words;
    });
    cert.run("gamma1.choice_independence", "graphs built from other representative choices are isomorphic to gw", [&](json &d) {
        WChoice one = in.w, last;
        one.reps[0] = in.lines[static_cast<std::size_t>(in.cells.cells[0].back())];
        for (const auto &cell : in.cells.cells) last.reps.push_back(in.lines[static_cast<std::size_t>(cell.back())]);
        auto m1 = gw_choice_isomorphism(in.lines, in.cells, in.w, one);
        auto m2 = gw_choice_isomorphism(in.lines, in.cells, in.w, last);
        Graph built = build_Gw(in.lines, in.cells, in.w);
        d = {{"alternatives", 2}, {"input_matches_construction", built == in.gw}};
        return built == in.gw && m1.size() == 120 && m2.size() == 120;
    });
}

void switching_suite(const SuiteInputs &in, Certificate &cert) {
    const GmPartition pi = in.switching_partition();
    auto switched = std::make_shared<std::pair<Graph, Graph>>();
    auto valid = [&](const Graph &g, json &d) {
        auto r = validate_gm_partition(g, pi);
        d = {{"equitable", report_json(r.equitable)}, {"d_condition", report_json(r.d_condition)},
             {"half_joins", r.half_joins}, {"half_joins_of_four", r.half_joins_of_four}};
        return r.passed() && r.half_joins == pi.d.size() * pi.cells.size() && r.half_joins_of_four == r.half_joins;
    };
    cert.run("switching.valid_e8", "the partition is Godsil-McKay for e8, each D vertex seeing 4 of every cell",
             [&](json &d) { return valid(in.e8, d); });
    cert.run("switching.valid_gw", "the partition is Godsil-McKay for gw, each D vertex seeing 4 of every cell",
             [&](json &d) { return valid(in.gw, d); });
    cert.run("switching.q_matrix", "Q is symmetric and Q^2 = I", [&](json &d) {
        RationalMatrix q = build_Q(pi, in.e8.n());
        bool sym = q == q.transpose(), inv = mat_mul(q, q) == RationalMatrix::identity(q.rows());
        d = {{"symmetric", sym}, {"involution", inv}};
        return sym && inv;
    });
    cert.run("switching.qaq", "Q A Q is the adjacency matrix of the switched graph, for both graphs", [&](json &d) {
        switched->first = gm_switch(in.e8, pi);
        switched->second = gm_switch(in.gw, pi);
        bool a = verify_QAQ(in.e8, pi), b = verify_QAQ(in.gw, pi);
        d = {{"e8", a}, {"gw", b}};
        return a && b;
    });
    cert.run("switching.uq_commute", "u commutes with Q tensor I8", [&](json &d) {
        bool ok = verify_uQ_commute(in.magic(), pi);
        d["commute"] = ok;
        return ok;
    });
    cert.run("switching.intertwiner", "the same u intertwines the two switched graphs", [&](json &d) {
        return record(d, intertwiner_report(in.magic(), switched->first, switched->second));
    });
    cert.run("switching.cospectral", "switching leaves both characteristic polynomials unchanged", [&](json &d) {
        bool a = cospectral(in.e8, switched->first), b = cospectral(in.gw, switched->second);
        d = {{"e8", a}, {"gw", b}};
        return a && b;
    });
    cert.run("switching.srg", "both switched graphs are SRG(120,63,30,36)", [&](json &d) {
        auto a = srg_parameters(switched->first), b = srg_parameters(switched->second);
        d = {{"e8", srg_json(a)}, {"gw", srg_json(b)}};
        return a == kE8 && b == kE8;
    });
    cert.run("switching.involution", "switching twice restores both graphs", [&](json &d) {
        bool a = gm_switch(switched->first, pi) == in.e8, b = gm_switch(switched->second, pi) == in.gw;
        d = {{"e8", a}, {"gw", b}};
        return a && b;
    });
    cert.run("switching.alpha_bounds", "alpha(switched e8) <= 9 and alpha(switched gw) >= 14 (exact values recorded)",
             [&](json &d) {
                 auto a = independence_number(switched->first, AlphaMode::exact);
                 auto b = independence_number(switched->second, AlphaMode::exact);
                 bool wa = is_independent_set(switched->first, a.witness), wb = is_independent_set(switched->second, b.witness);
                 d = {{"e8_switched", {{"lower", a.lower}, {"upper", a.upper}, {"witness", a.witness}}},
                      {"gw_switched", {{"lower", b.lower}, {"upper", b.upper}, {"witness", b.witness}}}};
                 return wa && wb && a.upper <= 9 && b.lower >= 14;
             });
    cert.run("switching.non_isomorphic", "the switched graphs differ from each other and from their originals", [&](json &d) {
        bool ok = true;
        auto test = [&](const char *name, const Graph &g, const Graph &h) {
            auto r = are_isomorphic(g, h, in.iso);
            bool sound = r.outcome == IsoOutcome::non_isomorphic && recheck_certificate(g, h, *r.certificate, in.iso);
            d[name] = {{"outcome", outcome_name(r.outcome)}};
            if (r.certificate) {
                d[name]["kind"] = r.certificate->kind;
                d[name]["left"] = r.certificate->value_left;
                d[name]["right"] = r.certificate->value_right;
            }
            ok &= sound;
        };
        test("e8_vs_switched", in.e8, switched->first);
        test("gw_vs_switched", in.gw, switched->second);
        test("switched_pair", switched->first, switched->second);
        return ok;
    });
}

void independence_suite(const SuiteInputs &in, Certificate &cert) {
    cert.run("independence.e8", "alpha(e8) = 8 exactly, with a verified witness", [&](json &d) {
        auto r = independence_number(in.e8, AlphaMode::exact);
        bool witness = is_independent_set(in.e8, r.witness) && static_cast<int>(r.witness.size()) == r.lower;
        d = {{"lower", r.lower}, {"upper", r.upper}, {"witness", labels(in.lines, r.witness)}, {"nodes", r.nodes}};
        return witness && r.exact() && r.lower == 8;
    });
    cert.run("independence.gw", "the 15 representatives are independent in gw and alpha(gw) = 15", [&](json &d) {
        auto reps = rep_vertices(in);
        bool independent = is_independent_set(in.gw, reps);
        auto r = independence_number(in.gw, AlphaMode::exact);
        d = {{"representatives", labels(in.lines, reps)}, {"independent", independent}, {"lower", r.lower}, {"upper", r.upper}};
        return independent && reps.size() == 15 && r.exact() && r.lower == 15;
    });
    cert.run("independence.non_isomorphic", "the pair is separated by a rechecked invariant", [&](json &d) {
        auto r = are_isomorphic(in.e8, in.gw, in.iso);
        d["outcome"] = outcome_name(r.outcome);
        if (!r.certificate) return false;
        d["kind"] = r.certificate->kind;
        d["left"] = r.certificate->value_left;
        d["right"] = r.certificate->value_right;
        return r.outcome == IsoOutcome::non_isomorphic && recheck_certificate(in.e8, in.gw, *r.certificate, in.iso);
    });
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"srg", "orbits", "magic", "intertwiner", "gamma1", "switching", "independence"};
    return names;
}

void run_suite(const std::string &name, const SuiteInputs &in, Certificate &cert) {
    static const std::map<std::string, void (*)(const SuiteInputs &, Certificate &)> suites = {
        {"srg", srg_suite},       {"orbits", orbits_suite},       {"magic", magic_suite},
        {"intertwiner", intertwiner_suite}, {"gamma1", gamma1_suite}, {"switching", switching_suite},
        {"independence", independence_suite},
    };
    auto it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    it->second(in, cert);
}

}  // namespace qiso::cli
