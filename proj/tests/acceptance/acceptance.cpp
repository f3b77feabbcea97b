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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
// Pass --long to extend the hom-count sweep to 6-vertex patterns and --only N to run one criterion.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "qiso/gamma1.hpp"
#include "qiso/graph_io.hpp"
#include "qiso/homcount.hpp"
#include "qiso/independence.hpp"
#include "qiso/isomorphism.hpp"
#include "qiso/magic.hpp"
#include "qiso/magic_io.hpp"
#include "qiso/polynomial.hpp"
#include "qiso/roots.hpp"
#include "qiso/switching.hpp"

namespace qiso {
namespace {

namespace fs = std::filesystem;

// Runtime budgets in seconds. Everything else is exact equality.
constexpr double kBudgetConstruction = 1;
constexpr double kBudgetOrbits = 1;
constexpr double kBudgetProjections = 1;
constexpr double kBudgetMagic = 600;
constexpr double kBudgetIndependence = 300;
constexpr double kBudgetGamma1 = 10;
constexpr double kBudgetSwitching = 900;
constexpr double kBudgetSubpairs = 600;
constexpr double kBudgetHomFive = 600;
constexpr double kBudgetMutation = 1800;

const SrgParameters kE8Params{120, 63, 30, 36};

struct Context {
    std::vector<Line> lines = build_root_lines();
    OrbitPartition cells = compute_orbits(lines);
    WChoice w = WChoice::standard();
    Graph e8 = build_orthogonality_graph(lines);
    Graph gw = build_Gw(lines, cells, w);
    std::optional<MagicUnitary> u;

    const MagicUnitary &magic() {
        if (!u) u = build_magic_unitary(lines, cells, w);
        return *u;
    }
    std::vector<int> reps() const {
        std::vector<int> out;
        for (const auto &x : w.reps) out.push_back(line_index(lines, x));
        return out;
    }
};

/// Collects failed conditions for one criterion.
class Tally {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string &text) { notes_.push_back(text); }
    bool passed() const { return failures_.empty(); }
    std::string text() const {
        std::string out;
        for (const auto &n : notes_) out += (out.empty() ? "" : "; ") + n;
        for (const auto &f : failures_) out += (out.empty() ? "failed: " : "; failed: ") + f;
        return out;
    }

   private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

int failures = 0;
int only = 0;

void criterion(int number, const char *title, double budget, const std::function<void(Tally &)> &body) {
    if (only != 0 && only != number) return;
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception &e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", seconds, budget);
    t.expect(seconds < budget, std::string("runtime ") + timing);
    std::cout << "criterion " << number << " " << (t.passed() ? "PASS" : "FAIL") << " " << title << " [" << timing
              << "]: " << t.text() << std::endl;
    failures += !t.passed();
}

std::string str(const BigInt &x) { return x.get_str(); }

// ---------------------------------------------------------------------------------------------

void construction(Context &c, Tally &t) {
    t.expect(c.e8.n() == 120, "120 vertices");
    auto p = srg_parameters(c.e8);
    t.expect(p == kE8Params, "srg parameters");
    t.note("e8 graph SRG(120,63,30,36)");
}

void orbits(Context &c, Tally &t) {
    auto group = enumerate_L();
    std::set<unsigned> bits;
    bool abelian = true, exponent2 = true;
    for (const auto &a : group) {
        bits.insert(a.bits());
        exponent2 &= mat_mul(word_matrix(a.word()), word_matrix(a.word())) == RationalMatrix::identity(8) ||
                     mat_mul(word_matrix(a.word()), word_matrix(a.word())) == RationalMatrix::identity(8).scaled(-1);
        for (const auto &b : group) {
            auto ab = mat_mul(word_matrix(a.word()), word_matrix(b.word()));
            auto ba = mat_mul(word_matrix(b.word()), word_matrix(a.word()));
            abelian &= ab == ba || ab == ba.scaled(-1);
        }
    }
    t.expect(bits.size() == 64, "|L| = 64");
    t.expect(abelian, "abelian modulo sign");
    t.expect(exponent2, "exponent 2 modulo sign");
    t.expect(c.cells.cell_count() == 15, "15 orbits");
    auto table = reference_orbit_table();
    auto gens = reference_stabilizer_generators();
    std::vector<std::set<unsigned>> stabs;
    for (int i = 0; i < c.cells.cell_count(); i++) {
        const auto &cell = c.cells.cells[static_cast<std::size_t>(i)];
        t.expect(cell.size() == 8, "orbit size 8");
        t.expect(is_clique(c.e8, cell), "orbit is a clique");
        for (int a : cell) {
            for (int b : cell) t.expect(a == b || inner(c.lines[static_cast<std::size_t>(a)], c.lines[static_cast<std::size_t>(b)]) == 0, "orthogonal");
        }
        std::set<int> listed, orbit(cell.begin(), cell.end());
        for (const auto &x : table[static_cast<std::size_t>(i)]) listed.insert(line_index(c.lines, x));
        t.expect(listed == orbit, "orbit V" + std::to_string(i + 1) + " matches the listing");
        std::set<unsigned> generated{0};
        for (const auto &g : gens[static_cast<std::size_t>(i)]) {
            auto next = generated;
            for (unsigned x : generated) next.insert(x ^ g.bits());
            generated = next;
        }
        for (int v : cell) {
            std::set<unsigned> s;
            for (const auto &g : stabilizer(c.lines[static_cast<std::size_t>(v)])) s.insert(g.bits());
            t.expect(s == generated && s.size() == 8, "stabilizer of V" + std::to_string(i + 1));
        }
        stabs.push_back(generated);
    }
    for (std::size_t i = 0; i < stabs.size(); i++) {
        for (std::size_t j = i + 1; j < stabs.size(); j++) {
            std::vector<unsigned> common;
            std::set_intersection(stabs[i].begin(), stabs[i].end(), stabs[j].begin(), stabs[j].end(), std::back_inserter(common));
            t.expect(common.size() == 2, "stabilizer intersection");
        }
    }
    t.note("|L|=64, 15 orbits of 8 matching the listing, stabilizers of order 8 meeting pairwise in 2");
}

void projections(Context &c, Tally &t) {
    auto gens = reference_stabilizer_generators();
    const auto i8 = RationalMatrix::identity(8);
    int matched = 0;
    for (std::size_t v = 0; v < c.lines.size(); v++) {
        const auto &g = gens[static_cast<std::size_t>(c.cells.cell_of[v])];
        std::vector<long> x(c.lines[v].coords().begin(), c.lines[v].coords().end());
        const auto target = RationalMatrix::projection_onto(x);
        bool found = false;
        for (int signs = 0; signs < 8 && !found; signs++) {
            RationalMatrix p = i8;
            for (int k = 0; k < 3; k++) {
                auto n = word_matrix(g[static_cast<std::size_t>(k)].word());
                p = mat_mul(p, signs >> k & 1 ? mat_sub(i8, n) : mat_add(i8, n));
            }
            found = p.scaled(Rational(1, 8)) == target;
        }
        matched += found;
    }
    t.expect(matched == 120, std::to_string(matched) + " of 120 lines");
    t.note("120 of 120 projections equal (1/8)(1+-N1)(1+-N2)(1+-N3)");
}

void magic(Context &c, Tally &t) {
    const auto &u = c.magic();
    auto axioms = verify_magic_axioms(u);
    t.expect(axioms.projections.passed() && axioms.projections.checked == 960, "960 projections");
    t.expect(axioms.row_sums.passed() && axioms.column_sums.passed(), "block row and column sums");
    t.expect(verify_intertwiner(u, c.e8, c.gw), "intertwiner");
    auto products = verify_product_relations(u, c.e8, c.gw);
    t.expect(products.passed(), "product relations");
    t.expect(products.zero_pattern.checked == 860160, "quadruple count " + std::to_string(products.zero_pattern.checked));
    t.note("960 projections, 15 blocks with unit row/column sums, A_e8 u = u A_gw, " +
           std::to_string(products.zero_pattern.checked) + " quadruples");
}

void independence(Context &c, Tally &t) {
    auto a = independence_number(c.e8, AlphaMode::exact);
    t.expect(a.exact() && a.lower == 8, "alpha(e8) = 8 exactly");
    t.expect(is_independent_set(c.e8, a.witness) && a.witness.size() == 8, "witness of size 8");
    auto reps = c.reps();
    t.expect(reps.size() == 15 && is_independent_set(c.gw, reps), "15 independent representatives in gw");
    auto r = are_isomorphic(c.e8, c.gw);
    t.expect(r.outcome == IsoOutcome::non_isomorphic && r.certificate && recheck_certificate(c.e8, c.gw, *r.certificate),
             "certificate");
    if (r.certificate) t.note("certificate " + r.certificate->kind + " " + r.certificate->value_left + " vs " + r.certificate->value_right);
    t.note("alpha(e8)=8 in " + std::to_string(a.nodes) + " nodes");
}

void gamma1(Context &c, Tally &t) {
    Gamma1 g = build_gamma1(c.lines, c.cells);
    std::set<std::vector<GroupElementL>> distinct;
    for (const auto &l : g.labels) {
        distinct.insert(l.words);
        t.expect(l.words.size() == 8, "8-set label");
    }
    t.expect(distinct.size() == 120, "120 distinct labels");
    auto bases = base_cliques(c.lines, c.cells);
    for (std::size_t i = 0; i < bases.size(); i++) {
        for (std::size_t j = i + 1; j < bases.size(); j++) {
            std::vector<GroupElementL> common;
            std::set_intersection(bases[i].words.begin(), bases[i].words.end(), bases[j].words.begin(), bases[j].words.end(),
                                  std::back_inserter(common));
            t.expect(common.size() == 2, "base intersection");
        }
    }
    t.expect(srg_parameters(g.graph) == SrgParameters{120, 56, 28, 24}, "SRG(120,56,28,24)");
    auto map = gamma1_isomorphism_witness(c.lines, c.cells, c.w, c.gw, g);
    Graph comp = c.gw.complement();
    std::size_t pairs = 0, agree = 0;
    for (int a = 0; a < 120; a++) {
        for (int b = a + 1; b < 120; b++) {
            pairs++;
            agree += comp.adjacent(a, b) == g.graph.adjacent(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
        }
    }
    t.expect(std::set<int>(map.begin(), map.end()).size() == 120, "bijection");
    t.expect(pairs == 7140 && agree == 7140, std::to_string(agree) + " of " + std::to_string(pairs) + " pairs");
    t.note("120 labels, SRG(120,56,28,24), relabeling agrees on " + std::to_string(agree) + " pairs");
}

void switching(Context &c, Tally &t) {
    GmPartition p = v15_partition(c.cells);
    Graph s1 = gm_switch(c.e8, p), s2 = gm_switch(c.gw, p);
    for (const Graph *g : {&c.e8, &c.gw}) {
        auto v = validate_gm_partition(*g, p);
        t.expect(v.passed(), "partition validates");
        t.expect(v.half_joins == 8 * 14 && v.half_joins_of_four == v.half_joins, "4 neighbours per cell");
    }
    RationalMatrix q = build_Q(p, 120);
    t.expect(mat_mul(q, q) == RationalMatrix::identity(120), "Q^2 = I");
    t.expect(mat_mul(mat_mul(q, c.e8.adjacency_matrix()), q) == s1.adjacency_matrix(), "QAQ on e8");
    t.expect(mat_mul(mat_mul(q, c.gw.adjacency_matrix()), q) == s2.adjacency_matrix(), "QAQ on gw");
    t.expect(verify_uQ_commute(c.magic(), p), "uQ = Qu");
    t.expect(verify_intertwiner(c.magic(), s1, s2), "switched intertwiner");
    auto spectrum = IntPolynomial::linear(63) * IntPolynomial::linear(3).pow(84) * IntPolynomial::linear(-9).pow(35);
    for (const Graph *g : {&c.e8, &c.gw, &s1, &s2}) t.expect(char_poly(g->adjacency_matrix()) == spectrum, "characteristic polynomial");
    t.expect(srg_parameters(s1) == kE8Params && srg_parameters(s2) == kE8Params, "switched graphs SRG");
    auto a1 = independence_number(s1, AlphaMode::exact), a2 = independence_number(s2, AlphaMode::exact);
    t.expect(a1.upper <= 9, "alpha(switched e8) <= 9");
    t.expect(a2.lower >= 14 && is_independent_set(s2, a2.witness), "alpha(switched gw) >= 14");
    t.note("alpha(switched e8)=" + std::to_string(a1.upper) + ", alpha(switched gw)=" + std::to_string(a2.lower));
}

void subpairs(Context &c, Tally &t) {
    std::vector<std::vector<int>> sets = {{1, 2, 3, 4, 5, 6, 7, 8, 9},
                                          {2, 3, 5, 7, 8, 10, 11, 12, 13, 14, 15, 1},
                                          {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
                                          {7, 8, 9, 10, 11, 12, 13, 14, 15}};
    auto reps = c.reps();
    std::string sizes;
    for (auto &set : sets) {
        std::sort(set.begin(), set.end());
        SubPair sub = induced_subpair(c.e8, c.gw, c.magic(), set);
        t.expect(verify_intertwiner(sub.u, sub.g1, sub.g2), "sub-intertwiner");
        auto a = independence_number(sub.g1, AlphaMode::exact);
        t.expect(a.exact() && a.upper <= 8, "alpha <= 8 on the e8 side");
        std::vector<int> local;
        for (int label : set) {
            auto it = std::find(sub.vertices.begin(), sub.vertices.end(), reps[static_cast<std::size_t>(label - 1)]);
            local.push_back(static_cast<int>(it - sub.vertices.begin()));
        }
        t.expect(is_independent_set(sub.g2, local), "|T| independent representatives");
        sizes += (sizes.empty() ? "" : ",") + std::to_string(set.size()) + ":" + std::to_string(a.upper);
    }
    t.note("|T|:alpha = " + sizes);
}

void homcount(Context &c, Tally &t, bool long_run) {
    // Spectrum 63^1 3^84 (-9)^35 gives the traces; regularity gives the walk sums.
    for (const Graph *g : {&c.e8, &c.gw}) {
        for (int k = 3; k <= 6; k++) {
            BigInt trace, p63, p3, p9;
            mpz_pow_ui(p63.get_mpz_t(), BigInt(63).get_mpz_t(), static_cast<unsigned long>(k));
            mpz_pow_ui(p3.get_mpz_t(), BigInt(3).get_mpz_t(), static_cast<unsigned long>(k));
            mpz_pow_ui(p9.get_mpz_t(), BigInt(-9).get_mpz_t(), static_cast<unsigned long>(k));
            trace = p63 + 84 * p3 + 35 * p9;
            t.expect(hom_count(cycle_graph(k), *g) == trace, "C" + std::to_string(k));
        }
        for (int v = 2; v <= 6; v++) {
            BigInt sum;
            mpz_pow_ui(sum.get_mpz_t(), BigInt(63).get_mpz_t(), static_cast<unsigned long>(v - 1));
            t.expect(hom_count(path_graph(v), *g) == 120 * sum, "P" + std::to_string(v));
        }
        for (const auto &p : enumerate_connected_graphs(3)) {
            t.expect(hom_count(p.graph, *g) == BigInt(static_cast<unsigned long>(testing::brute_hom(p.graph, *g))), "brute force " + p.id);
        }
    }
    auto start = std::chrono::steady_clock::now();
    auto five = hom_profile_compare(c.e8, c.gw, 5, true);
    double five_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(five.differences == 0 && five.rows.size() == 30, "planar patterns up to 5 vertices");
    t.expect(five_seconds < kBudgetHomFive, "5-vertex sweep runtime");
    if (long_run) {
        auto six = hom_profile_compare(c.e8, c.gw, 6, true);
        t.expect(six.differences == 0, "planar patterns up to 6 vertices");
        t.note(std::to_string(six.rows.size()) + " planar patterns up to 6 vertices equal");
    }
    BigInt k9_e8 = hom_complete(9, c.e8.complement()), k9_gw = hom_complete(9, c.gw.complement());
    t.expect(k9_e8 == 0 && k9_gw > 0, "K9 distinguisher");
    t.note(std::to_string(five.rows.size()) + " planar patterns up to 5 vertices equal; hom(K9) into complements " + str(k9_e8) +
           " vs " + str(k9_gw));
}

void mutations(Context &c, Tally &t) {
    const fs::path dir = testing::make_scratch("acceptance");
    const std::string out = " --out " + (dir / "out").string();
    auto expect_failure = [&](const std::string &suite, const std::string &args, const std::string &check) {
        auto r = testing::run_qiso("verify " + suite + args + out, dir);
        bool named = false;
        if (r.exit_code == 1) {
            auto failed = testing::failed_checks(testing::read_json(dir / "out" / ("verify-" + suite + ".json")));
            named = std::find(failed.begin(), failed.end(), check) != failed.end();
        }
        t.expect(r.exit_code == 1 && named, suite + " under mutation (exit " + std::to_string(r.exit_code) + ")");
        return r.exit_code == 1 && named;
    };

    write_graph_file((dir / "e8-flip.g6").string(), c.e8.with_edge_flipped(0, 57), false);
    auto reps = c.reps();
    write_graph_file((dir / "gw-flip.g6").string(), c.gw.with_edge_flipped(reps[0], reps[1]), false);

    auto shuffled = c.cells.cells;
    std::swap(shuffled[0][5], shuffled[1][5]);
    std::string cells_text;
    for (const auto &cell : shuffled) {
        for (std::size_t k = 0; k < cell.size(); k++) cells_text += (k ? " " : "") + std::to_string(cell[k]);
        cells_text += "\n";
    }
    testing::write_text(dir / "cells.txt", cells_text);

    auto magic = nlohmann::json::parse(magic_to_json(c.magic()));
    auto &numerators = magic["blocks"][2][9]["numerators"];
    numerators[0] = numerators[0].get<long>() + 1;
    testing::write_text(dir / "magic.json", magic.dump());

    GmPartition p = v15_partition(c.cells);
    std::swap(p.cells[0][0], p.cells[1][0]);
    testing::write_text(dir / "partition.txt", format_gm_partition(p));

    int caught = 0;
    caught += expect_failure("srg", " --e8 " + (dir / "e8-flip.g6").string(), "srg.e8");
    caught += expect_failure("orbits", " --cells " + (dir / "cells.txt").string(), "orbits.cells_are_orbits");
    caught += expect_failure("magic", " --magic " + (dir / "magic.json").string(), "magic.axioms");
    caught += expect_failure("intertwiner", " --gw " + (dir / "gw-flip.g6").string(), "intertwiner.e8_gw");
    caught += expect_failure("gamma1", " --gw " + (dir / "gw-flip.g6").string(), "gamma1.witness");
    caught += expect_failure("switching", " --partition " + (dir / "partition.txt").string(), "switching.uq_commute");
    caught += expect_failure("independence", " --gw " + (dir / "gw-flip.g6").string(), "independence.gw");
    auto clean = testing::run_qiso("verify srg" + out, dir);
    t.expect(clean.exit_code == 0, "unmutated srg suite passes");
    t.note(std::to_string(caught) + " of 7 suites fail with a named check under injected defects");
    fs::remove_all(dir);
}

}  // namespace
}  // namespace qiso

int main(int argc, char **argv) {
    using namespace qiso;
    bool long_run = false;
    for (int i = 1; i < argc; i++) {
        const std::string arg = argv[i];
        if (arg == "--long") {
            long_run = true;
        } else if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: qiso_acceptance [--long] [--only N]\n";
            return 2;
        }
    }
    Context c;
    criterion(1, "e8 construction", kBudgetConstruction, [&](Tally &t) {
        Context fresh;
        construction(fresh, t);
    });
    criterion(2, "group and orbits", kBudgetOrbits, [&](Tally &t) { orbits(c, t); });
    criterion(3, "projection identities", kBudgetProjections, [&](Tally &t) { projections(c, t); });
    criterion(4, "magic unitary", kBudgetMagic, [&](Tally &t) { magic(c, t); });
    criterion(5, "non-isomorphism", kBudgetIndependence, [&](Tally &t) { independence(c, t); });
    criterion(6, "coset graph", kBudgetGamma1, [&](Tally &t) { gamma1(c, t); });
    criterion(7, "switching", kBudgetSwitching, [&](Tally &t) { switching(c, t); });
    criterion(8, "induced subpairs", kBudgetSubpairs, [&](Tally &t) { subpairs(c, t); });
    criterion(9, "hom-count evidence", long_run ? 7200 : kBudgetHomFive, [&](Tally &t) { homcount(c, t, long_run); });
    criterion(10, "mutation soundness", kBudgetMutation, [&](Tally &t) { mutations(c, t); });
    if (only == 0) std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
