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


#include "commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "certificate.hpp"
#include "inputs.hpp"
#include "qiso/gamma1.hpp"
#include "qiso/graph_io.hpp"
#include "qiso/homcount.hpp"
#include "qiso/independence.hpp"
#include "qiso/magic_io.hpp"
#include "qiso/errors.hpp"
#include "suites.hpp"

namespace qiso::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct BuildOptions {
    std::string target;
    std::string base = "e8";
    std::string partition = "v15";
    std::string w_choice;
    std::string out = "qiso-out";
    std::string format = "graph6";
};

struct VerifyOptions {
    std::string suite = "all";
    std::string e8, gw, cells, magic, partition, w_choice;
    std::string out = "qiso-out";
    std::uint64_t budget = IsoOptions{}.search_budget;
    std::uint64_t seed = 1;
    bool json = false;
};

struct HomOptions {
    std::string g1, g2;
    int nmax = 5;
    bool include_nonplanar = false;
    bool distinguisher = false;
    std::string partition = "v15";
    std::string out = "qiso-out";
    bool json = false;
};

json coords_json(const Line &x) { return x.coords(); }

json wchoice_json(const WChoice &w) {
    json out = json::array();
    for (const auto &x : w.reps) out.push_back(coords_json(x));
    return out;
}

void ensure_dir(const std::string &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory '" + dir + "': " + ec.message());
}

Graph load_graph(const std::string &path, const char *what) {
    Graph g = read_graph_file(path);
    if (g.n() != 120) throw InputError(std::string(what) + " graph in '" + path + "' has " + std::to_string(g.n()) + " vertices, expected 120");
    return g;
}

// ---------------------------------------------------------------------------------------------

int cmd_build(const BuildOptions &opt) {
    SuiteInputs in = standard_inputs();
    if (!opt.w_choice.empty()) {
        in.w = parse_wchoice(read_text_file(opt.w_choice));
        validate_wchoice(in.lines, in.cells, in.w);
        in.gw = build_Gw(in.lines, in.cells, in.w);
    }
    json sidecar = {{"target", opt.target}, {"cells", in.cells.cells}, {"w_choice", wchoice_json(in.w)}};
    Graph g;
    json labels = json::array();
    for (const auto &x : in.lines) labels.push_back(coords_json(x));
    if (opt.target == "e8") {
        g = in.e8;
        sidecar.erase("w_choice");
    } else if (opt.target == "gw") {
        g = in.gw;
    } else if (opt.target == "gamma1") {
        Gamma1 gamma1 = build_gamma1(in.lines, in.cells);
        g = gamma1.graph;
        labels = json::array();
        for (const auto &l : gamma1.labels) {
            json words = json::array();
            for (const auto &x : l.words) words.push_back(x.str());
            labels.push_back(words);
        }
        sidecar.erase("w_choice");
    } else if (opt.target == "switched") {
        GmPartition pi = load_gm_partition(opt.partition, in.cells);
        const Graph &base = opt.base == "gw" ? in.gw : in.e8;
        auto valid = validate_gm_partition(base, pi);
        if (!valid.passed()) throw InputError("partition is not a Godsil-McKay partition of the " + opt.base + " graph");
        g = gm_switch(base, pi);
        sidecar["base"] = opt.base;
        sidecar["partition"] = {{"cells", pi.cells}, {"d", pi.d}};
        if (opt.base == "e8") sidecar.erase("w_choice");
    } else if (opt.target == "magic") {
        ensure_dir(opt.out);
        const std::string path = (fs::path(opt.out) / "magic.json").string();
        write_text_file(path, magic_to_json(in.magic()));
        std::cout << path << "\n";
        return kExitPass;
    }
    sidecar["labels"] = labels;
    ensure_dir(opt.out);
    const bool dimacs = opt.format == "dimacs";
    std::string name = opt.target == "switched" ? opt.base + "-switched" : opt.target;
    const auto graph_path = fs::path(opt.out) / (name + (dimacs ? ".dimacs" : ".g6"));
    const auto labels_path = fs::path(opt.out) / (name + ".labels.json");
    write_graph_file(graph_path.string(), g, dimacs);
    write_text_file(labels_path.string(), sidecar.dump(1) + "\n");
    std::cout << graph_path.string() << "\n" << labels_path.string() << "\n";
    return kExitPass;
}

int emit(const Certificate &cert, const std::string &out, const std::string &file, bool as_json) {
    ensure_dir(out);
    const std::string path = (fs::path(out) / file).string();
    write_text_file(path, cert.to_json().dump(1) + "\n");
    if (as_json) {
        std::cout << cert.to_json().dump(1) << "\n";
    } else {
        std::cout << cert.to_text() << "certificate: " << path << "\n";
    }
    return cert.passed() ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const VerifyOptions &opt) {
    const auto &names = suite_names();
    if (opt.suite != "all" && std::find(names.begin(), names.end(), opt.suite) == names.end()) {
        throw InputError("unknown suite '" + opt.suite + "'");
    }
    SuiteInputs in = standard_inputs();
    in.seed = opt.seed;
    in.iso.search_budget = opt.budget;
    json params = {{"suite", opt.suite}, {"seed", opt.seed}, {"budget", opt.budget}};
    if (!opt.cells.empty()) {
        in.cells = parse_cells(read_text_file(opt.cells), 120);
        params["cells"] = opt.cells;
    }
    if (!opt.w_choice.empty()) {
        in.w = parse_wchoice(read_text_file(opt.w_choice));
        validate_wchoice(in.lines, in.cells, in.w);
        params["w_choice"] = opt.w_choice;
    }
    if (!opt.cells.empty() || !opt.w_choice.empty()) in.gw = build_Gw(in.lines, in.cells, in.w);
    if (!opt.e8.empty()) {
        in.e8 = load_graph(opt.e8, "e8");
        params["e8"] = opt.e8;
    }
    if (!opt.gw.empty()) {
        in.gw = load_graph(opt.gw, "gw");
        params["gw"] = opt.gw;
    }
    if (!opt.magic.empty()) {
        MagicUnitary u = magic_from_json(read_text_file(opt.magic));
        if (u.partition.cells != in.cells.cells) throw InputError("magic unitary in '" + opt.magic + "' uses different cells");
        in.set_magic(std::move(u));
        params["magic"] = opt.magic;
    }
    if (!opt.partition.empty()) {
        in.gm = load_gm_partition(opt.partition, in.cells);
        params["partition"] = opt.partition;
    }
    Certificate cert("verify", params);
    if (opt.suite == "all") {
        for (const auto &name : names) run_suite(name, in, cert);
    } else {
        run_suite(opt.suite, in, cert);
    }
    return emit(cert, opt.out, "verify-" + opt.suite + ".json", opt.json);
}

Graph named_graph(const std::string &source, const std::string &partition) {
    static const std::vector<std::string> builtin = {"e8", "gw", "e8-switched", "gw-switched"};
    if (std::find(builtin.begin(), builtin.end(), source) == builtin.end()) return read_graph_file(source);
    SuiteInputs in = standard_inputs();
    if (source == "e8") return in.e8;
    if (source == "gw") return in.gw;
    GmPartition pi = load_gm_partition(partition, in.cells);
    return gm_switch(source == "e8-switched" ? in.e8 : in.gw, pi);
}

int cmd_homcount(const HomOptions &opt) {
    if (opt.nmax < 1 || opt.nmax > kMaxPatternVertices) {
        throw InputError("--nmax must lie in 1.." + std::to_string(kMaxPatternVertices));
    }
    Graph g1 = named_graph(opt.g1, opt.partition), g2 = named_graph(opt.g2, opt.partition);
    json params = {{"g1", opt.g1}, {"g2", opt.g2}, {"nmax", opt.nmax}, {"planar_only", !opt.include_nonplanar},
                   {"distinguisher", opt.distinguisher}};
    Certificate cert("homcount", params);
    HomProfileReport report;
    cert.run("hom.profile", "every connected planar pattern has the same number of homomorphisms into both graphs",
             [&](json &d) {
                 report = hom_profile_compare(g1, g2, opt.nmax, !opt.include_nonplanar);
                 json rows = json::array();
                 for (const auto &row : report.rows) {
                     rows.push_back({{"pattern", row.id}, {"vertices", row.vertices}, {"planar", row.planar},
                                     {"g1", row.left.get_str()}, {"g2", row.right.get_str()}, {"equal", row.equal()}});
                 }
                 d = {{"patterns", report.rows.size()}, {"differences", report.differences},
                      {"planar_differences", report.planar_differences}, {"rows", rows}};
                 return report.planar_differences == 0;
             });
    if (opt.distinguisher) {
        cert.run("hom.complement_k9", "K9 maps differently into the two complements", [&](json &d) {
            BigInt a = hom_complete(9, g1.complement()), b = hom_complete(9, g2.complement());
            d = {{"g1", a.get_str()}, {"g2", b.get_str()}};
            return a != b;
        });
    }
    ensure_dir(opt.out);
    write_text_file((fs::path(opt.out) / "homprofile.txt").string(), format_hom_profile(report));
    return emit(cert, opt.out, "homcount.json", opt.json);
}

}  // namespace

int run(int argc, char **argv) {
    CLI::App app{"Exact construction and verification of a quantum isomorphic, non-isomorphic SRG(120,63,30,36) pair"};
    app.require_subcommand(1);
    app.set_version_flag("--version", git_describe());

    BuildOptions build;
    auto *b = app.add_subcommand("build", "Write a graph and its label sidecar");
    b->add_option("target", build.target, "e8 | gw | gamma1 | switched | magic")
        ->required()
        ->check(CLI::IsMember({"e8", "gw", "gamma1", "switched", "magic"}));
    b->add_option("--base", build.base, "Graph to switch")->check(CLI::IsMember({"e8", "gw"}));
    b->add_option("--partition", build.partition, "v15 or a partition file");
    b->add_option("--w-choice", build.w_choice, "File with one representative per cell");
    b->add_option("--out", build.out, "Output directory");
    b->add_option("--format", build.format)->check(CLI::IsMember({"graph6", "dimacs"}));

    VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Run a verification suite and write its certificate");
    v->add_option("suite", verify.suite, "all | srg | orbits | magic | intertwiner | gamma1 | switching | independence");
    v->add_option("--e8", verify.e8, "Replace the e8 graph (graph6 or DIMACS)");
    v->add_option("--gw", verify.gw, "Replace the gw graph (graph6 or DIMACS)");
    v->add_option("--cells", verify.cells, "Replace the cell partition");
    v->add_option("--magic", verify.magic, "Replace the magic unitary (JSON)");
    v->add_option("--partition", verify.partition, "v15 or a switching partition file");
    v->add_option("--w-choice", verify.w_choice, "File with one representative per cell");
    v->add_option("--budget", verify.budget, "Isomorphism search node budget");
    v->add_option("--seed", verify.seed, "Seed for sampled checks");
    v->add_option("--out", verify.out, "Output directory");
    v->add_flag("--json", verify.json, "Print the certificate instead of the text report");

    HomOptions hom;
    auto *h = app.add_subcommand("homcount", "Compare homomorphism counts from small connected patterns");
    h->add_option("g1", hom.g1, "e8 | gw | e8-switched | gw-switched | graph file")->required();
    h->add_option("g2", hom.g2, "e8 | gw | e8-switched | gw-switched | graph file")->required();
    h->add_option("--nmax", hom.nmax, "Largest pattern size");
    h->add_flag("--include-nonplanar", hom.include_nonplanar, "Also count non-planar patterns");
    h->add_flag("--distinguisher", hom.distinguisher, "Also compare hom(K9) into the complements");
    h->add_option("--partition", hom.partition, "Switching partition for the switched graphs");
    h->add_option("--out", hom.out, "Output directory");
    h->add_flag("--json", hom.json, "Print the certificate instead of the text report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*b) return cmd_build(build);
        if (*v) return cmd_verify(verify);
        return cmd_homcount(hom);
    } catch (const VerificationError &e) {
        std::cerr << "qiso: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception &e) {
        std::cerr << "qiso: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qiso::cli
