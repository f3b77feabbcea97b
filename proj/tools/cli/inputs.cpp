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


#include "inputs.hpp"

#include <fstream>
#include <sstream>

#include "qiso/graph_io.hpp"

namespace qiso::cli {

namespace {

/// Non-empty lines with comments stripped, paired with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<long>>> integer_rows(std::string_view text, const char *what) {
    std::vector<std::pair<std::size_t, std::vector<long>>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        number++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size()) {
                throw FormatError(std::string(what) + " line " + std::to_string(number) + ": bad integer '" + token + "'",
                                  number);
            }
            values.push_back(v);
        }
        if (!values.empty()) rows.emplace_back(number, std::move(values));
    }
    return rows;
}

}  // namespace

const MagicUnitary &SuiteInputs::magic() const {
    if (!magic_) magic_ = build_magic_unitary(lines, cells, w);
    return *magic_;
}

GmPartition SuiteInputs::switching_partition() const { return gm ? *gm : v15_partition(cells); }

SuiteInputs standard_inputs() {
    SuiteInputs in;
    in.lines = build_root_lines();
    in.cells = compute_orbits(in.lines);
    in.w = WChoice::standard();
    in.e8 = build_orthogonality_graph(in.lines);
    in.gw = build_Gw(in.lines, in.cells, in.w);
    return in;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

WChoice parse_wchoice(std::string_view text) {
    WChoice w;
    for (const auto &[number, values] : integer_rows(text, "w-choice")) {
        if (values.size() != 8) {
            throw FormatError("w-choice line " + std::to_string(number) + ": expected 8 coordinates, got " +
                                  std::to_string(values.size()),
                              number);
        }
        Line::Coords c{};
        for (std::size_t k = 0; k < 8; k++) c[k] = static_cast<int>(values[k]);
        Line x(c);
        if (!x.is_root()) throw FormatError("w-choice line " + std::to_string(number) + ": not an E8 root", number);
        w.reps.push_back(x);
    }
    return w;
}

OrbitPartition parse_cells(std::string_view text, int n) {
    std::vector<std::vector<int>> cells;
    for (const auto &[number, values] : integer_rows(text, "cells")) {
        std::vector<int> cell;
        for (long v : values) {
            if (v < 0 || v >= n) {
                throw FormatError("cells line " + std::to_string(number) + ": vertex " + std::to_string(v) + " out of range",
                                  number);
            }
            cell.push_back(static_cast<int>(v));
        }
        cells.push_back(std::move(cell));
    }
    try {
        return partition_from_cells(std::move(cells), n);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("cells: ") + e.what());
    }
}

std::string format_cells(const OrbitPartition &cells) {
    std::string out;
    for (const auto &cell : cells.cells) {
        for (std::size_t k = 0; k < cell.size(); k++) out += (k ? " " : "") + std::to_string(cell[k]);
        out += "\n";
    }
    return out;
}

GmPartition load_gm_partition(const std::string &source, const OrbitPartition &cells) {
    if (source == "v15") return v15_partition(cells);
    return parse_gm_partition(read_text_file(source));
}

}  // namespace qiso::cli
