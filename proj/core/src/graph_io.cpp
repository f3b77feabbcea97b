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

#include "qiso/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace qiso {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string &out, std::size_t n) {
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
}

}  // namespace

std::string graph6_encode(const Graph &g) {
    std::string out;
    const auto n = static_cast<std::size_t>(g.n());
    append_size(out, n);
    int acc = 0, bits = 0;
    for (int j = 1; j < g.n(); j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                acc = bits = 0;
            }
        }
    }
    if (bits) out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t offset = 0;
    if (text.starts_with(kHeader)) offset = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto take = [&](std::size_t pos) -> int {
        if (pos >= text.size()) throw FormatError("graph6: unexpected end of input", pos);
        int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw FormatError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
        return c - 63;
    };

    std::size_t n = 0;
    std::size_t pos = offset;
    if (pos < text.size() && text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~') {
            pos += 2;
            for (int k = 0; k < 6; k++) n = (n << 6) | static_cast<std::size_t>(take(pos++));
        } else {
            pos += 1;
            for (int k = 0; k < 3; k++) n = (n << 6) | static_cast<std::size_t>(take(pos++));
        }
    } else {
        n = static_cast<std::size_t>(take(pos++));
    }
    if (n > (1u << 20)) throw FormatError("graph6: vertex count too large", offset);

    const std::size_t total_bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t expected = (total_bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                              std::to_string(text.size() - pos),
                          pos + std::min(expected, text.size() - pos));
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; j++) {
        for (std::size_t i = 0; i < j; i++, bit++) {
            int chunk = take(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (bit % 6) {
        int chunk = take(pos + bit / 6);
        if (chunk & ((1 << (6 - bit % 6)) - 1)) throw FormatError("graph6: nonzero padding bits", pos + bit / 6);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string dimacs_encode(const Graph &g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph dimacs_decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw FormatError("dimacs: duplicate problem line", lineno);
            if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0) {
                throw FormatError("dimacs: malformed problem line", lineno);
            }
        } else if (tag == "e") {
            long u = 0, v = 0;
            if (n < 0) throw FormatError("dimacs: edge before problem line", lineno);
            if (!(fields >> u >> v) || u < 1 || v < 1 || u > n || v > n) {
                throw FormatError("dimacs: malformed or out-of-range edge", lineno);
            }
            if (u == v) throw FormatError("dimacs: loop edge", lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw FormatError("dimacs: unknown line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw FormatError("dimacs: missing problem line", lineno);
    if (static_cast<long>(edges.size()) != m) {
        throw FormatError("dimacs: problem line declares " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()),
                          lineno);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    bool dimacs = path.ends_with(".dimacs") || path.ends_with(".col") || path.ends_with(".dim") ||
                  text.starts_with("p ") || text.starts_with("c");
    if (dimacs) return dimacs_decode(text);
    // Only the first line is read for graph6 files.
    auto newline = text.find('\n');
    return graph6_decode(std::string_view(text).substr(0, newline));
}

void write_graph_file(const std::string &path, const Graph &g, bool dimacs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file " + path);
    if (dimacs) {
        out << dimacs_encode(g);
    } else {
        out << graph6_encode(g) << "\n";
    }
}

}  // namespace qiso
