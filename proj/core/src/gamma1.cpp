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


#include "qiso/gamma1.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qiso/errors.hpp"
#include "qiso/transporter.hpp"

namespace qiso {

namespace {

CliqueLabel make_label(std::vector<GroupElementL> words) {
    std::sort(words.begin(), words.end());
    return {std::move(words)};
}

CliqueLabel translate(const GroupElementL &n, const CliqueLabel &c) {
    std::vector<GroupElementL> words;
    for (const auto &m : c.words) words.push_back(n * m);
    return make_label(std::move(words));
}

int intersection_size(const CliqueLabel &a, const CliqueLabel &b) {
    int count = 0;
    for (const auto &x : a.words) count += std::find(b.words.begin(), b.words.end(), x) != b.words.end();
    return count;
}

}  // namespace

std::string CliqueLabel::str() const {
    std::string s;
    for (const auto &w : words) {
        if (!s.empty()) s += ' ';
        s += w.str();
    }
    return s;
}

std::vector<CliqueLabel> base_cliques(std::span<const Line> lines, const OrbitPartition &partition) {
    std::vector<CliqueLabel> out;
    for (const auto &cell : partition.cells) {
        out.push_back(make_label(stabilizer(lines[static_cast<std::size_t>(cell.front())])));
    }
    return out;
}

Gamma1 build_gamma1(std::span<const Line> lines, const OrbitPartition &partition) {
    Gamma1 out;
    std::set<std::vector<unsigned>> seen;
    for (const auto &base : base_cliques(lines, partition)) {
        std::vector<CliqueLabel> cosets;
        for (const auto &n : enumerate_L()) {
            CliqueLabel c = translate(n, base);
            if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(std::move(c));
        }
        std::sort(cosets.begin(), cosets.end(),
                  [](const CliqueLabel &a, const CliqueLabel &b) { return a.words.front() < b.words.front(); });
        for (auto &c : cosets) {
            std::vector<unsigned> key;
            for (const auto &w : c.words) key.push_back(w.bits());
            if (!seen.insert(key).second) throw VerificationError("duplicate clique " + c.str());
            out.labels.push_back(std::move(c));
        }
    }
    if (out.labels.size() != 120) {
        throw VerificationError("expected 120 cliques, built " + std::to_string(out.labels.size()));
    }
    out.graph = Graph::from_predicate(120, [&](int a, int b) {
        int k = intersection_size(out.labels[static_cast<std::size_t>(a)], out.labels[static_cast<std::size_t>(b)]);
        if (k != 0 && k != 2) {
            throw VerificationError("cliques " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                                    std::to_string(k) + " words");
        }
        return k == 2;
    });
    return out;
}

int clique_label_index(const Gamma1 &gamma1, const CliqueLabel &label) {
    auto it = std::find(gamma1.labels.begin(), gamma1.labels.end(), label);
    if (it == gamma1.labels.end()) throw std::invalid_argument("clique " + label.str() + " is not a vertex");
    return static_cast<int>(it - gamma1.labels.begin());
}

std::vector<int> gamma1_isomorphism_witness(std::span<const Line> lines, const OrbitPartition &partition,
                                            const WChoice &w, const Graph &gw, const Gamma1 &gamma1) {
    validate_wchoice(lines, partition, w);
    auto bases = base_cliques(lines, partition);
    std::vector<int> map(lines.size());
    for (std::size_t v = 0; v < lines.size(); v++) {
        const int i = partition.cell_of[v];
        Transporter m = find_transporter(w.reps[static_cast<std::size_t>(i)], lines[v]);
        map[v] = clique_label_index(gamma1, translate(m.element, bases[static_cast<std::size_t>(i)]));
    }
    if (!is_isomorphism(gw.complement(), gamma1.graph, map)) {
        throw VerificationError("relabelling by transporter cosets is not an isomorphism onto Gamma1");
    }
    return map;
}

int quadratic_form(const GroupElementL &g) { return g.y_count() % 2; }

int bilinear_form(const GroupElementL &a, const GroupElementL &b) {
    return quadratic_form(a * b) ^ quadratic_form(a) ^ quadratic_form(b);
}

bool vo6_adjacent(const GroupElementL &a, const GroupElementL &b) { return !(a == b) && quadratic_form(a * b) == 0; }

GroupElementL transvection(const GroupElementL &v, const GroupElementL &x) {
    return bilinear_form(x, v) ? x * v : x;
}

}  // namespace qiso
