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


#include "qiso/magic_io.hpp"

#include <json.hpp>

namespace qiso {

namespace {

using nlohmann::json;

constexpr const char *kFormat = "qiso-magic-unitary";

json entry_json(const RationalMatrix &m) {
    BigInt den = 1;
    for (const auto &x : m.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    json nums = json::array();
    for (const auto &x : m.entries()) {
        BigInt scaled = x.numerator() * (den / x.denominator());
        if (scaled.fits_slong_p()) {
            nums.push_back(scaled.get_si());
        } else {
            nums.push_back(scaled.get_str());
        }
    }
    return {{"denominator", den.get_str()}, {"numerators", std::move(nums)}};
}

BigInt big_from(const json &j, const std::string &where) {
    BigInt out;
    if (j.is_number_integer()) {
        out = static_cast<long>(j.get<long long>());
    } else if (j.is_string() && out.set_str(j.get<std::string>(), 10) == 0) {
        return out;
    } else {
        throw MagicFormatError(where + ": expected an integer");
    }
    return out;
}

const json &field(const json &j, const char *name, const std::string &where) {
    if (!j.is_object() || !j.contains(name)) throw MagicFormatError(where + ": missing field '" + name + "'");
    return j.at(name);
}

int int_field(const json &j, const char *name, const std::string &where) {
    const json &f = field(j, name, where);
    if (!f.is_number_integer()) throw MagicFormatError(where + "." + name + ": expected an integer");
    return f.get<int>();
}

}  // namespace

std::string magic_to_json(const MagicUnitary &u) {
    json doc;
    doc["format"] = kFormat;
    doc["version"] = kMagicFormatVersion;
    doc["dim"] = u.dim;
    doc["vertices"] = u.partition.vertex_count();
    doc["cells"] = u.partition.cells;
    if (u.w) {
        json reps = json::array();
        for (const auto &x : u.w->reps) reps.push_back(x.coords());
        doc["w"] = std::move(reps);
    }
    json blocks = json::array();
    for (int i = 0; i < u.partition.cell_count(); i++) {
        const auto &cell = u.partition.cells[static_cast<std::size_t>(i)];
        json entries = json::array();
        for (int a = 0; a < u.cell_size(i); a++) {
            for (int b = 0; b < u.cell_size(i); b++) {
                json e = entry_json(u.entry(i, a, b));
                e["y"] = cell[static_cast<std::size_t>(a)];
                e["z"] = cell[static_cast<std::size_t>(b)];
                if (!u.transporters.empty()) {
                    e["transporter"] = u.transporters[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * u.cell_size(i) + b)].str();
                }
                entries.push_back(std::move(e));
            }
        }
        blocks.push_back(std::move(entries));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump(1) + "\n";
}

MagicUnitary magic_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw MagicFormatError(std::string("not valid JSON: ") + e.what());
    }
    const std::string root = "certificate";
    const json &format = field(doc, "format", root);
    if (!format.is_string() || format.get<std::string>() != kFormat) {
        throw MagicFormatError("certificate.format: expected \"" + std::string(kFormat) + "\"");
    }
    if (int version = int_field(doc, "version", root); version != kMagicFormatVersion) {
        throw MagicFormatError("certificate.version: unsupported version " + std::to_string(version));
    }
    MagicUnitary u;
    const int dim = int_field(doc, "dim", root);
    const int n = int_field(doc, "vertices", root);
    if (dim <= 0 || n <= 0) throw MagicFormatError("certificate: dim and vertices must be positive");
    u.dim = static_cast<std::size_t>(dim);
    try {
        u.partition = partition_from_cells(field(doc, "cells", root).get<std::vector<std::vector<int>>>(), n);
    } catch (const std::invalid_argument &e) {
        throw MagicFormatError(std::string("certificate.cells: ") + e.what());
    } catch (const json::exception &e) {
        throw MagicFormatError(std::string("certificate.cells: ") + e.what());
    }
    if (doc.contains("w")) {
        WChoice w;
        for (const auto &c : doc.at("w")) {
            if (!c.is_array() || c.size() != 8) throw MagicFormatError("certificate.w: expected 8 coordinates per line");
            w.reps.emplace_back(c.get<Line::Coords>());
        }
        if (static_cast<int>(w.reps.size()) != u.partition.cell_count()) {
            throw MagicFormatError("certificate.w: one representative per cell required");
        }
        u.w = std::move(w);
    }
    const json &blocks = field(doc, "blocks", root);
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != u.partition.cell_count()) {
        throw MagicFormatError("certificate.blocks: one block per cell required");
    }
    bool with_transporters = true;
    for (int i = 0; i < u.partition.cell_count(); i++) {
        const auto &cell = u.partition.cells[static_cast<std::size_t>(i)];
        const json &entries = blocks[static_cast<std::size_t>(i)];
        const std::size_t m = cell.size();
        if (!entries.is_array() || entries.size() != m * m) {
            throw MagicFormatError("certificate.blocks[" + std::to_string(i) + "]: expected " + std::to_string(m * m) + " entries");
        }
        std::vector<RationalMatrix> block;
        std::vector<GroupElementL> movers;
        for (std::size_t k = 0; k < entries.size(); k++) {
            const std::string where = "certificate.blocks[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            const json &e = entries[k];
            if (int_field(e, "y", where) != cell[k / m] || int_field(e, "z", where) != cell[k % m]) {
                throw MagicFormatError(where + ": (y, z) does not follow the cell order");
            }
            BigInt den = big_from(field(e, "denominator", where), where + ".denominator");
            if (den <= 0) throw MagicFormatError(where + ".denominator: must be positive");
            const json &nums = field(e, "numerators", where);
            if (!nums.is_array() || nums.size() != u.dim * u.dim) {
                throw MagicFormatError(where + ".numerators: expected " + std::to_string(u.dim * u.dim) + " values");
            }
            std::vector<Rational> values;
            for (const auto &x : nums) values.emplace_back(big_from(x, where + ".numerators"), den);
            block.emplace_back(u.dim, u.dim, std::move(values));
            if (e.contains("transporter")) {
                try {
                    movers.push_back(GroupElementL::parse(e.at("transporter").get<std::string>()));
                } catch (const std::exception &ex) {
                    throw MagicFormatError(where + ".transporter: " + ex.what());
                }
            } else {
                with_transporters = false;
            }
        }
        u.blocks.push_back(std::move(block));
        u.transporters.push_back(std::move(movers));
    }
    if (!with_transporters) u.transporters.clear();
    return u;
}

}  // namespace qiso
