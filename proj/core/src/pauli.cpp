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

#include "qiso/pauli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qiso {

namespace {

// Single-leg signed permutations: row r -> (column, sign).
struct LegPerm {
    int col[2];
    int sign[2];
};

LegPerm leg_perm(Letter l) {
    switch (l) {
        case Letter::I:
            return {{0, 1}, {1, 1}};
        case Letter::X:
            return {{1, 0}, {1, 1}};
        case Letter::Z:
            return {{0, 1}, {1, -1}};
        case Letter::Y:  // XZ = [[0, -1], [1, 0]]
            return {{1, 0}, {-1, 1}};
    }
    return {{0, 1}, {1, 1}};
}

}  // namespace

char letter_char(Letter l) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(l)];
}

Letter letter_from_bits(int x, int z) {
    if (x && z) return Letter::Y;
    if (x) return Letter::X;
    if (z) return Letter::Z;
    return Letter::I;
}

Line::Coords SignedPermutation::apply(const Line::Coords &v) const {
    Line::Coords out{};
    for (std::size_t r = 0; r < 8; r++) out[r] = sign[r] * v[static_cast<std::size_t>(col[r])];
    return out;
}

RationalMatrix SignedPermutation::matrix() const {
    std::vector<Rational> entries(64);
    for (std::size_t r = 0; r < 8; r++) entries[r * 8 + static_cast<std::size_t>(col[r])] = sign[r];
    return {8, 8, std::move(entries)};
}

PauliWord PauliWord::parse(std::string_view text) {
    PauliWord w;
    if (text.starts_with("\xE2\x88\x92")) {  // U+2212
        w.sign = -1;
        text.remove_prefix(3);
    } else if (text.starts_with('-')) {
        w.sign = -1;
        text.remove_prefix(1);
    } else if (text.starts_with('+')) {
        text.remove_prefix(1);
    }
    if (text.size() != 3) throw std::invalid_argument("PauliWord::parse: expected three letters");
    for (std::size_t k = 0; k < 3; k++) {
        switch (text[k]) {
            case 'I':
                w.letters[k] = Letter::I;
                break;
            case 'X':
                w.letters[k] = Letter::X;
                break;
            case 'Y':
                w.letters[k] = Letter::Y;
                break;
            case 'Z':
                w.letters[k] = Letter::Z;
                break;
            default:
                throw std::invalid_argument(std::string("PauliWord::parse: bad letter '") + text[k] + "'");
        }
    }
    return w;
}

std::string PauliWord::letters_str() const {
    std::string s;
    for (Letter l : letters) s += letter_char(l);
    return s;
}

std::string PauliWord::str() const { return (sign < 0 ? "-" : "") + letters_str(); }

SignedPermutation PauliWord::signed_permutation() const {
    SignedPermutation p;
    LegPerm legs[3] = {leg_perm(letters[0]), leg_perm(letters[1]), leg_perm(letters[2])};
    for (int r = 0; r < 8; r++) {
        int r1 = (r >> 2) & 1, r2 = (r >> 1) & 1, r3 = r & 1;
        p.col[static_cast<std::size_t>(r)] = legs[0].col[r1] * 4 + legs[1].col[r2] * 2 + legs[2].col[r3];
        p.sign[static_cast<std::size_t>(r)] = sign * legs[0].sign[r1] * legs[1].sign[r2] * legs[2].sign[r3];
    }
    return p;
}

RationalMatrix word_matrix(const PauliWord &w) { return w.signed_permutation().matrix(); }

PauliWord word_mul(const PauliWord &a, const PauliWord &b) {
    // X^p Z^q X^r Z^s = (-1)^{q r} X^{p+r} Z^{q+s}, exponents mod 2.
    PauliWord out;
    out.sign = a.sign * b.sign;
    for (std::size_t k = 0; k < 3; k++) {
        int p = x_bit(a.letters[k]), q = z_bit(a.letters[k]);
        int r = x_bit(b.letters[k]), s = z_bit(b.letters[k]);
        if (q && r) out.sign = -out.sign;
        out.letters[k] = letter_from_bits(p ^ r, q ^ s);
    }
    return out;
}

bool commutes(const PauliWord &a, const PauliWord &b) {
    int anti = 0;
    for (std::size_t k = 0; k < 3; k++) {
        int p = x_bit(a.letters[k]), q = z_bit(a.letters[k]);
        int r = x_bit(b.letters[k]), s = z_bit(b.letters[k]);
        anti += (p * s + q * r) & 1;
    }
    return anti % 2 == 0;
}

GroupElementL::GroupElementL(const PauliWord &w) {
    for (std::size_t k = 0; k < 3; k++) {
        bits_ |= static_cast<unsigned>(x_bit(w.letters[k])) << (5 - 2 * k);
        bits_ |= static_cast<unsigned>(z_bit(w.letters[k])) << (4 - 2 * k);
    }
}

GroupElementL GroupElementL::parse(std::string_view letters) {
    PauliWord w = PauliWord::parse(letters);
    return GroupElementL(w);
}

GroupElementL GroupElementL::from_bits(unsigned bits) {
    if (bits >= 64) throw std::invalid_argument("GroupElementL::from_bits: more than six bits");
    GroupElementL g;
    g.bits_ = bits;
    return g;
}

PauliWord GroupElementL::word() const {
    PauliWord w;
    for (std::size_t k = 0; k < 3; k++) {
        int x = (bits_ >> (5 - 2 * k)) & 1;
        int z = (bits_ >> (4 - 2 * k)) & 1;
        w.letters[k] = letter_from_bits(x, z);
    }
    return w;
}

int GroupElementL::y_count() const {
    int n = 0;
    for (Letter l : word().letters) n += l == Letter::Y;
    return n;
}

std::vector<GroupElementL> generators_L() {
    std::vector<GroupElementL> gens;
    for (const char *s : {"XII", "IXI", "IIX", "ZII", "IZI", "IIZ"}) gens.push_back(GroupElementL::parse(s));
    return gens;
}

std::vector<GroupElementL> enumerate_L() {
    // Closure of the generators under word multiplication, with signs quotiented away.
    std::vector<PauliWord> frontier{PauliWord{}};
    std::set<std::array<Letter, 3>> seen{PauliWord{}.letters};
    std::vector<GroupElementL> out{GroupElementL(PauliWord{})};
    std::vector<PauliWord> gens;
    for (const auto &g : generators_L()) gens.push_back(g.word());
    while (!frontier.empty()) {
        std::vector<PauliWord> next;
        for (const auto &w : frontier) {
            for (const auto &g : gens) {
                PauliWord p = word_mul(w, g);
                p.sign = +1;
                if (seen.insert(p.letters).second) {
                    next.push_back(p);
                    out.emplace_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Line act_on_line(const GroupElementL &g, const Line &x) {
    if (!x.is_root()) throw std::invalid_argument("act_on_line: " + x.coords_str() + " is not a root line");
    return Line(g.word().signed_permutation().apply(x.coords()));
}

}  // namespace qiso
