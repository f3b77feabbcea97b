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

#ifndef QISO_PAULI_HPP
#define QISO_PAULI_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qiso/line.hpp"
#include "qiso/matrix.hpp"

namespace qiso {

/// Real single-leg Pauli letters. Y is the real matrix XZ, so Y*Y = -I.
/// The enumerator order I < X < Y < Z is the tie-breaking order used throughout.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
/// X exponent of the letter written as X^x Z^z.
inline int x_bit(Letter l) { return l == Letter::X || l == Letter::Y; }
inline int z_bit(Letter l) { return l == Letter::Z || l == Letter::Y; }
Letter letter_from_bits(int x, int z);

/// An 8x8 signed permutation: row r has its single nonzero entry sign[r] in column col[r].
struct SignedPermutation {
    std::array<int, 8> col{};
    std::array<int, 8> sign{};

    Line::Coords apply(const Line::Coords &v) const;
    RationalMatrix matrix() const;
};

/// A 3-leg tensor word M1 (x) M2 (x) M3 with an exact +-1 sign. Leg 1 is the outermost factor.
struct PauliWord {
    std::array<Letter, 3> letters{Letter::I, Letter::I, Letter::I};
    int sign = +1;

    /// Parses "XIZ", "-YYI" (an ASCII '-' or U+2212 minus, optional '+'). Throws std::invalid_argument.
    static PauliWord parse(std::string_view text);
    std::string str() const;
    /// Letters only, no sign.
    std::string letters_str() const;

    SignedPermutation signed_permutation() const;

    friend auto operator<=>(const PauliWord &, const PauliWord &) = default;
    friend bool operator==(const PauliWord &, const PauliWord &) = default;
};

/// sign * (M1 (x) M2 (x) M3) as an integer 8x8 matrix.
RationalMatrix word_matrix(const PauliWord &w);
/// Exact matrix product: word_matrix(word_mul(a, b)) == word_matrix(a) * word_matrix(b).
PauliWord word_mul(const PauliWord &a, const PauliWord &b);
/// True iff a*b == b*a including sign.
bool commutes(const PauliWord &a, const PauliWord &b);

/// Element of L: a Pauli word modulo sign, stored as six bits (x1 z1 x2 z2 x3 z3).
class GroupElementL {
   public:
    GroupElementL() = default;
    explicit GroupElementL(const PauliWord &w);
    static GroupElementL parse(std::string_view letters);

    PauliWord word() const;
    std::string str() const { return word().letters_str(); }
    /// Six-bit encoding: bit 5-2k is the X exponent and bit 4-2k the Z exponent of leg k.
    unsigned bits() const { return bits_; }
    static GroupElementL from_bits(unsigned bits);

    /// Product modulo sign.
    friend GroupElementL operator*(GroupElementL a, GroupElementL b) { return from_bits(a.bits_ ^ b.bits_); }
    bool is_identity() const { return bits_ == 0; }
    /// Number of legs carrying the letter Y.
    int y_count() const;

    /// Lexicographic on letters with I < X < Y < Z.
    friend std::strong_ordering operator<=>(const GroupElementL &a, const GroupElementL &b) {
        return a.word().letters <=> b.word().letters;
    }
    friend bool operator==(const GroupElementL &a, const GroupElementL &b) { return a.bits_ == b.bits_; }

   private:
    unsigned bits_ = 0;
};

/// The six generators XII, IXI, IIX, ZII, IZI, IIZ.
std::vector<GroupElementL> generators_L();
/// All 64 elements in lexicographic letter order, obtained as products of the generators modulo sign.
std::vector<GroupElementL> enumerate_L();

/// Canonical line of +-(M x). Throws std::invalid_argument when x is not a root line.
Line act_on_line(const GroupElementL &g, const Line &x);

}  // namespace qiso

#endif
