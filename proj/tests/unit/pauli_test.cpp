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


#include <gtest/gtest.h>

#include <set>

#include "qiso/pauli.hpp"
#include "qiso/roots.hpp"

namespace qiso {
namespace {

RationalMatrix column(const Line &x) {
    std::vector<Rational> v;
    for (int c : x.coords()) v.emplace_back(c);
    return RationalMatrix(8, 1, v);
}

TEST(Pauli, SingleLetterSquares) {
    const auto i2 = RationalMatrix::identity(8);
    EXPECT_EQ(mat_mul(word_matrix(PauliWord::parse("XII")), word_matrix(PauliWord::parse("XII"))), i2);
    EXPECT_EQ(mat_mul(word_matrix(PauliWord::parse("IZI")), word_matrix(PauliWord::parse("IZI"))), i2);
    EXPECT_EQ(mat_mul(word_matrix(PauliWord::parse("IIY")), word_matrix(PauliWord::parse("IIY"))), i2.scaled(-1));
}

TEST(Pauli, YIsXTimesZ) {
    EXPECT_EQ(mat_mul(word_matrix(PauliWord::parse("XII")), word_matrix(PauliWord::parse("ZII"))),
              word_matrix(PauliWord::parse("YII")));
}

TEST(Pauli, ParseAndFormatRoundTrip) {
    for (const char *text : {"XIZ", "-YYI", "III", "-ZZZ"}) EXPECT_EQ(PauliWord::parse(text).str(), text);
    EXPECT_THROW(PauliWord::parse("XQZ"), std::invalid_argument);
    EXPECT_THROW(PauliWord::parse("XZ"), std::invalid_argument);
}

TEST(Pauli, WordProductMatchesMatrixProduct) {
    auto group = enumerate_L();
    for (const auto &a : group) {
        for (const auto &b : group) {
            auto ab = word_mul(a.word(), b.word());
            ASSERT_EQ(word_matrix(ab), mat_mul(word_matrix(a.word()), word_matrix(b.word()))) << a.str() << " " << b.str();
        }
    }
}

TEST(Pauli, CommutationMatchesMatrices) {
    auto group = enumerate_L();
    for (std::size_t i = 0; i < group.size(); i += 5) {
        for (std::size_t j = 0; j < group.size(); j += 3) {
            auto a = word_matrix(group[i].word()), b = word_matrix(group[j].word());
            EXPECT_EQ(commutes(group[i].word(), group[j].word()), mat_mul(a, b) == mat_mul(b, a));
        }
    }
}

TEST(GroupL, HasSixtyFourDistinctElementsGeneratedBySix) {
    auto group = enumerate_L();
    EXPECT_EQ(group.size(), 64u);
    std::set<unsigned> bits;
    for (const auto &g : group) bits.insert(g.bits());
    EXPECT_EQ(bits.size(), 64u);
    EXPECT_EQ(generators_L().size(), 6u);
    EXPECT_TRUE(std::is_sorted(group.begin(), group.end()));
    EXPECT_EQ(group.front().str(), "III");
    EXPECT_EQ(group.back().str(), "ZZZ");
}

TEST(GroupL, ProductIsXorAndYCountIsLetterCount) {
    EXPECT_EQ(GroupElementL::parse("XII") * GroupElementL::parse("ZII"), GroupElementL::parse("YII"));
    EXPECT_EQ(GroupElementL::parse("YYZ").y_count(), 2);
    for (unsigned b = 0; b < 64; b++) EXPECT_EQ(GroupElementL::from_bits(b).bits(), b);
}

TEST(GroupL, ActionMatchesSignedPermutationMatrix) {
    auto lines = build_root_lines();
    for (const auto &g : enumerate_L()) {
        auto m = word_matrix(g.word());
        for (const auto &x : lines) {
            auto image = mat_mul(m, column(x));
            Line::Coords c{};
            for (std::size_t k = 0; k < 8; k++) c[k] = static_cast<int>(image(k, 0).numerator().get_si());
            ASSERT_EQ(act_on_line(g, x), Line(c)) << g.str() << " " << x.label();
        }
    }
}

TEST(GroupL, WordMatricesAreOrthogonal) {
    for (const auto &g : enumerate_L()) {
        auto m = word_matrix(g.word());
        EXPECT_EQ(mat_mul(m, m.transpose()), RationalMatrix::identity(8)) << g.str();
    }
}

}  // namespace
}  // namespace qiso
