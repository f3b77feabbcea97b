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

#ifndef QISO_LINE_HPP
#define QISO_LINE_HPP

#include <array>
#include <compare>
#include <initializer_list>
#include <string>

namespace qiso {

/// A line through an E8 root, stored by its canonical representative:
/// the global sign is chosen so that the first nonzero coordinate is positive.
class Line {
   public:
    using Coords = std::array<int, 8>;

    Line() = default;
    /// Canonicalizes `coords`. Does not require a root; see is_root().
    explicit Line(const Coords &coords);

    /// e_i + sign * e_j, 1-based indices.
    static Line e(int i, int sign, int j);
    /// The all-(+-1) vector with -1 exactly at the listed 1-based positions.
    static Line x(std::initializer_list<int> minus_positions);

    const Coords &coords() const { return coords_; }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int norm2() const;
    /// +-e_i +- e_j, or all +-1 with an even number of -1 entries.
    bool is_root() const;
    /// e.g. "e1+e2", "e3-e7", "x{}", "x{2,4,5,8}" (the all-ones form uses the representative
    /// with first coordinate +1).
    std::string label() const;
    std::string coords_str() const;

    friend int inner(const Line &a, const Line &b);
    friend auto operator<=>(const Line &, const Line &) = default;
    friend bool operator==(const Line &, const Line &) = default;

   private:
    Coords coords_{};
};

int inner(const Line &a, const Line &b);

}  // namespace qiso

#endif
