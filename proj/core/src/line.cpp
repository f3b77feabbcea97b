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

#include "qiso/line.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qiso {

Line::Line(const Coords &coords) : coords_(coords) {
    for (int c : coords_) {
        if (c == 0) continue;
        if (c < 0) {
            for (int &v : coords_) v = -v;
        }
        break;
    }
}

Line Line::e(int i, int sign, int j) {
    if (i < 1 || i > 8 || j < 1 || j > 8 || i == j || (sign != 1 && sign != -1)) {
        throw std::invalid_argument("Line::e: need distinct indices in 1..8 and sign +-1");
    }
    Coords c{};
    c[static_cast<std::size_t>(i - 1)] = 1;
    c[static_cast<std::size_t>(j - 1)] = sign;
    return Line(c);
}

Line Line::x(std::initializer_list<int> minus_positions) {
    Coords c;
    c.fill(1);
    for (int p : minus_positions) {
        if (p < 1 || p > 8) throw std::invalid_argument("Line::x: position outside 1..8");
        c[static_cast<std::size_t>(p - 1)] = -1;
    }
    return Line(c);
}

int Line::norm2() const {
    int s = 0;
    for (int c : coords_) s += c * c;
    return s;
}

bool Line::is_root() const {
    int nonzero = 0, minus = 0;
    for (int c : coords_) {
        if (std::abs(c) > 1) return false;
        if (c != 0) nonzero++;
        if (c < 0) minus++;
    }
    if (nonzero == 2) return true;
    return nonzero == 8 && minus % 2 == 0;
}

std::string Line::label() const {
    int nonzero = 0;
    for (int c : coords_) nonzero += c != 0;
    std::string out;
    if (nonzero == 2) {
        int first = -1;
        for (int k = 0; k < 8; k++) {
            if (coords_[static_cast<std::size_t>(k)] == 0) continue;
            if (first < 0) {
                first = k;
                out += "e" + std::to_string(k + 1);
            } else {
                out += (coords_[static_cast<std::size_t>(k)] > 0 ? "+e" : "-e") + std::to_string(k + 1);
            }
        }
        return out;
    }
    out = "x{";
    bool sep = false;
    for (int k = 0; k < 8; k++) {
        if (coords_[static_cast<std::size_t>(k)] < 0) {
            if (sep) out += ",";
            out += std::to_string(k + 1);
            sep = true;
        }
    }
    return out + "}";
}

std::string Line::coords_str() const {
    std::string out = "(";
    for (int k = 0; k < 8; k++) {
        if (k) out += ",";
        out += std::to_string(coords_[static_cast<std::size_t>(k)]);
    }
    return out + ")";
}

int inner(const Line &a, const Line &b) {
    int s = 0;
    for (std::size_t k = 0; k < 8; k++) s += a.coords_[k] * b.coords_[k];
    return s;
}

}  // namespace qiso
