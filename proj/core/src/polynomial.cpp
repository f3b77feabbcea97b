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

#include "qiso/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qiso {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::linear(const BigInt &root) { return IntPolynomial({BigInt(-root), BigInt(1)}); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial &other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        for (std::size_t j = 0; j < other.coeffs_.size(); j++) {
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result({BigInt(1)});
    IntPolynomial base = *this;
    while (exponent) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; k--) {
        const BigInt &c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k > 0) out << "x";
        if (k > 1) out << "^" << k;
        first = false;
    }
    return out.str();
}

IntPolynomial char_poly(const RationalMatrix &a) {
    if (!a.is_square()) throw DimensionError("char_poly: non-square " + a.shape_str());
    if (!a.is_integer()) throw std::invalid_argument("char_poly: matrix has non-integer entries");
    const std::size_t n = a.rows();

    // Sparse rows of the integer matrix; adjacency inputs are mostly zero.
    struct Entry {
        std::size_t col;
        BigInt value;
    };
    std::vector<std::vector<Entry>> rows(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            if (!a(r, c).is_zero()) rows[r].push_back({c, a(r, c).numerator()});
        }
    }
    auto entry = [&](std::size_t r, std::size_t c) -> BigInt { return a(r, c).numerator(); };

    // Coefficients highest degree first while iterating.
    std::vector<BigInt> poly{BigInt(1), BigInt(-entry(0, 0))};
    std::vector<BigInt> v, next, col0;
    for (std::size_t r = 1; r < n; r++) {
        // col0 = [1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S] with M the leading r x r block.
        col0.assign(r + 2, BigInt(0));
        col0[0] = 1;
        col0[1] = -entry(r, r);
        v.assign(r, BigInt(0));
        for (std::size_t i = 0; i < r; i++) v[i] = entry(i, r);
        next.assign(r, BigInt(0));
        for (std::size_t p = 0; p < r; p++) {
            BigInt dot = 0;
            for (const auto &e : rows[r]) {
                if (e.col >= r) break;
                mpz_addmul(dot.get_mpz_t(), e.value.get_mpz_t(), v[e.col].get_mpz_t());
            }
            col0[p + 2] = -dot;
            if (p + 1 == r) break;
            for (std::size_t i = 0; i < r; i++) {
                BigInt &acc = next[i];
                acc = 0;
                for (const auto &e : rows[i]) {
                    if (e.col >= r) break;
                    if (e.value == 1) {
                        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), v[e.col].get_mpz_t());
                    } else {
                        mpz_addmul(acc.get_mpz_t(), e.value.get_mpz_t(), v[e.col].get_mpz_t());
                    }
                }
            }
            std::swap(v, next);
        }
        std::vector<BigInt> updated(r + 2);
        for (std::size_t i = 0; i < r + 2; i++) {
            BigInt acc = 0;
            for (std::size_t j = 0; j <= std::min(i, r); j++) {
                mpz_addmul(acc.get_mpz_t(), col0[i - j].get_mpz_t(), poly[j].get_mpz_t());
            }
            updated[i] = std::move(acc);
        }
        poly = std::move(updated);
    }
    std::reverse(poly.begin(), poly.end());
    return IntPolynomial(std::move(poly));
}

}  // namespace qiso
