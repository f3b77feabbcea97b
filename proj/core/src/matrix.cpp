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

#include "qiso/matrix.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace qiso {

namespace {

/// A matrix rewritten over a common denominator: entries = numerators / denominator.
struct ScaledForm {
    BigInt denominator{1};
    std::vector<std::int64_t> small;  // filled only when every numerator fits comfortably
    std::vector<BigInt> big;
    std::int64_t max_abs = 0;
    bool fits = true;
};

ScaledForm scaled_form(const RationalMatrix &m) {
    ScaledForm out;
    for (const auto &e : m.entries()) {
        if (e.denominator() != 1) {
            mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), e.denominator().get_mpz_t());
        }
    }
    out.big.reserve(m.entries().size());
    for (const auto &e : m.entries()) {
        BigInt v = e.numerator() * (out.denominator / e.denominator());
        out.big.push_back(std::move(v));
    }
    // Numerators above 2^30 take the BigInt path; mat_mul also bounds the accumulated sum.
    for (const auto &v : out.big) {
        if (!v.fits_slong_p()) {
            out.fits = false;
            break;
        }
        long x = v.get_si();
        std::int64_t a = std::llabs(x);
        if (a > (std::int64_t{1} << 30)) {
            out.fits = false;
            break;
        }
        if (a > out.max_abs) out.max_abs = a;
    }
    if (out.fits) {
        out.small.reserve(out.big.size());
        for (const auto &v : out.big) out.small.push_back(v.get_si());
    }
    return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("RationalMatrix: dimensions must be positive");
    }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("RationalMatrix: dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        std::ostringstream msg;
        msg << "RationalMatrix: " << entries_.size() << " entries for shape " << shape_str();
        throw DimensionError(msg.str());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) m.entries_[i * n + i] = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Rational> entries;
    entries.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) throw DimensionError("RationalMatrix::from_rows: ragged rows");
        for (long v : row) entries.emplace_back(v);
    }
    return {r, c, std::move(entries)};
}

RationalMatrix RationalMatrix::projection_onto(std::span<const long> v) {
    long norm2 = 0;
    for (long x : v) norm2 += x * x;
    if (norm2 == 0) throw std::domain_error("projection_onto: zero vector");
    std::size_t n = v.size();
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) entries.emplace_back(v[i] * v[j], norm2);
    }
    return {n, n, std::move(entries)};
}

RationalMatrix RationalMatrix::transpose() const {
    std::vector<Rational> t;
    t.reserve(entries_.size());
    for (std::size_t c = 0; c < cols_; c++) {
        for (std::size_t r = 0; r < rows_; r++) t.push_back((*this)(r, c));
    }
    return {cols_, rows_, std::move(t)};
}

RationalMatrix RationalMatrix::scaled(const Rational &factor) const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e * factor);
    return {rows_, cols_, std::move(out)};
}

bool RationalMatrix::is_zero() const {
    for (const auto &e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool RationalMatrix::is_integer() const {
    for (const auto &e : entries_) {
        if (!e.is_integer()) return false;
    }
    return true;
}

RationalMatrix RationalMatrix::with_entry(std::size_t r, std::size_t c, Rational value) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("with_entry: index outside " + shape_str());
    RationalMatrix copy = *this;
    copy.entries_[r * cols_ + c] = std::move(value);
    return copy;
}

std::string RationalMatrix::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

RationalMatrix mat_mul(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: cannot multiply " + a.shape_str() + " by " + b.shape_str());
    }
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    ScaledForm sa = scaled_form(a);
    ScaledForm sb = scaled_form(b);
    BigInt den = sa.denominator * sb.denominator;
    std::vector<Rational> out;
    out.reserve(n * m);

    // Integer fast path: |sum| <= k * max|a| * max|b| must stay below 2^62.
    bool small = sa.fits && sb.fits;
    if (small && sa.max_abs > 0 && sb.max_abs > 0) {
        __int128 bound = static_cast<__int128>(k) * sa.max_abs * sb.max_abs;
        small = bound < (static_cast<__int128>(1) << 62);
    }
    if (small) {
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < m; j++) {
                std::int64_t acc = 0;
                for (std::size_t t = 0; t < k; t++) acc += sa.small[i * k + t] * sb.small[t * m + j];
                if (acc == 0) {
                    out.emplace_back();
                } else {
                    out.emplace_back(BigInt(static_cast<long>(acc)), den);
                }
            }
        }
    } else {
        BigInt acc;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < m; j++) {
                acc = 0;
                for (std::size_t t = 0; t < k; t++) {
                    mpz_addmul(acc.get_mpz_t(), sa.big[i * k + t].get_mpz_t(), sb.big[t * m + j].get_mpz_t());
                }
                out.emplace_back(acc, den);
            }
        }
    }
    return {n, m, std::move(out)};
}

RationalMatrix mat_add(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_add: shapes " + a.shape_str() + " and " + b.shape_str() + " differ");
    }
    std::vector<Rational> out;
    out.reserve(a.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); i++) out.push_back(a.entries()[i] + b.entries()[i]);
    return {a.rows(), a.cols(), std::move(out)};
}

RationalMatrix mat_sub(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_sub: shapes " + a.shape_str() + " and " + b.shape_str() + " differ");
    }
    std::vector<Rational> out;
    out.reserve(a.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); i++) out.push_back(a.entries()[i] - b.entries()[i]);
    return {a.rows(), a.cols(), std::move(out)};
}

bool mat_is_projection(const RationalMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("mat_is_projection: non-square " + a.shape_str());
    }
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = r + 1; c < a.cols(); c++) {
            if (a(r, c) != a(c, r)) return false;
        }
    }
    return mat_mul(a, a) == a;
}

RationalMatrix kronecker(const RationalMatrix &a, const RationalMatrix &b) {
    const std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
    std::vector<Rational> out(rows * cols);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out[(i * b.rows() + k) * cols + (j * b.cols() + l)] = a(i, j) * b(k, l);
                }
            }
        }
    }
    return {rows, cols, std::move(out)};
}

RationalMatrix permutation_matrix(std::span<const int> perm) {
    const std::size_t n = perm.size();
    std::vector<Rational> out(n * n);
    for (std::size_t i = 0; i < n; i++) {
        if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= n) {
            throw std::invalid_argument("permutation_matrix: index out of range");
        }
        out[i * n + static_cast<std::size_t>(perm[i])] = 1;
    }
    return {n, n, std::move(out)};
}

}  // namespace qiso
