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

#ifndef QISO_MATRIX_HPP
#define QISO_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qiso/rational.hpp"

namespace qiso {

/// Raised when operand shapes do not conform.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Dense exact-rational matrix stored row-major.
///
/// Values are immutable in spirit: every arithmetic operation returns a fresh matrix.
class RationalMatrix {
   public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    /// Rank-one projection v v^T / <v, v>. Throws on the zero vector.
    static RationalMatrix projection_onto(std::span<const long> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Rational> entries() const { return entries_; }

    RationalMatrix transpose() const;
    RationalMatrix scaled(const Rational &factor) const;
    bool is_zero() const;
    bool is_integer() const;
    /// Copy with a single entry replaced.
    RationalMatrix with_entry(std::size_t r, std::size_t c, Rational value) const;

    friend bool operator==(const RationalMatrix &a, const RationalMatrix &b) = default;

    std::string shape_str() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// Exact product. Throws DimensionError when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix mat_add(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix mat_sub(const RationalMatrix &a, const RationalMatrix &b);

/// True iff a is symmetric and idempotent. Throws DimensionError for non-square input.
bool mat_is_projection(const RationalMatrix &a);

/// Kronecker product, a's index outermost.
RationalMatrix kronecker(const RationalMatrix &a, const RationalMatrix &b);

/// Permutation matrix with P(i, perm[i]) = 1.
RationalMatrix permutation_matrix(std::span<const int> perm);

}  // namespace qiso

#endif
