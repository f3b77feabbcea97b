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

#ifndef QISO_POLYNOMIAL_HPP
#define QISO_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "qiso/matrix.hpp"
#include "qiso/rational.hpp"

namespace qiso {

/// Integer polynomial with coefficients in ascending degree order.
/// The leading coefficient is nonzero unless the polynomial is zero (empty coefficient list).
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    /// (x - root)
    static IntPolynomial linear(const BigInt &root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt> &coefficients() const { return coeffs_; }
    /// Coefficient of x^k, zero beyond the degree.
    BigInt coefficient(int k) const;

    IntPolynomial operator*(const IntPolynomial &other) const;
    IntPolynomial pow(unsigned exponent) const;
    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

    std::string str() const;

   private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// det(xI - a) by the division-free Berkowitz algorithm.
/// Throws DimensionError for non-square input and std::invalid_argument for non-integer entries.
IntPolynomial char_poly(const RationalMatrix &a);

}  // namespace qiso

#endif
