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

#ifndef QISO_RATIONAL_HPP
#define QISO_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace qiso {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt &value) : q_(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const BigInt &numerator, const BigInt &denominator);
    Rational(long numerator, long denominator);

    const BigInt &numerator() const { return q_.get_num(); }
    const BigInt &denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    /// "p/q", or "p" for integers.
    std::string str() const;
    const mpq_class &raw() const { return q_; }

   private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

}  // namespace qiso

#endif
