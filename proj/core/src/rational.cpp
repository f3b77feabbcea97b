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

#include "qiso/rational.hpp"

#include <stdexcept>

namespace qiso {

Rational::Rational(const BigInt &numerator, const BigInt &denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational &Rational::operator+=(const Rational &other) {
    q_ += other.q_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other) {
    q_ -= other.q_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other) {
    q_ *= other.q_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other) {
    if (other.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= other.q_;
    return *this;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream &operator<<(std::ostream &out, const Rational &value) { return out << value.str(); }

}  // namespace qiso
