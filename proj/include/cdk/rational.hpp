/*
 * Copyright 2026 The cdk authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "cdk/errors.hpp"

namespace cdk {

/// Exact arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator; the canonical
/// zero is 0/1. The textual form is "p/q" in lowest terms, "p" when q = 1,
/// with a leading '-' on the numerator only.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(mpz_class(n)) {}  // NOLINT: implicit by design
    Rational(long n, long d) {
        if (d == 0) throw InvalidArgument("Rational: zero denominator");
        v_ = mpq_class(mpz_class(n), mpz_class(d));
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" (q > 0 after reduction). Rejects decimals,
    /// exponents, signs on the denominator, and empty input.
    static Rational parse(const std::string& text);

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        mpq_class r(v_.get_den(), v_.get_num());
        r.canonicalize();
        return Rational(r);
    }

    /// Integer power; negative exponents invert first (base must be nonzero).
    Rational pow(long e) const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Principal square root when the value is a perfect rational square.
std::optional<Rational> rational_sqrt(const Rational& v);

/// m! as an exact rational.
Rational factorial(int m);

}  // namespace cdk
