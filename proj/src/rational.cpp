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

#include "cdk/rational.hpp"

#include <cctype>
#include <ostream>

namespace cdk {

namespace {

// Grammar: '-'? digit+ ('/' digit+)?  -- the denominator carries no sign.
bool valid_rational_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t numStart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == numStart) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    std::size_t denStart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i != denStart && i == s.size();
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (!valid_rational_text(text)) {
        throw ParseError("not a rational literal: \"" + text + "\"");
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw ParseError("not a rational literal: \"" + text + "\"");
    }
    if (v.get_den() == 0) {
        throw ParseError("zero denominator: \"" + text + "\"");
    }
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    r.canonicalize();  // already coprime, but keeps the invariant explicit
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v.sign() < 0) return std::nullopt;
    mpz_class num = v.numerator();
    mpz_class den = v.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational root = Rational::parse(rn.get_str() + "/" + rd.get_str());
    return root;
}

Rational factorial(int m) {
    if (m < 0) throw InvalidArgument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational::parse(f.get_str());
}

}  // namespace cdk
