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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdk/identities.hpp"
#include "cdk/rng.hpp"

using cdk::FreeInput;
using cdk::Matrix;
using cdk::Rational;
using cdk::Subset;

namespace {

// sigma parametrization keeps t, zeta, and z simultaneously rational
struct Choices {
    std::vector<Rational> t, zeta, z;
};

Choices sigma_choices(const std::vector<Rational>& sigma) {
    Choices out;
    for (const Rational& s : sigma) {
        Rational t = s - s.inverse();
        out.t.push_back(t);
        out.zeta.push_back(s * s);
        out.z.push_back(t * t);
    }
    return out;
}

Choices random_sigma_choices(cdk::Rng& rng, int count) {
    std::vector<Rational> sigma;
    while (static_cast<int>(sigma.size()) < count) {
        Rational s = rng.rational();
        if (s.is_zero() || s == Rational(1) || s == Rational(-1)) continue;
        bool ok = true;
        for (const Rational& prev : sigma) {
            if (s == prev || s == -prev || s == prev.inverse() || s == -prev.inverse()) {
                ok = false;
                break;
            }
        }
        if (ok) sigma.push_back(s);
    }
    return sigma_choices(sigma);
}

}  // namespace

TEST_CASE("Pfaffian expansion of a generic 2x2 matrix") {
    Matrix a(2, 2);
    a.at(0, 0) = Rational(5);
    a.at(0, 1) = Rational(2);
    a.at(1, 0) = Rational(3);
    a.at(1, 1) = Rational(-1);
    cdk::IdentitySides sides = cdk::rains_sides(a);
    CHECK(sides.lhs == Rational(-1));  // a12 - a21
    CHECK(sides.rhs == Rational(-1));  // +a12 - a21
}

TEST_CASE("Pfaffian expansion on a skew input scales by 2^m") {
    // skew 4x4 whose Pfaffian is 8; the skew part doubles every entry
    Matrix a(4, 4);
    Rational upper[4][4] = {};
    upper[0][1] = Rational(1);
    upper[0][2] = Rational(2);
    upper[0][3] = Rational(3);
    upper[1][2] = Rational(4);
    upper[1][3] = Rational(5);
    upper[2][3] = Rational(6);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            a.at(i, j) = upper[i][j];
            a.at(j, i) = -upper[i][j];
        }
    }
    cdk::IdentitySides sides = cdk::rains_sides(a);
    CHECK(sides.lhs == Rational(32));  // 2^2 * 8
    CHECK(sides.rhs == Rational(32));
}

TEST_CASE("Pfaffian expansion on random integer matrices") {
    cdk::Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = trial % 2 == 0 ? 2 : 4;
        Matrix a(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) a.at(i, j) = Rational(rng.range(-9, 9));
        }
        cdk::IdentitySides sides = cdk::rains_sides(a);
        CHECK(sides.lhs == sides.rhs);
    }
    Matrix odd(3, 3);
    CHECK_THROWS_AS(cdk::rains_sides(odd), cdk::InvalidArity);
}

TEST_CASE("triple identity collapses for m = 1") {
    FreeInput input;
    input.a = {Rational(5), Rational(7)};
    input.z = {Rational(1), Rational(4)};
    std::vector<Rational> t = {Rational(1), Rational(2)};

    for (const Subset& s : {Subset({1}), Subset({2})}) {
        cdk::SundquistValues values = cdk::sundquist_sides(input, s, t);
        CHECK(values.dpi == Rational(2));  // a2 - a1
        CHECK(values.dpia == Rational(2));
        CHECK(!values.dpib.has_value());
    }

    // zeta form from sigma = (2, 3): z = (9/4, 64/9)
    Choices choices = sigma_choices({Rational(2), Rational(3)});
    FreeInput withZeta;
    withZeta.a = {Rational(5), Rational(7)};
    withZeta.z = choices.z;
    withZeta.zeta = choices.zeta;
    cdk::SundquistValues values = cdk::sundquist_sides(withZeta, Subset({1}), choices.t);
    CHECK(values.dpi == Rational(2));
    CHECK(values.dpia == Rational(2));
    CHECK(*values.dpib == Rational(2));
}

TEST_CASE("triple identity frozen m = 2 instance") {
    // a = (1,2,3,4), t = (1,2,3,5), S = {1,2}: both sides equal -24
    FreeInput input;
    input.a = {Rational(1), Rational(2), Rational(3), Rational(4)};
    input.z = {Rational(1), Rational(4), Rational(9), Rational(25)};
    std::vector<Rational> t = {Rational(1), Rational(2), Rational(3), Rational(5)};

    cdk::SundquistValues values = cdk::sundquist_sides(input, Subset({1, 2}), t);
    CHECK(values.dpi == Rational(-24));
    CHECK(values.dpia == Rational(-24));
}

TEST_CASE("triple identity on random instances for every subset") {
    cdk::Rng rng(52);
    for (int trial = 0; trial < 25; ++trial) {
        int m = trial % 2 == 0 ? 1 : 2;
        Choices choices = random_sigma_choices(rng, 2 * m);
        FreeInput input;
        input.z = choices.z;
        input.zeta = choices.zeta;
        for (int i = 0; i < 2 * m; ++i) input.a.push_back(rng.rational());

        for (const Subset& s : cdk::subsets_of_size(2 * m, m)) {
            cdk::SundquistValues values = cdk::sundquist_sides(input, s, choices.t);
            CHECK(values.dpi == values.dpia);
            CHECK(values.dpi == *values.dpib);
        }
    }
}

TEST_CASE("triple identity input validation") {
    FreeInput input;
    input.a = {Rational(1), Rational(2)};
    input.z = {Rational(1), Rational(4)};
    std::vector<Rational> wrongRoot = {Rational(1), Rational(3)};
    CHECK_THROWS_AS(cdk::sundquist_sides(input, Subset({1}), wrongRoot), cdk::InvalidArgument);

    std::vector<Rational> repeated = {Rational(1), Rational(1)};
    FreeInput same;
    same.a = input.a;
    same.z = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(cdk::sundquist_sides(same, Subset({1}), repeated), cdk::SingularInput);

    std::vector<Rational> opposite = {Rational(1), Rational(-1)};
    FreeInput mirrored;
    mirrored.a = input.a;
    mirrored.z = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(cdk::sundquist_sides(mirrored, Subset({1}), opposite), cdk::SingularInput);
}

TEST_CASE("quadratic-denominator Pfaffian for m = 1") {
    FreeInput input;
    input.z = {Rational(2), Rational(5)};
    input.x = {Rational(1), Rational(3)};
    input.aCoef = Rational(1);
    input.bCoef = Rational(2);
    input.cCoef = Rational(1);
    cdk::IdentitySides sides = cdk::iw_sides(input);
    // single entry (z2 - z1) / (a + b(x1+x2) + c x1 x2) = 3/12
    CHECK(sides.lhs == Rational(1, 4));
    CHECK(sides.rhs == Rational(1, 4));
}

TEST_CASE("quadratic-denominator Pfaffian closed form at x = z") {
    cdk::Rng rng(53);
    int done = 0;
    while (done < 10) {
        const int m = 2;
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        Rational disc = b * b - a * c;
        if (disc.is_zero()) continue;
        std::vector<Rational> x = rng.distinct_rationals(2 * m);
        FreeInput input;
        input.z = x;
        input.x = x;
        input.aCoef = a;
        input.bCoef = b;
        input.cCoef = c;
        try {
            cdk::IdentitySides sides = cdk::iw_sides(input);
            Rational closed = disc.pow(m * (m - 1));
            for (std::size_t i = 0; i < x.size(); ++i) {
                for (std::size_t j = i + 1; j < x.size(); ++j) {
                    Rational q = a + b * (x[i] + x[j]) + c * x[i] * x[j];
                    closed *= (x[j] - x[i]) / q;
                }
            }
            CHECK(sides.lhs == closed);
            CHECK(sides.lhs == sides.rhs);
            ++done;
        } catch (const cdk::SingularInput&) {
        }
    }
}

TEST_CASE("quadratic-denominator Pfaffian on random instances") {
    cdk::Rng rng(54);
    int done = 0;
    while (done < 25) {
        int m = done % 2 == 0 ? 1 : 2;
        FreeInput input;
        input.aCoef = Rational(1);
        input.bCoef = Rational(0);
        input.cCoef = Rational(-1);
        if (done % 3 == 0) {
            input.aCoef = rng.rational();
            input.bCoef = rng.rational();
            input.cCoef = rng.rational();
        }
        if (m >= 2 && (*input.bCoef * *input.bCoef - *input.aCoef * *input.cCoef).is_zero()) continue;
        for (int i = 0; i < 2 * m; ++i) {
            input.z.push_back(rng.rational());
            input.x.push_back(rng.rational());
        }
        try {
            cdk::IdentitySides sides = cdk::iw_sides(input);
            CHECK(sides.lhs == sides.rhs);
            ++done;
        } catch (const cdk::SingularInput&) {
        }
    }
}

TEST_CASE("subset summation identity for m = 1") {
    std::vector<Rational> x = {Rational(2), Rational(7)};
    cdk::IdentitySides sides = cdk::ssc_sides(x, Rational(3), Rational(1), Rational(-2));
    CHECK(sides.lhs == Rational(5));  // x2 - x1
    CHECK(sides.rhs == Rational(5));
}

TEST_CASE("subset summation identity frozen m = 2 instance") {
    std::vector<Rational> x = {Rational(1), Rational(2), Rational(3), Rational(4)};
    cdk::IdentitySides sides = cdk::ssc_sides(x, Rational(0), Rational(1), Rational(0));
    CHECK(sides.lhs == Rational(12));
    CHECK(sides.rhs == Rational(12));
}

TEST_CASE("subset summation identity with repeated coordinates vanishes") {
    std::vector<Rational> x = {Rational(3), Rational(1), Rational(5), Rational(3)};
    cdk::IdentitySides sides = cdk::ssc_sides(x, Rational(2), Rational(1), Rational(1));
    CHECK(sides.lhs == Rational(0));
    CHECK(sides.rhs == Rational(0));
}

TEST_CASE("subset summation identity on random instances") {
    cdk::Rng rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        int m = trial % 2 == 0 ? 1 : 2;
        std::vector<Rational> x;
        for (int i = 0; i < 2 * m; ++i) x.push_back(rng.rational());
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        cdk::IdentitySides sides = cdk::ssc_sides(x, a, b, c);
        CHECK(sides.lhs == sides.rhs);

        // dependence on the coefficients only through b^2 - ac
        if (!a.is_zero()) {
            cdk::IdentitySides scaled = cdk::ssc_sides(x, Rational(2) * a, b, c / Rational(2));
            CHECK(sides.lhs == scaled.lhs);
        }
    }
}

TEST_CASE("subset summation identity symbolically for m = 1") {
    // both sides as polynomials in x1, x2 with fixed quadratic coefficients
    using cdk::MultiPoly;
    MultiPoly x1 = MultiPoly::variable("x1"), x2 = MultiPoly::variable("x2");
    // S = {1}: +x2, S = {2}: -x1 (chi({2}) = 1); no within-side pairs
    MultiPoly lhs = x2 - x1;
    MultiPoly rhs = x2 - x1;  // (b^2 - ac)^0 * (x2 - x1)
    CHECK(lhs == rhs);
}

TEST_CASE("zeta difference identity") {
    cdk::Rng rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        Rational zi = rng.nonzero_rational(), zj = rng.nonzero_rational();
        Rational xi = zi + zi.inverse() - Rational(2);
        Rational xj = zj + zj.inverse() - Rational(2);
        CHECK(xj - xi == -(zj - zi) * (Rational(1) - zi * zj) / (zi * zj));
    }
}
