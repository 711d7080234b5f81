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

#include <vector>

#include "cdk/linalg.hpp"
#include "cdk/rng.hpp"

using cdk::Matrix;
using cdk::Rational;
using cdk::SkewMatrix;

namespace {

// Independent determinant oracle: Leibniz-style cofactor expansion.
Rational cofactor_det(const Matrix& a) {
    const int n = a.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return a.at(0, 0);
    Rational total(0);
    for (int j = 0; j < n; ++j) {
        std::vector<int> rows, cols;
        for (int r = 1; r < n; ++r) rows.push_back(r);
        for (int c = 0; c < n; ++c) {
            if (c != j) cols.push_back(c);
        }
        Rational term = a.at(0, j) * cofactor_det(cdk::select(a, rows, cols));
        total += j % 2 == 0 ? term : -term;
    }
    return total;
}

// Independent Pfaffian oracle: signed sum over perfect matchings.
Rational matchings_pfaffian(const SkewMatrix& a, std::vector<int> active) {
    if (active.empty()) return Rational(1);
    Rational total(0);
    const int first = active[0];
    for (std::size_t k = 1; k < active.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t r = 1; r < active.size(); ++r) {
            if (r != k) rest.push_back(active[r]);
        }
        Rational term = a.at(first, active[k]) * matchings_pfaffian(a, rest);
        total += k % 2 == 1 ? term : -term;
    }
    return total;
}

Rational matchings_pfaffian(const SkewMatrix& a) {
    std::vector<int> active;
    for (int i = 0; i < a.dim(); ++i) active.push_back(i);
    return matchings_pfaffian(a, active);
}

Matrix random_matrix(cdk::Rng& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational();
    }
    return m;
}

SkewMatrix random_skew(cdk::Rng& rng, int dim) {
    SkewMatrix s(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) s.set(i, j, rng.rational());
    }
    return s;
}

Matrix to_matrix(const SkewMatrix& s) {
    Matrix m(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        for (int j = 0; j < s.dim(); ++j) m.at(i, j) = s.at(i, j);
    }
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(cdk::determinant(Matrix::identity(3)) == Rational(1));
    CHECK(cdk::determinant(Matrix(0, 0)) == Rational(1));

    Matrix equalRows(2, 2);
    equalRows.at(0, 0) = Rational(1);
    equalRows.at(0, 1) = Rational(2);
    equalRows.at(1, 0) = Rational(1);
    equalRows.at(1, 1) = Rational(2);
    CHECK(cdk::determinant(equalRows) == Rational(0));

    Matrix rect(2, 3);
    CHECK_THROWS_AS(cdk::determinant(rect), cdk::InvalidArity);
}

TEST_CASE("determinant of the monomial Vandermonde matrix at 0, 1, -1") {
    std::vector<Rational> x = {Rational(0), Rational(1), Rational(-1)};
    Matrix v(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) v.at(i, j) = x[static_cast<std::size_t>(i)].pow(j);
    }
    // (1-0)(-1-0)(-1-1) = 2
    CHECK(cdk::determinant(v) == Rational(2));
    CHECK(cdk::vandermonde_value(x) == Rational(2));
}

TEST_CASE("Bareiss elimination agrees with cofactor expansion") {
    cdk::Rng rng(11);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix a = random_matrix(rng, n);
            CHECK(cdk::determinant(a) == cofactor_det(a));
        }
    }
}

TEST_CASE("determinant is alternating in the rows") {
    cdk::Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(rng, 4);
        Matrix b = a;
        for (int c = 0; c < 4; ++c) std::swap(b.at(1, c), b.at(3, c));
        CHECK(cdk::determinant(b) == -cdk::determinant(a));
    }
}

TEST_CASE("pfaffian on the stated examples") {
    SkewMatrix two(2);
    two.set(0, 1, Rational(7));
    CHECK(cdk::pfaffian(two) == Rational(7));

    // dim 4 with upper entries 1..6: 1*6 - 2*5 + 3*4 = 8
    SkewMatrix four(4);
    four.set(0, 1, Rational(1));
    four.set(0, 2, Rational(2));
    four.set(0, 3, Rational(3));
    four.set(1, 2, Rational(4));
    four.set(1, 3, Rational(5));
    four.set(2, 3, Rational(6));
    CHECK(cdk::pfaffian(four) == Rational(8));
    CHECK(matchings_pfaffian(four) == Rational(8));

    CHECK(cdk::pfaffian(SkewMatrix(0)) == Rational(1));
    CHECK_THROWS_AS(SkewMatrix(3), cdk::InvalidArity);
}

TEST_CASE("symbolic-style dim-4 pfaffian identity at random entries") {
    cdk::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        SkewMatrix s = random_skew(rng, 4);
        Rational expected = s.at(0, 1) * s.at(2, 3) - s.at(0, 2) * s.at(1, 3) + s.at(0, 3) * s.at(1, 2);
        CHECK(cdk::pfaffian(s) == expected);
    }
}

TEST_CASE("pfaffian agrees with the matchings oracle and squares to the determinant") {
    cdk::Rng rng(14);
    for (int dim : {2, 4, 6}) {
        for (int trial = 0; trial < 8; ++trial) {
            SkewMatrix s = random_skew(rng, dim);
            Rational pf = cdk::pfaffian(s);
            CHECK(pf == matchings_pfaffian(s));
            CHECK(pf * pf == cdk::determinant(to_matrix(s)));
        }
    }
}

TEST_CASE("skew matrix validation") {
    Matrix notSkew(2, 2);
    notSkew.at(0, 1) = Rational(1);
    notSkew.at(1, 0) = Rational(1);
    CHECK_THROWS_AS(SkewMatrix::from_matrix(notSkew), cdk::InvalidArgument);

    Matrix skew(2, 2);
    skew.at(0, 1) = Rational(5);
    skew.at(1, 0) = Rational(-5);
    CHECK(cdk::pfaffian(SkewMatrix::from_matrix(skew)) == Rational(5));

    SkewMatrix s(2);
    CHECK_THROWS_AS(s.set(0, 0, Rational(1)), cdk::InvalidArgument);
}

TEST_CASE("Cauchy determinant with a quadratic denominator") {
    cdk::Rng rng(15);
    int checked = 0;
    while (checked < 25) {
        int m = static_cast<int>(rng.range(1, 3));
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        Rational disc = b * b - a * c;
        if (disc.is_zero()) continue;
        std::vector<Rational> x = rng.distinct_rationals(m);
        std::vector<Rational> y = rng.distinct_rationals(m);
        Matrix k(m, m);
        Rational denomProd(1);
        bool singular = false;
        for (int i = 0; i < m && !singular; ++i) {
            for (int j = 0; j < m; ++j) {
                Rational q = a + b * (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(j)]) +
                             c * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                if (q.is_zero()) {
                    singular = true;
                    break;
                }
                denomProd *= q;
                k.at(i, j) = q.inverse();
            }
        }
        if (singular) continue;
        Rational rhs = disc.pow(m * (m - 1) / 2) * cdk::vandermonde_value(x) *
                       cdk::vandermonde_value(y) / denomProd;
        CHECK(cdk::determinant(k) == rhs);
        ++checked;
    }
}

TEST_CASE("quadratic factorization identity for nonzero c") {
    cdk::Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.nonzero_rational();
        Rational xi = rng.rational(), xj = rng.rational();
        Rational lhs = a + b * (xi + xj) + c * xi * xj;
        Rational rhs = (a * c - b * b + (c * xi + b) * (c * xj + b)) / c;
        CHECK(lhs == rhs);
    }
}
