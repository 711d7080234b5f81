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

#include "cdk/rational.hpp"

using cdk::Rational;

TEST_CASE("construction keeps lowest terms with positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-5, 1).str() == "-5");
    CHECK_THROWS_AS(Rational(1, 0), cdk::InvalidArgument);
}

TEST_CASE("parse accepts integers and fractions only") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("007") == Rational(7));

    CHECK_THROWS_AS(Rational::parse(""), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("+1"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), cdk::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), cdk::ParseError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), cdk::Error);
    CHECK_THROWS_AS(Rational(0).inverse(), cdk::Error);
}

TEST_CASE("ordering") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("integer powers, negative exponents included") {
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
}

TEST_CASE("rational square roots of perfect squares") {
    CHECK(*cdk::rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(*cdk::rational_sqrt(Rational(0)) == Rational(0));
    CHECK(*cdk::rational_sqrt(Rational(49)) == Rational(7));
    CHECK(!cdk::rational_sqrt(Rational(2)).has_value());
    CHECK(!cdk::rational_sqrt(Rational(-1)).has_value());
    CHECK(!cdk::rational_sqrt(Rational(1, 3)).has_value());
}

TEST_CASE("factorial") {
    CHECK(cdk::factorial(0) == Rational(1));
    CHECK(cdk::factorial(5) == Rational(120));
}
