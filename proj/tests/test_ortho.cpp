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

#include "cdk/linalg.hpp"
#include "cdk/ortho.hpp"
#include "cdk/rng.hpp"

using cdk::CdMode;
using cdk::Measure;
using cdk::MultiPoly;
using cdk::OrthoSystem;
using cdk::Rational;
using cdk::Subset;

namespace {

Measure m3() {
    return Measure({Rational(-1), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(1)});
}

MultiPoly univariate(std::initializer_list<Rational> coeffs) {
    MultiPoly out = MultiPoly::constant(Rational(0), {"x"});
    int k = 0;
    for (const Rational& c : coeffs) out += MultiPoly::monomial(c, {"x"}, {k++});
    return out;
}

}  // namespace

TEST_CASE("Gram-Schmidt on the fixture measure") {
    OrthoSystem sys = cdk::build_system(m3(), 2);
    CHECK(sys.poly(0) == univariate({Rational(1)}));
    CHECK(sys.poly(1) == univariate({Rational(0), Rational(1)}));
    CHECK(sys.poly(2) == univariate({Rational(-2, 3), Rational(0), Rational(1)}));
    CHECK(sys.norm(0) == Rational(3));
    CHECK(sys.norm(1) == Rational(2));

    OrthoSystem sys1 = cdk::build_system(m3(), 1);
    CHECK(sys1.poly(1) == univariate({Rational(0), Rational(1)}));
    CHECK(sys1.norms.size() == 1);

    // p_3 = x^3 - x vanishes on the support; its own norm is not needed
    OrthoSystem sys3 = cdk::build_system(m3(), 3);
    CHECK(sys3.poly(3) == univariate({Rational(0), Rational(-1), Rational(0), Rational(1)}));
    CHECK(sys3.norm(2) == Rational(2, 3));
}

TEST_CASE("degeneracy detection") {
    CHECK_THROWS_AS(cdk::build_system(m3(), 4), cdk::DegenerateMeasure);
    CHECK_THROWS_AS(cdk::build_system(m3(), 0), cdk::InvalidArgument);

    // signed weights can degenerate below the support size
    Measure cancel({Rational(0), Rational(1)}, {Rational(1), Rational(-1)});
    CHECK_THROWS_AS(cdk::build_system(cancel, 1), cdk::DegenerateMeasure);
}

TEST_CASE("orthogonality and monicity on random measures") {
    cdk::Rng rng(31);
    int built = 0;
    while (built < 10) {
        int s = static_cast<int>(rng.range(2, 6));
        std::vector<Rational> pts = rng.distinct_rationals(s);
        std::vector<Rational> wts;
        for (int i = 0; i < s; ++i) {
            long w = rng.range(-5, 5);
            while (w == 0) w = rng.range(-5, 5);
            wts.emplace_back(w);
        }
        Measure mu(pts, wts);
        int n = static_cast<int>(rng.range(1, s));
        OrthoSystem sys = [&]() -> OrthoSystem {
            try {
                return cdk::build_system(mu, n);
            } catch (const cdk::DegenerateMeasure&) {
                return OrthoSystem{mu, 0, {}, {}};
            }
        }();
        if (sys.n == 0) continue;
        ++built;

        for (int i = 0; i <= sys.n; ++i) {
            // monic of exact degree i
            CHECK(sys.poly(i).degree_in("x") == i);
            CHECK(sys.poly(i).terms().at({i}) == Rational(1));
            for (int j = 0; j < i; ++j) {
                CHECK(cdk::pair(sys.poly(i), sys.poly(j), mu) == Rational(0));
            }
        }
    }
}

TEST_CASE("Christoffel-Darboux kernel on the fixture") {
    OrthoSystem sys = cdk::build_system(m3(), 2);
    CHECK(cdk::cd_kernel(sys, Rational(0), Rational(1), CdMode::Sum) == Rational(1, 3));
    CHECK(cdk::cd_kernel(sys, Rational(1), Rational(1), CdMode::Sum) == Rational(5, 6));
    CHECK(cdk::cd_kernel(sys, Rational(0), Rational(1), CdMode::Quotient) == Rational(1, 3));
    CHECK_THROWS_AS(cdk::cd_kernel(sys, Rational(1), Rational(1), CdMode::Quotient),
                    cdk::CoincidentPoints);
}

TEST_CASE("sum and quotient forms agree on a grid") {
    cdk::Rng rng(32);
    std::vector<Rational> grid = rng.distinct_rationals(5);
    std::vector<Rational> pts = rng.distinct_rationals(5);
    Measure mu(pts, {Rational(1), Rational(2), Rational(1), Rational(3), Rational(2)});
    OrthoSystem sys = cdk::build_system(mu, 3);
    for (const Rational& x : grid) {
        for (const Rational& y : grid) {
            if (x == y) continue;
            CHECK(cdk::cd_kernel(sys, x, y, CdMode::Sum) == cdk::cd_kernel(sys, x, y, CdMode::Quotient));
        }
    }
}

TEST_CASE("basis minors") {
    OrthoSystem sys = cdk::build_system(m3(), 2);
    std::vector<Rational> x01 = {Rational(0), Rational(1)};
    CHECK(cdk::basis_minor(sys, Subset({1, 2}), x01) == Rational(1));

    std::vector<Rational> x5 = {Rational(5)};
    CHECK(cdk::basis_minor(sys, Subset({1}), x5) == Rational(1));
    CHECK(cdk::basis_minor(sys, Subset({2}), x5) == Rational(5));

    CHECK_THROWS_AS(cdk::basis_minor(sys, Subset({1}), x01), cdk::InvalidArity);
    CHECK_THROWS_AS(cdk::basis_minor(sys, Subset({3}), x5), cdk::InvalidArgument);

    // full minor equals the Vandermonde for any monic system
    OrthoSystem sys3 = cdk::build_system(m3(), 3);
    std::vector<Rational> x = {Rational(0), Rational(1), Rational(-1)};
    CHECK(cdk::basis_minor(sys3, Subset({1, 2, 3}), x) == cdk::vandermonde_value(x));
}

TEST_CASE("subsets enumerate in lexicographic order") {
    auto all = cdk::subsets_of_size(4, 2);
    CHECK(all.size() == 6);
    CHECK(all.front() == Subset({1, 2}));
    CHECK(all[1] == Subset({1, 3}));
    CHECK(all.back() == Subset({3, 4}));

    CHECK(Subset({2, 4}).count_even() == 2);
    CHECK(Subset({1, 3}).count_even() == 0);
    CHECK(Subset({2, 4}).sum() == 6);
    CHECK(Subset({1, 3}).complement(4) == Subset({2, 4}));
    CHECK(Subset().complement(3) == Subset({1, 2, 3}));
    CHECK_THROWS_AS(Subset({2, 1}), cdk::InvalidArgument);
    CHECK_THROWS_AS(Subset({0}), cdk::InvalidArgument);
}
