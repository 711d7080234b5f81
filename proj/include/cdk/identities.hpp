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

#include <optional>
#include <vector>

#include "cdk/linalg.hpp"
#include "cdk/ortho.hpp"

namespace cdk {

/// Free-variable instance consumed by the identity evaluators. Each
/// evaluator validates exactly the fields and nonzero denominators it needs.
struct FreeInput {
    std::vector<Rational> a;     // free variables a_i
    std::vector<Rational> z;     // z_i
    std::vector<Rational> x;     // x_i (quadratic-denominator identities)
    std::optional<std::vector<Rational>> zeta;            // zeta_i + 1/zeta_i = z_i + 2
    std::optional<Rational> aCoef, bCoef, cCoef;          // a + b(x_i+x_j) + c x_i x_j
};

struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

/// Pfaffian expansion of an arbitrary (not necessarily skew) square matrix:
///   pfaff(a_{ij} - a_{ji}) = sum over |S| = m of (-1)^{chi(S)}
///                            det_{i in S, j not in S}(a_{ij}),
/// with chi(S) the number of even elements of S. Both sides are returned.
IdentitySides rains_sides(const Matrix& a);

struct SundquistValues {
    Rational dpi;                  // signed cross-minor determinant form
    Rational dpia;                 // square-root Pfaffian form
    std::optional<Rational> dpib;  // zeta Pfaffian form, when zeta is given
};

/// Triple identity in free variables a_i, z_i with z_i = t_i^2 (and
/// optionally zeta_i per the zeta relation):
///   dpi  = (-1)^{m(m+1)/2 + sum(S)} prod_{i in S, j not in S}(z_j - z_i)
///          det_{i in S, j not in S}((a_j - a_i)/(z_j - z_i))
///   dpia = prod_{i<j}(t_i + t_j) pfaff((a_j - a_i)/(t_j + t_i))
///   dpib = prod_i zeta_i^{1-m} prod_{i<j}(1 - zeta_i zeta_j)
///          pfaff((a_j - a_i)/(1 - zeta_i zeta_j)).
SundquistValues sundquist_sides(const FreeInput& input, const Subset& s,
                                const std::vector<Rational>& sqrtT);

/// Pfaffian of (z_j - z_i)/(a + b(x_i+x_j) + c x_i x_j) against the signed
/// subset sum with the (b^2 - ac) prefactor.
IdentitySides iw_sides(const FreeInput& input);

/// Subset summation identity: the signed sum equals
/// (b^2 - ac)^{m(m-1)/2} prod_{i<j}(x_j - x_i). A polynomial identity with
/// no denominators.
IdentitySides ssc_sides(const std::vector<Rational>& x, const Rational& aCoef,
                        const Rational& bCoef, const Rational& cCoef);

}  // namespace cdk
