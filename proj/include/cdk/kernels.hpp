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

#include <map>
#include <utility>
#include <vector>

#include "cdk/ortho.hpp"

namespace cdk {

/// Evaluation point of the multivariable kernel K_m: two coordinate blocks
/// of equal length m, concatenated as z = (x_1..x_m, y_1..y_m).
struct KernelPoint {
    std::vector<Rational> x;
    std::vector<Rational> y;

    int m() const;
    std::vector<Rational> z() const;  // concatenation (x, y)
};

/// Independent evaluation routes for K_m(x, y):
///  - Sum: sum over m-subsets S of p_S(x) p_S(y) / <p_S,p_S>, divided by the
///    Vandermonde factors of both blocks.
///  - TwoPointDet: det(K(x_i, y_j)) divided by the same Vandermonde factors.
///  - Integral: the symmetrized (n-m)-fold integral of
///    prod_{j,k} (z_j - w_k) * Vandermonde(w)^2, normalized by the norms;
///    defined for every point, coincident coordinates included.
///  - OnePointDet: det_{2m x 2m}(p_{n-m+j-1}(z_i)) over the norms of the top
///    m polynomials times Vandermonde(z); needs all 2m coordinates distinct
///    and monic orthogonal polynomials up to degree n+m-1.
enum class KmRoute { Sum, TwoPointDet, Integral, OnePointDet };

Rational km_eval(const OrthoSystem& sys, const KernelPoint& pt, KmRoute route);

/// Square-root parametrization of the Pfaffian form: z_i = t_i^2, so every
/// computation stays rational while the choice of root is exercised by sign
/// flips of the t_i.
struct SqrtChoice {
    std::vector<Rational> t;
    std::vector<Rational> z() const;
};

/// Zeta parametrization: zeta_i + 1/zeta_i = z_i + 2 defines z_i.
struct ZetaChoice {
    std::vector<Rational> zeta;
    std::vector<Rational> z() const;
};

/// K_m(z) = pfaffian((t_j - t_i) K(z_i, z_j)) / prod_{i<j}(t_j - t_i).
Rational km_pfaffian(const OrthoSystem& sys, const SqrtChoice& choice);

/// K_m(z) = prod_i zeta_i^{m-1} * pfaffian((zeta_j - zeta_i) K(z_i, z_j))
///          / prod_{i<j}(zeta_j - zeta_i).
Rational km_pfaffian(const OrthoSystem& sys, const ZetaChoice& choice);

/// K_m(x, x) through the confluent 2m x 2m determinant whose top rows hold
/// p_{n-m+j-1}(x_i) and bottom rows their derivatives, with the sign
/// (-1)^{m(m-1)/2} and denominator prod_{i<=m} <p_{n-i},p_{n-i}> * Vdm(x)^4.
Rational km_confluent(const OrthoSystem& sys, std::span<const Rational> x);

struct HodgePrediction {
    int sign;       // +1 or -1: (-1)^{m(m+1)/2 + sum(S)}
    Subset target;  // S^c within [n]
};

/// Predicted action of the Hodge star on the basis element p_S:
/// phi(p_S) = sign * prod_{i in S} <p_{i-1},p_{i-1}> * p_{S^c}.
HodgePrediction hodge_star(const OrthoSystem& sys, int m, const Subset& s);

/// Defining integral (phi p_S)(x) = integral of p_S(y) Vdm(y, x) d mu_m(y),
/// evaluated at a point x with n - |S| coordinates.
Rational hodge_apply(const OrthoSystem& sys, const Subset& s, std::span<const Rational> x);

struct ContractionSides {
    Rational lhs;  // Vdm(x) Vdm(y) K_m(x, y)
    Rational rhs;  // the contracted integral against K_l
};

/// Contraction identity for 0 <= m <= l <= n:
/// Vdm(x)Vdm(y)K_m(x,y) = (n-l)!(l-m)!/(n-m)! *
///   integral over w of Vdm(x,w) Vdm(y,w) K_l((x,w),(y,w)) d mu_{l-m}(w).
ContractionSides contraction_check(const OrthoSystem& sys, int m, int l, const KernelPoint& pt);

/// Expansion of K_m(x, y) into Schur polynomials s_lambda(x) s_mu(y) over
/// all partition pairs in the m x (n-m) box; the coefficient is a signed
/// complementary minor of the Hankel moment matrix over the norm product.
struct SchurExpansion {
    int n = 0;
    int m = 0;
    std::map<std::pair<Partition, Partition>, Rational> coefficients;
};

SchurExpansion schur_expansion(const OrthoSystem& sys, int m);

/// Partition <-> index-set correspondence S = {lambda_k + m + 1 - k}.
Subset partition_to_subset(const Partition& lambda, int m);
Partition subset_to_partition(const Subset& s);

/// Reconstructs sum coeff * s_lambda(x) s_mu(y) as a polynomial in
/// x1..xm, y1..ym.
MultiPoly schur_reconstruction(const SchurExpansion& expansion);

/// K_m(x, y) as an exact polynomial in x1..xm, y1..ym (subset-sum route
/// followed by exact Vandermonde division of both blocks).
MultiPoly km_polynomial(const OrthoSystem& sys, int m);

/// General expansion over arbitrary bases (e_k), (f_k) of V_n:
/// Vdm(x)Vdm(y)K_m(x,y) = sum over |S|=|T|=m of
///   (-1)^{sum S + sum T} det_{S^c, T^c}(<e_i,f_j>) / det(<e_i,f_j>)
///   * e_S(x) f_T(y).
std::map<std::pair<Subset, Subset>, Rational> general_expansion(
    const OrthoSystem& sys, int m, const std::vector<MultiPoly>& basisE,
    const std::vector<MultiPoly>& basisF);

/// det_{1<=i<=m, j in S}(e_j(x_i)) for an arbitrary univariate family.
MultiPoly family_minor_poly(const std::vector<MultiPoly>& family, const Subset& s,
                            const std::string& prefix);

}  // namespace cdk
