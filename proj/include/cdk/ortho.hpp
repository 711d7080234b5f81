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

#include <vector>

#include "cdk/measure.hpp"
#include "cdk/multipoly.hpp"

namespace cdk {

/// Strictly increasing subset of {1, ..., n} (1-based elements).
class Subset {
public:
    Subset() = default;
    explicit Subset(std::vector<int> elements);

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    int max_element() const { return elems_.empty() ? 0 : elems_.back(); }

    int sum() const;
    /// Number of even elements (the chi statistic of Pfaffian expansions).
    int count_even() const;
    bool contains(int v) const;
    Subset complement(int n) const;

    std::string str() const;  // "{1,3}", "{}" when empty

    friend bool operator==(const Subset& a, const Subset& b) { return a.elems_ == b.elems_; }
    friend bool operator<(const Subset& a, const Subset& b) { return a.elems_ < b.elems_; }

private:
    std::vector<int> elems_;
};

/// All size-m subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int m);

/// Monic orthogonal polynomials p_0..p_n for a measure, with the norms
/// <p_k, p_k> for k < n (all nonzero; the norm of p_n itself may vanish and
/// is not stored).
struct OrthoSystem {
    Measure measure;
    int n;
    std::vector<MultiPoly> polys;  // p_0 .. p_n, univariate in "x", monic
    std::vector<Rational> norms;   // <p_0,p_0> .. <p_{n-1},p_{n-1}>

    const MultiPoly& poly(int k) const { return polys.at(static_cast<std::size_t>(k)); }
    const Rational& norm(int k) const { return norms.at(static_cast<std::size_t>(k)); }
    /// prod over i in S of <p_{i-1}, p_{i-1}>.
    Rational norm_product(const Subset& s) const;
    /// prod_{i=1}^{n} <p_{i-1}, p_{i-1}>.
    Rational norm_product_all() const;

    Rational poly_value(int k, const Rational& x) const { return eval_univariate(poly(k), x); }
};

/// Gram-Schmidt on 1, x, ..., x^n against the measure pairing. Requires
/// 1 <= n <= |support|; raises DegenerateMeasure when a norm below n
/// vanishes (p_n is still produced when only its own norm vanishes).
OrthoSystem build_system(const Measure& mu, int n);

/// Monic orthogonal family p_0..p_deg with norms h_0..h_{deg-1} all nonzero.
/// Shared by build_system and the kernel routes that need degrees beyond n.
std::pair<std::vector<MultiPoly>, std::vector<Rational>> monic_family(const Measure& mu, int deg);

enum class CdMode { Sum, Quotient };

/// One-variable Christoffel-Darboux kernel
///   K(x,y) = sum_{k<n} p_k(x) p_k(y) / <p_k,p_k>
///          = (p_n(x) p_{n-1}(y) - p_{n-1}(x) p_n(y)) / ((x - y) <p_{n-1},p_{n-1}>).
/// The quotient mode requires x != y.
Rational cd_kernel(const OrthoSystem& sys, const Rational& x, const Rational& y, CdMode mode);

/// p_S(x) = det_{1<=i<=m, j in S} (p_{j-1}(x_i)).
Rational basis_minor(const OrthoSystem& sys, const Subset& s, std::span<const Rational> x);

/// p_S as a polynomial in prefix1..prefixm.
MultiPoly basis_minor_poly(const OrthoSystem& sys, const Subset& s, const std::string& prefix);

}  // namespace cdk
