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

#include "cdk/identities.hpp"

namespace cdk {

namespace {

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::vector<int> zero_based(const Subset& s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (int v : s.elements()) out.push_back(v - 1);
    return out;
}

Rational quadratic(const Rational& a, const Rational& b, const Rational& c, const Rational& xi,
                   const Rational& xj) {
    return a + b * (xi + xj) + c * xi * xj;
}

// Signed subset sum shared by the Ishikawa-Wakayama and subset-summation
// identities: sum over |S| = m of (-1)^{chi(S)} prod_{j not in S} top_j
// * prod_{i<j, same side}(x_j - x_i) q_{ij}.
Rational signed_subset_sum(const std::vector<Rational>& top, const std::vector<Rational>& x,
                           const Rational& a, const Rational& b, const Rational& c) {
    const int dim = static_cast<int>(x.size());
    const int m = dim / 2;
    Rational total(0);
    for (const Subset& s : subsets_of_size(dim, m)) {
        Rational term(1);
        for (int j = 1; j <= dim; ++j) {
            if (!s.contains(j)) term *= top[static_cast<std::size_t>(j - 1)];
        }
        for (int i = 1; i <= dim; ++i) {
            for (int j = i + 1; j <= dim; ++j) {
                if (s.contains(i) != s.contains(j)) continue;
                const Rational& xi = x[static_cast<std::size_t>(i - 1)];
                const Rational& xj = x[static_cast<std::size_t>(j - 1)];
                term *= (xj - xi) * quadratic(a, b, c, xi, xj);
            }
        }
        if (parity_sign(s.count_even()) < 0) term = -term;
        total += term;
    }
    return total;
}

}  // namespace

IdentitySides rains_sides(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidArity("rains_sides: matrix is not square");
    const int dim = a.rows();
    if (dim % 2 != 0) throw InvalidArity("rains_sides: dimension must be even");
    const int m = dim / 2;

    SkewMatrix skew(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) skew.set(i, j, a.at(i, j) - a.at(j, i));
    }
    Rational lhs = pfaffian(skew);

    Rational rhs(0);
    for (const Subset& s : subsets_of_size(dim, m)) {
        std::vector<int> rows = zero_based(s);
        std::vector<int> cols = zero_based(s.complement(dim));
        Rational minor = determinant(select(a, rows, cols));
        if (parity_sign(s.count_even()) < 0) minor = -minor;
        rhs += minor;
    }
    return IdentitySides{std::move(lhs), std::move(rhs)};
}

SundquistValues sundquist_sides(const FreeInput& input, const Subset& s,
                                const std::vector<Rational>& sqrtT) {
    const int dim = static_cast<int>(input.a.size());
    if (dim == 0 || dim % 2 != 0) throw InvalidArity("sundquist_sides: need 2m free variables");
    const int m = dim / 2;
    if (static_cast<int>(input.z.size()) != dim || static_cast<int>(sqrtT.size()) != dim) {
        throw InvalidArity("sundquist_sides: a, z, sqrtT must all have length 2m");
    }
    if (s.size() != m || s.max_element() > dim) {
        throw InvalidArity("sundquist_sides: S must be an m-subset of [2m]");
    }
    for (int i = 0; i < dim; ++i) {
        if (!(sqrtT[static_cast<std::size_t>(i)] * sqrtT[static_cast<std::size_t>(i)] ==
              input.z[static_cast<std::size_t>(i)])) {
            throw InvalidArgument("sundquist_sides: sqrtT is not a square root of z");
        }
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const Rational& ti = sqrtT[static_cast<std::size_t>(i)];
            const Rational& tj = sqrtT[static_cast<std::size_t>(j)];
            if (ti == tj) throw SingularInput("sundquist_sides: sqrtT entries must be distinct");
            if ((ti + tj).is_zero()) throw SingularInput("sundquist_sides: t_i + t_j vanishes");
        }
    }

    const Subset sc = s.complement(dim);
    for (int i : s.elements()) {
        for (int j : sc.elements()) {
            if (input.z[static_cast<std::size_t>(i - 1)] == input.z[static_cast<std::size_t>(j - 1)]) {
                throw SingularInput("sundquist_sides: z coincides across the S boundary");
            }
        }
    }

    // dpi
    Rational prefactor(1);
    Matrix cross(m, m);
    for (int r = 0; r < m; ++r) {
        const int i = s.elements()[static_cast<std::size_t>(r)];
        for (int cidx = 0; cidx < m; ++cidx) {
            const int j = sc.elements()[static_cast<std::size_t>(cidx)];
            Rational dz = input.z[static_cast<std::size_t>(j - 1)] - input.z[static_cast<std::size_t>(i - 1)];
            prefactor *= dz;
            cross.at(r, cidx) = (input.a[static_cast<std::size_t>(j - 1)] -
                                 input.a[static_cast<std::size_t>(i - 1)]) / dz;
        }
    }
    Rational dpi = prefactor * determinant(cross);
    if (parity_sign(m * (m + 1) / 2 + s.sum()) < 0) dpi = -dpi;

    // dpia
    Rational sumProd(1);
    SkewMatrix pf(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Rational tsum = sqrtT[static_cast<std::size_t>(i)] + sqrtT[static_cast<std::size_t>(j)];
            sumProd *= tsum;
            pf.set(i, j, (input.a[static_cast<std::size_t>(j)] - input.a[static_cast<std::size_t>(i)]) / tsum);
        }
    }
    Rational dpia = sumProd * pfaffian(pf);

    SundquistValues out{std::move(dpi), std::move(dpia), std::nullopt};

    // dpib, when a zeta choice accompanies the instance
    if (input.zeta) {
        const std::vector<Rational>& zeta = *input.zeta;
        if (static_cast<int>(zeta.size()) != dim) {
            throw InvalidArity("sundquist_sides: zeta must have length 2m");
        }
        for (int i = 0; i < dim; ++i) {
            if (zeta[static_cast<std::size_t>(i)].is_zero()) {
                throw SingularInput("sundquist_sides: zeta must be nonzero");
            }
            Rational implied = zeta[static_cast<std::size_t>(i)] +
                               zeta[static_cast<std::size_t>(i)].inverse() - Rational(2);
            if (!(implied == input.z[static_cast<std::size_t>(i)])) {
                throw InvalidArgument("sundquist_sides: zeta inconsistent with z");
            }
        }
        Rational zetaProd(1);
        SkewMatrix pfz(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                Rational denom = Rational(1) - zeta[static_cast<std::size_t>(i)] * zeta[static_cast<std::size_t>(j)];
                if (denom.is_zero()) throw SingularInput("sundquist_sides: zeta_i zeta_j = 1");
                zetaProd *= denom;
                pfz.set(i, j, (input.a[static_cast<std::size_t>(j)] - input.a[static_cast<std::size_t>(i)]) / denom);
            }
        }
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                if (zeta[static_cast<std::size_t>(i)] == zeta[static_cast<std::size_t>(j)]) {
                    throw SingularInput("sundquist_sides: zeta entries must be distinct");
                }
            }
        }
        Rational dpib = zetaProd * pfaffian(pfz);
        for (const Rational& zi : zeta) dpib *= zi.pow(1 - m);
        out.dpib = std::move(dpib);
    }
    return out;
}

IdentitySides iw_sides(const FreeInput& input) {
    const int dim = static_cast<int>(input.z.size());
    if (dim == 0 || dim % 2 != 0) throw InvalidArity("iw_sides: need 2m variables");
    if (static_cast<int>(input.x.size()) != dim) throw InvalidArity("iw_sides: x must have length 2m");
    if (!input.aCoef || !input.bCoef || !input.cCoef) {
        throw InvalidArity("iw_sides: quadratic coefficients are required");
    }
    const int m = dim / 2;
    const Rational& a = *input.aCoef;
    const Rational& b = *input.bCoef;
    const Rational& c = *input.cCoef;

    Rational disc = b * b - a * c;
    if (m >= 2 && disc.is_zero()) throw SingularInput("iw_sides: b^2 - ac vanishes");

    SkewMatrix pf(dim);
    Rational denomProd(1);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Rational q = quadratic(a, b, c, input.x[static_cast<std::size_t>(i)],
                                   input.x[static_cast<std::size_t>(j)]);
            if (q.is_zero()) throw SingularInput("iw_sides: quadratic denominator vanishes");
            denomProd *= q;
            pf.set(i, j, (input.z[static_cast<std::size_t>(j)] - input.z[static_cast<std::size_t>(i)]) / q);
        }
    }
    Rational lhs = pfaffian(pf);

    Rational rhs = disc.pow(m * (m - 1) / 2) *
                   signed_subset_sum(input.z, input.x, a, b, c) / denomProd;
    return IdentitySides{std::move(lhs), std::move(rhs)};
}

IdentitySides ssc_sides(const std::vector<Rational>& x, const Rational& aCoef,
                        const Rational& bCoef, const Rational& cCoef) {
    const int dim = static_cast<int>(x.size());
    if (dim == 0 || dim % 2 != 0) throw InvalidArity("ssc_sides: need 2m variables");
    const int m = dim / 2;

    Rational lhs = signed_subset_sum(x, x, aCoef, bCoef, cCoef);
    Rational rhs = (bCoef * bCoef - aCoef * cCoef).pow(m * (m - 1) / 2) * vandermonde_value(x);
    return IdentitySides{std::move(lhs), std::move(rhs)};
}

}  // namespace cdk
