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

#include "cdk/kernels.hpp"

#include <algorithm>
#include <functional>

#include "cdk/linalg.hpp"

namespace cdk {

namespace {

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// p_0..p_{upTo}; reuses the system's polynomials when they already reach
// far enough, otherwise re-runs Gram-Schmidt on the measure.
std::vector<MultiPoly> polys_up_to(const OrthoSystem& sys, int upTo) {
    if (upTo <= sys.n) return sys.polys;
    return monic_family(sys.measure, upTo).first;
}

std::vector<Rational> concat(std::span<const Rational> a, std::span<const Rational> b) {
    std::vector<Rational> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// 0-based row/column indices of the complement of s within [n].
std::vector<int> complement_indices(const Subset& s, int n) {
    Subset comp = s.complement(n);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(comp.size()));
    for (int v : comp.elements()) out.push_back(v - 1);
    return out;
}

}  // namespace

int KernelPoint::m() const {
    if (x.size() != y.size()) throw InvalidArity("KernelPoint: blocks differ in length");
    return static_cast<int>(x.size());
}

std::vector<Rational> KernelPoint::z() const { return concat(x, y); }

std::vector<Rational> SqrtChoice::z() const {
    std::vector<Rational> out;
    out.reserve(t.size());
    for (const Rational& v : t) out.push_back(v * v);
    return out;
}

std::vector<Rational> ZetaChoice::z() const {
    std::vector<Rational> out;
    out.reserve(zeta.size());
    for (const Rational& v : zeta) {
        if (v.is_zero()) throw InvalidArgument("ZetaChoice: zeta must be nonzero");
        out.push_back(v + v.inverse() - Rational(2));
    }
    return out;
}

Rational km_eval(const OrthoSystem& sys, const KernelPoint& pt, KmRoute route) {
    const int m = pt.m();
    const int n = sys.n;
    if (m > n) throw InvalidArgument("km_eval: m exceeds the degree bound n");

    switch (route) {
        case KmRoute::Sum: {
            if (!pairwise_distinct(pt.x) || !pairwise_distinct(pt.y)) {
                throw CoincidentPoints("km_eval: subset-sum route needs distinct coordinates per block");
            }
            Rational total(0);
            for (const Subset& s : subsets_of_size(n, m)) {
                total += basis_minor(sys, s, pt.x) * basis_minor(sys, s, pt.y) / sys.norm_product(s);
            }
            return total / (vandermonde_value(pt.x) * vandermonde_value(pt.y));
        }

        case KmRoute::TwoPointDet: {
            if (!pairwise_distinct(pt.x) || !pairwise_distinct(pt.y)) {
                throw CoincidentPoints("km_eval: determinant route needs distinct coordinates per block");
            }
            Matrix k(m, m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    k.at(i, j) = cd_kernel(sys, pt.x[static_cast<std::size_t>(i)],
                                           pt.y[static_cast<std::size_t>(j)], CdMode::Sum);
                }
            }
            return determinant(k) / (vandermonde_value(pt.x) * vandermonde_value(pt.y));
        }

        case KmRoute::Integral: {
            const std::vector<Rational> z = pt.z();
            Rational integral = integrate_sym_fn(
                sys.measure, n - m, [&](std::span<const Rational> w) {
                    Rational prod(1);
                    for (const Rational& zj : z) {
                        for (const Rational& wk : w) prod *= zj - wk;
                    }
                    Rational vdm = vandermonde_value(w);
                    return prod * vdm * vdm;
                });
            return integral / sys.norm_product_all();
        }

        case KmRoute::OnePointDet: {
            const std::vector<Rational> z = pt.z();
            if (!pairwise_distinct(z)) {
                throw CoincidentPoints("km_eval: one-point route needs all 2m coordinates distinct");
            }
            if (m == 0) return Rational(1);
            const std::vector<MultiPoly> polys = polys_up_to(sys, n + m - 1);
            Matrix a(2 * m, 2 * m);
            for (int i = 0; i < 2 * m; ++i) {
                for (int j = 0; j < 2 * m; ++j) {
                    a.at(i, j) = eval_univariate(polys[static_cast<std::size_t>(n - m + j)],
                                                 z[static_cast<std::size_t>(i)]);
                }
            }
            Rational denom = vandermonde_value(z);
            for (int i = 1; i <= m; ++i) denom *= sys.norm(n - i);
            return determinant(a) / denom;
        }
    }
    throw InvalidArgument("km_eval: unknown route");
}

namespace {

// Shared core of both Pfaffian forms: pfaffian((c_j - c_i) K(z_i, z_j))
// over prod_{i<j}(c_j - c_i), for a coefficient vector c.
Rational pfaffian_form(const OrthoSystem& sys, std::span<const Rational> c,
                       std::span<const Rational> z) {
    const int dim = static_cast<int>(c.size());
    if (dim == 0 || dim % 2 != 0) throw InvalidArity("km_pfaffian: need 2m coordinates");
    const int m = dim / 2;
    if (m > sys.n) throw InvalidArgument("km_pfaffian: m exceeds the degree bound n");
    if (!pairwise_distinct(c)) throw CoincidentPoints("km_pfaffian: parameters must be distinct");

    SkewMatrix a(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Rational k = cd_kernel(sys, z[static_cast<std::size_t>(i)],
                                   z[static_cast<std::size_t>(j)], CdMode::Sum);
            a.set(i, j, (c[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(i)]) * k);
        }
    }
    return pfaffian(a) / vandermonde_value(c);
}

}  // namespace

Rational km_pfaffian(const OrthoSystem& sys, const SqrtChoice& choice) {
    return pfaffian_form(sys, choice.t, choice.z());
}

Rational km_pfaffian(const OrthoSystem& sys, const ZetaChoice& choice) {
    const std::vector<Rational> z = choice.z();  // validates nonzero zeta
    const int dim = static_cast<int>(choice.zeta.size());
    const int m = dim / 2;
    Rational prefactor(1);
    for (const Rational& zeta : choice.zeta) prefactor *= zeta.pow(m - 1);
    return prefactor * pfaffian_form(sys, choice.zeta, z);
}

Rational km_confluent(const OrthoSystem& sys, std::span<const Rational> x) {
    const int m = static_cast<int>(x.size());
    const int n = sys.n;
    if (m > n) throw InvalidArgument("km_confluent: m exceeds the degree bound n");
    if (!pairwise_distinct(x)) throw CoincidentPoints("km_confluent: coordinates must be distinct");
    if (m == 0) return Rational(1);

    const std::vector<MultiPoly> polys = polys_up_to(sys, n + m - 1);
    std::vector<MultiPoly> derivs;
    derivs.reserve(static_cast<std::size_t>(2 * m));
    for (int j = 0; j < 2 * m; ++j) {
        derivs.push_back(polys[static_cast<std::size_t>(n - m + j)].derivative("x"));
    }

    Matrix a(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < 2 * m; ++j) {
            a.at(i, j) = eval_univariate(polys[static_cast<std::size_t>(n - m + j)],
                                         x[static_cast<std::size_t>(i)]);
            a.at(m + i, j) = eval_univariate(derivs[static_cast<std::size_t>(j)],
                                             x[static_cast<std::size_t>(i)]);
        }
    }
    Rational denom = vandermonde_value(x).pow(4);
    for (int i = 1; i <= m; ++i) denom *= sys.norm(n - i);
    Rational det = determinant(a);
    return parity_sign(m * (m - 1) / 2) == 1 ? det / denom : -det / denom;
}

HodgePrediction hodge_star(const OrthoSystem& sys, int m, const Subset& s) {
    if (s.size() != m) throw InvalidArity("hodge_star: |S| must equal m");
    if (s.max_element() > sys.n) throw InvalidArgument("hodge_star: S exceeds [n]");
    int sign = parity_sign(m * (m + 1) / 2 + s.sum());
    return HodgePrediction{sign, s.complement(sys.n)};
}

Rational hodge_apply(const OrthoSystem& sys, const Subset& s, std::span<const Rational> x) {
    const int m = s.size();
    if (static_cast<int>(x.size()) != sys.n - m) {
        throw InvalidArity("hodge_apply: point needs n - |S| coordinates");
    }
    return integrate_sym_fn(sys.measure, m, [&](std::span<const Rational> y) {
        std::vector<Rational> yx = concat(y, x);
        return basis_minor(sys, s, y) * vandermonde_value(yx);
    });
}

ContractionSides contraction_check(const OrthoSystem& sys, int m, int l, const KernelPoint& pt) {
    const int n = sys.n;
    if (m < 0 || m > l || l > n) throw InvalidArgument("contraction_check: need 0 <= m <= l <= n");
    if (pt.m() != m) throw InvalidArity("contraction_check: point arity must equal m");

    Rational lhs = vandermonde_value(pt.x) * vandermonde_value(pt.y) *
                   km_eval(sys, pt, KmRoute::Integral);

    Rational coef = factorial(n - l) * factorial(l - m) / factorial(n - m);
    Rational integral = integrate_sym_fn(sys.measure, l - m, [&](std::span<const Rational> w) {
        KernelPoint inner{concat(pt.x, w), concat(pt.y, w)};
        return vandermonde_value(inner.x) * vandermonde_value(inner.y) *
               km_eval(sys, inner, KmRoute::Integral);
    });
    return ContractionSides{std::move(lhs), coef * integral};
}

Subset partition_to_subset(const Partition& lambda, int m) {
    if (lambda.size() > m) throw InvalidPartition("partition has more parts than m");
    std::vector<int> elems;
    for (int k = m; k >= 1; --k) elems.push_back(lambda.part(k) + m + 1 - k);
    return Subset(std::move(elems));
}

Partition subset_to_partition(const Subset& s) {
    const int m = s.size();
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
        parts.push_back(s.elements()[static_cast<std::size_t>(m - i)] - (m + 1 - i));
    }
    return Partition(std::move(parts));
}

namespace {

// All partitions with at most maxParts parts, each part <= maxPart.
std::vector<Partition> box_partitions(int maxParts, int maxPart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int depth, int bound) {
        out.emplace_back(cur);
        if (depth == maxParts) return;
        for (int v = bound; v >= 1; --v) {
            cur.push_back(v);
            rec(depth + 1, v);
            cur.pop_back();
        }
    };
    rec(0, maxPart);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SchurExpansion schur_expansion(const OrthoSystem& sys, int m) {
    const int n = sys.n;
    if (m > n) throw InvalidArgument("schur_expansion: m exceeds the degree bound n");

    Matrix hankel(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) hankel.at(i, j) = moment(sys.measure, i + j);
    }
    const Rational normProd = sys.norm_product_all();

    SchurExpansion out;
    out.n = n;
    out.m = m;
    const std::vector<Partition> box = box_partitions(m, n - m);
    for (const Partition& lambda : box) {
        const Subset s = partition_to_subset(lambda, m);
        const std::vector<int> rows = complement_indices(s, n);
        for (const Partition& mu : box) {
            const Subset t = partition_to_subset(mu, m);
            const std::vector<int> cols = complement_indices(t, n);
            Rational minor = determinant(select(hankel, rows, cols));
            Rational coeff = minor / normProd;
            if (parity_sign(lambda.sum() + mu.sum()) < 0) coeff = -coeff;
            out.coefficients.emplace(std::make_pair(lambda, mu), std::move(coeff));
        }
    }
    return out;
}

MultiPoly schur_reconstruction(const SchurExpansion& expansion) {
    MultiPoly total;
    for (const auto& [pair, coeff] : expansion.coefficients) {
        MultiPoly term = schur_polynomial(pair.first, expansion.m, "x") *
                         schur_polynomial(pair.second, expansion.m, "y");
        total += coeff * term;
    }
    return total;
}

MultiPoly km_polynomial(const OrthoSystem& sys, int m) {
    const int n = sys.n;
    if (m > n) throw InvalidArgument("km_polynomial: m exceeds the degree bound n");
    if (m == 0) return MultiPoly::constant(Rational(1));

    MultiPoly total;
    for (const Subset& s : subsets_of_size(n, m)) {
        MultiPoly term = basis_minor_poly(sys, s, "x") * basis_minor_poly(sys, s, "y");
        total += term / sys.norm_product(s);
    }
    // variables are sorted x1..xm, y1..ym; divide out both block Vandermondes
    std::vector<std::size_t> xBlock, yBlock;
    for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
        xBlock.push_back(k);
        yBlock.push_back(static_cast<std::size_t>(m) + k);
    }
    total = divide_by_vandermonde_block(total, xBlock);
    return divide_by_vandermonde_block(total, yBlock);
}

MultiPoly family_minor_poly(const std::vector<MultiPoly>& family, const Subset& s,
                            const std::string& prefix) {
    const int m = s.size();
    if (m == 0) return MultiPoly::constant(Rational(1));
    if (s.max_element() > static_cast<int>(family.size())) {
        throw InvalidArgument("family_minor_poly: S exceeds the family size");
    }
    std::vector<std::vector<MultiPoly>> entries(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            entries[static_cast<std::size_t>(i)].push_back(embed_univariate(
                family[static_cast<std::size_t>(s.elements()[static_cast<std::size_t>(j)] - 1)],
                prefix + std::to_string(i + 1)));
        }
    }
    return poly_det(entries);
}

std::map<std::pair<Subset, Subset>, Rational> general_expansion(
    const OrthoSystem& sys, int m, const std::vector<MultiPoly>& basisE,
    const std::vector<MultiPoly>& basisF) {
    const int n = sys.n;
    if (m > n) throw InvalidArgument("general_expansion: m exceeds the degree bound n");
    if (static_cast<int>(basisE.size()) != n || static_cast<int>(basisF.size()) != n) {
        throw InvalidArity("general_expansion: each basis must have n elements");
    }
    for (const auto& family : {std::cref(basisE), std::cref(basisF)}) {
        for (const MultiPoly& p : family.get()) {
            if (p.vars().size() > 1 || p.total_degree() > n - 1) {
                throw InvalidArgument("general_expansion: basis elements must be univariate of degree < n");
            }
        }
    }

    Matrix gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gram.at(i, j) = pair(basisE[static_cast<std::size_t>(i)],
                                 basisF[static_cast<std::size_t>(j)], sys.measure);
        }
    }
    Rational gramDet = determinant(gram);
    if (gramDet.is_zero()) throw DegenerateBasis("general_expansion: Gram determinant vanishes");

    std::map<std::pair<Subset, Subset>, Rational> out;
    for (const Subset& s : subsets_of_size(n, m)) {
        const std::vector<int> rows = complement_indices(s, n);
        for (const Subset& t : subsets_of_size(n, m)) {
            const std::vector<int> cols = complement_indices(t, n);
            Rational coeff = determinant(select(gram, rows, cols)) / gramDet;
            if (parity_sign(s.sum() + t.sum()) < 0) coeff = -coeff;
            out.emplace(std::make_pair(s, t), std::move(coeff));
        }
    }
    return out;
}

}  // namespace cdk
