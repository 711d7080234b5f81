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

#include "cdk/ortho.hpp"

#include <algorithm>
#include <functional>

#include "cdk/linalg.hpp"

namespace cdk {

Subset::Subset(std::vector<int> elements) : elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1 || (i + 1 < elems_.size() && elems_[i] >= elems_[i + 1])) {
            throw InvalidArgument("Subset: elements must be strictly increasing and >= 1");
        }
    }
}

int Subset::sum() const {
    int s = 0;
    for (int v : elems_) s += v;
    return s;
}

int Subset::count_even() const {
    int c = 0;
    for (int v : elems_) c += (v % 2 == 0);
    return c;
}

bool Subset::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

Subset Subset::complement(int n) const {
    if (max_element() > n) throw InvalidArgument("Subset: complement range too small");
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!contains(v)) out.push_back(v);
    }
    return Subset(std::move(out));
}

std::string Subset::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems_[i]);
    }
    return out + "}";
}

std::vector<Subset> subsets_of_size(int n, int m) {
    if (m < 0 || n < 0 || m > n) throw InvalidArgument("subsets_of_size: need 0 <= m <= n");
    std::vector<Subset> out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    // lexicographic enumeration of m-combinations of {1..n}
    std::function<void(int, int)> rec = [&](int next, int depth) {
        if (depth == m) {
            out.emplace_back(cur);
            return;
        }
        for (int v = next; v <= n - (m - depth - 1); ++v) {
            cur[static_cast<std::size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

Rational OrthoSystem::norm_product(const Subset& s) const {
    Rational out(1);
    for (int i : s.elements()) out *= norm(i - 1);
    return out;
}

Rational OrthoSystem::norm_product_all() const {
    Rational out(1);
    for (const Rational& h : norms) out *= h;
    return out;
}

std::pair<std::vector<MultiPoly>, std::vector<Rational>> monic_family(const Measure& mu, int deg) {
    if (deg < 0) throw InvalidArgument("monic_family: negative degree");
    const MultiPoly x = MultiPoly::variable("x");

    std::vector<MultiPoly> polys;
    std::vector<Rational> norms;
    MultiPoly power = MultiPoly::constant(Rational(1), {"x"});  // x^k
    for (int k = 0; k <= deg; ++k) {
        MultiPoly p = power;
        for (int i = 0; i < k; ++i) {
            Rational coef = pair(power, polys[static_cast<std::size_t>(i)], mu) / norms[static_cast<std::size_t>(i)];
            p -= coef * polys[static_cast<std::size_t>(i)];
        }
        Rational h = pair(p, p, mu);
        if (k < deg && h.is_zero()) {
            throw DegenerateMeasure("pairing degenerates at degree " + std::to_string(k));
        }
        polys.push_back(std::move(p));
        if (k < deg) norms.push_back(std::move(h));
        power = power * x;
    }
    return {std::move(polys), std::move(norms)};
}

OrthoSystem build_system(const Measure& mu, int n) {
    if (n < 1) throw InvalidArgument("build_system: need n >= 1");
    if (n > mu.size()) {
        throw DegenerateMeasure("degree bound exceeds the support size");
    }
    auto [polys, norms] = monic_family(mu, n);
    return OrthoSystem{mu, n, std::move(polys), std::move(norms)};
}

Rational cd_kernel(const OrthoSystem& sys, const Rational& x, const Rational& y, CdMode mode) {
    if (mode == CdMode::Sum) {
        Rational total(0);
        for (int k = 0; k < sys.n; ++k) {
            total += sys.poly_value(k, x) * sys.poly_value(k, y) / sys.norm(k);
        }
        return total;
    }
    if (x == y) throw CoincidentPoints("cd_kernel: quotient form needs x != y");
    Rational num = sys.poly_value(sys.n, x) * sys.poly_value(sys.n - 1, y) -
                   sys.poly_value(sys.n - 1, x) * sys.poly_value(sys.n, y);
    return num / ((x - y) * sys.norm(sys.n - 1));
}

Rational basis_minor(const OrthoSystem& sys, const Subset& s, std::span<const Rational> x) {
    if (static_cast<std::size_t>(s.size()) != x.size()) {
        throw InvalidArity("basis_minor: |S| must equal the number of points");
    }
    if (s.max_element() > sys.n) throw InvalidArgument("basis_minor: S exceeds [n]");
    const int m = s.size();
    Matrix a(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            a.at(i, j) = sys.poly_value(s.elements()[static_cast<std::size_t>(j)] - 1,
                                        x[static_cast<std::size_t>(i)]);
        }
    }
    return determinant(a);
}

MultiPoly basis_minor_poly(const OrthoSystem& sys, const Subset& s, const std::string& prefix) {
    if (s.max_element() > sys.n) throw InvalidArgument("basis_minor_poly: S exceeds [n]");
    const int m = s.size();
    if (m == 0) return MultiPoly::constant(Rational(1));
    std::vector<std::vector<MultiPoly>> entries(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            entries[static_cast<std::size_t>(i)].push_back(embed_univariate(
                sys.poly(s.elements()[static_cast<std::size_t>(j)] - 1),
                prefix + std::to_string(i + 1)));
        }
    }
    return poly_det(entries);
}

}  // namespace cdk
