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

#include "cdk/measure.hpp"

#include "cdk/linalg.hpp"

namespace cdk {

Measure::Measure(std::vector<Rational> points, std::vector<Rational> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.size() != weights_.size()) {
        throw InvalidMeasure("points and weights have different lengths");
    }
    if (points_.empty()) throw InvalidMeasure("measure needs at least one support point");
    if (!pairwise_distinct(points_)) throw InvalidMeasure("support points must be distinct");
    for (const Rational& w : weights_) {
        if (w.is_zero()) throw InvalidMeasure("weights must be nonzero");
    }
}

bool Measure::positive() const {
    for (const Rational& w : weights_) {
        if (w.sign() <= 0) return false;
    }
    return true;
}

Rational moment(const Measure& mu, int k) {
    if (k < 0) throw InvalidArgument("moment: negative order");
    Rational total(0);
    for (int i = 0; i < mu.size(); ++i) total += mu.weight(i) * mu.point(i).pow(k);
    return total;
}

Rational pair(const MultiPoly& f, const MultiPoly& g, const Measure& mu) {
    if (f.vars().size() > 1 || g.vars().size() > 1) {
        throw InvalidArity("pair: both arguments must be univariate");
    }
    Rational total(0);
    for (int i = 0; i < mu.size(); ++i) {
        total += mu.weight(i) * eval_univariate(f, mu.point(i)) * eval_univariate(g, mu.point(i));
    }
    return total;
}

Rational integrate_sym_fn(const Measure& mu, int m,
                          const std::function<Rational(std::span<const Rational>)>& f) {
    if (m < 0) throw InvalidArgument("integrate_sym: negative arity");
    if (m == 0) return f({});

    const int s = mu.size();
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    std::vector<Rational> tuple(static_cast<std::size_t>(m));
    Rational total(0);
    for (;;) {
        Rational w(1);
        for (int k = 0; k < m; ++k) {
            w *= mu.weight(idx[static_cast<std::size_t>(k)]);
            tuple[static_cast<std::size_t>(k)] = mu.point(idx[static_cast<std::size_t>(k)]);
        }
        total += w * f(tuple);
        // odometer over [s]^m
        int k = m - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == s) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return total / factorial(m);
}

Rational integrate_sym(const MultiPoly& f, const Measure& mu, int m) {
    if (static_cast<int>(f.vars().size()) != m) {
        throw InvalidArity("integrate_sym: polynomial arity does not match m");
    }
    if (m == 0) return f.constant_value();
    return integrate_sym_fn(mu, m, [&](std::span<const Rational> pt) { return f.eval(pt); });
}

}  // namespace cdk
