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

#include <functional>
#include <span>
#include <vector>

#include "cdk/multipoly.hpp"
#include "cdk/rational.hpp"

namespace cdk {

/// Finite discrete measure: distinct rational support points with nonzero
/// rational weights. Weights may be negative; positivity-dependent
/// properties key off positive().
class Measure {
public:
    Measure(std::vector<Rational> points, std::vector<Rational> weights);

    int size() const { return static_cast<int>(points_.size()); }
    const Rational& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
    const Rational& weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& points() const { return points_; }
    const std::vector<Rational>& weights() const { return weights_; }

    bool positive() const;

private:
    std::vector<Rational> points_;
    std::vector<Rational> weights_;
};

/// k-th moment: sum_i w_i * p_i^k.
Rational moment(const Measure& mu, int k);

/// Bilinear pairing of univariate polynomials: sum_i w_i f(p_i) g(p_i).
Rational pair(const MultiPoly& f, const MultiPoly& g, const Measure& mu);

/// Symmetrized m-fold integral of a pointwise integrand:
/// (1/m!) * sum over all ordered m-tuples of support points of the weight
/// product times f(tuple). For m = 0 evaluates f on the empty tuple.
Rational integrate_sym_fn(const Measure& mu, int m,
                          const std::function<Rational(std::span<const Rational>)>& f);

/// Symmetrized m-fold integral of an m-variable polynomial.
Rational integrate_sym(const MultiPoly& f, const Measure& mu, int m);

}  // namespace cdk
