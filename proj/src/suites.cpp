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

#include "cdk/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cdk/identities.hpp"
#include "cdk/kernels.hpp"
#include "cdk/linalg.hpp"
#include "cdk/ortho.hpp"
#include "cdk/rng.hpp"

namespace cdk {

namespace {

constexpr int kResampleCap = 100;

int cycle(int trial, int lo, int hi) { return lo + trial % (hi - lo + 1); }

std::string vec_str(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

std::string measure_str(const Measure& mu) {
    return "points=" + vec_str(mu.points()) + ";weights=" + vec_str(mu.weights());
}

// --- instance generators -----------------------------------------------

Measure random_measure(Rng& rng, int minPts, int maxPts, bool positiveWeights) {
    int s = static_cast<int>(rng.range(minPts, maxPts));
    std::vector<Rational> points = rng.distinct_rationals(s);
    std::vector<Rational> weights;
    for (int i = 0; i < s; ++i) {
        long w = positiveWeights ? rng.range(1, 5) : rng.range(-5, 5);
        while (w == 0) w = rng.range(-5, 5);
        weights.emplace_back(w);
    }
    return Measure(std::move(points), std::move(weights));
}

// Random measure whose pairing stays nondegenerate up to degree extendTo.
Measure nondegenerate_measure(Rng& rng, int minPts, int maxPts, int extendTo,
                              bool positiveWeights = false) {
    for (int tries = 0; tries < kResampleCap; ++tries) {
        Measure mu = random_measure(rng, std::max(minPts, extendTo), maxPts, positiveWeights);
        try {
            monic_family(mu, extendTo);
            return mu;
        } catch (const DegenerateMeasure&) {
        }
    }
    throw Error("suite generator: could not draw a nondegenerate measure");
}

// Sigma parametrization: zeta_i = sigma_i^2 and t_i = sigma_i - 1/sigma_i
// satisfy t_i^2 = z_i and zeta_i + 1/zeta_i = z_i + 2 for the same z_i, so
// every Pfaffian form of an instance stays rational.
struct SigmaChoices {
    std::vector<Rational> t;
    std::vector<Rational> zeta;
    std::vector<Rational> z;
};

SigmaChoices random_sigma_choices(Rng& rng, int count) {
    std::vector<Rational> sigma;
    int guard = 0;
    while (static_cast<int>(sigma.size()) < count) {
        if (++guard > 1000) throw Error("suite generator: could not draw sigma values");
        Rational s = rng.rational();
        if (s.is_zero() || s == Rational(1) || s == Rational(-1)) continue;
        bool ok = true;
        for (const Rational& prev : sigma) {
            if (s == prev || s == -prev || s == prev.inverse() || s == -prev.inverse()) {
                ok = false;
                break;
            }
        }
        if (ok) sigma.push_back(s);
    }
    SigmaChoices out;
    for (const Rational& s : sigma) {
        Rational t = s - s.inverse();
        out.t.push_back(t);
        out.zeta.push_back(s * s);
        out.z.push_back(t * t);
    }
    return out;
}

// --- independent oracles ------------------------------------------------

Rational cofactor_determinant(const Matrix& a) {
    const int n = a.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return a.at(0, 0);
    Rational total(0);
    for (int j = 0; j < n; ++j) {
        std::vector<int> rows, cols;
        for (int r = 1; r < n; ++r) rows.push_back(r);
        for (int c = 0; c < n; ++c) {
            if (c != j) cols.push_back(c);
        }
        Rational term = a.at(0, j) * cofactor_determinant(select(a, rows, cols));
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// Antisymmetrization of a random polynomial over all permutations of its
// variable slots; produces the inputs of the Vandermonde-division roundtrip.
MultiPoly antisymmetrize(const MultiPoly& p) {
    const std::size_t m = p.vars().size();
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    MultiPoly total;
    do {
        // apply the slot permutation via exponent shuffling
        MultiPoly image;
        for (const auto& [e, c] : p.terms()) {
            MultiPoly::Exponents shuffled(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) shuffled[k] = e[perm[k]];
            image += MultiPoly::monomial(c, p.vars(), shuffled);
        }
        int inversions = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
        }
        if (inversions % 2 == 0) {
            total += image;
        } else {
            total -= image;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int maxDeg, int terms) {
    MultiPoly out = MultiPoly::constant(Rational(0), vars);
    for (int t = 0; t < terms; ++t) {
        MultiPoly::Exponents e;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            e.push_back(static_cast<int>(rng.range(0, maxDeg)));
        }
        out += MultiPoly::monomial(rng.rational(), vars, e);
    }
    return out;
}

MultiPoly random_univariate(Rng& rng, int degBelow) {
    MultiPoly out = MultiPoly::constant(Rational(0), {"x"});
    for (int k = 0; k < degBelow; ++k) {
        out += MultiPoly::monomial(rng.rational(), {"x"}, {k});
    }
    return out;
}

// --- suite harness -------------------------------------------------------

struct Failure {
    std::string detail;
};

using InstanceFn = std::function<std::optional<Failure>(Rng&, int trial, const SuiteParams&)>;

SuiteReport drive(const std::string& name, const SuiteParams& params, const InstanceFn& instance) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = name;
    Rng rng(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        ++report.attempted;
        std::optional<Failure> failure;
        try {
            failure = instance(rng, trial, params);
        } catch (const Error& e) {
            failure = Failure{std::string("exception:") + e.what()};
        }
        if (failure) {
            report.counterexample = "trial=" + std::to_string(trial) + ";" + failure->detail;
            break;
        }
        ++report.passed;
    }
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::optional<Failure> check_equal(const Rational& lhs, const Rational& rhs,
                                   const std::string& label) {
    if (lhs == rhs) return std::nullopt;
    return Failure{label + ";lhs=" + lhs.str() + ";rhs=" + rhs.str()};
}

// --- poly_core invariants -------------------------------------------------

std::optional<Failure> poly_instance(Rng& rng, int trial, const SuiteParams&) {
    // Vandermonde division roundtrip on a random antisymmetric polynomial
    const int m = cycle(trial, 2, 4);
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    MultiPoly p = antisymmetrize(random_poly(rng, vars, 3, 3));
    if (!p.is_zero()) {
        MultiPoly q = divide_by_vandermonde(p, m);
        if (!(q * vandermonde_poly(vars) == p)) {
            return Failure{"divide_by_vandermonde roundtrip;p=" + p.str()};
        }
    }

    // Schur symmetry under every adjacent transposition
    std::vector<int> parts;
    int prev = static_cast<int>(rng.range(0, 3));
    for (int i = 0; i < m; ++i) {
        parts.push_back(prev);
        prev = static_cast<int>(rng.range(0, prev));
    }
    MultiPoly s = schur_polynomial(Partition(parts), m);
    for (int i = 0; i + 1 < m; ++i) {
        if (!(s.swapped(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) == s)) {
            return Failure{"schur not symmetric;lambda=" + Partition(parts).str()};
        }
    }

    // evaluation is a ring homomorphism at a fixed point
    MultiPoly a = random_poly(rng, vars, 3, 3);
    MultiPoly b = random_poly(rng, vars, 3, 3);
    std::vector<Rational> pt;
    for (int i = 0; i < m; ++i) pt.push_back(rng.rational());
    if (auto f = check_equal((a * b).eval(pt), a.eval(pt) * b.eval(pt), "eval product")) return f;
    if (auto f = check_equal((a + b).eval(pt), a.eval(pt) + b.eval(pt), "eval sum")) return f;
    return std::nullopt;
}

// --- measure invariants ----------------------------------------------------

std::optional<Failure> measure_instance(Rng& rng, int trial, const SuiteParams&) {
    Measure mu = random_measure(rng, 1, 6, false);

    const int m = cycle(trial, 2, 3);
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
    MultiPoly anti = antisymmetrize(random_poly(rng, vars, 2, 3));
    if (!anti.is_zero()) {
        if (auto f = check_equal(integrate_sym(anti, mu, m), Rational(0),
                                 "antisymmetric integrand;" + measure_str(mu))) {
            return f;
        }
    }

    MultiPoly one = MultiPoly::constant(Rational(1), {"x"});
    MultiPoly power = one;
    const MultiPoly x = MultiPoly::variable("x");
    for (int k = 0; k <= 8; ++k) {
        if (auto f = check_equal(moment(mu, k), pair(power, one, mu),
                                 "moment vs pair;k=" + std::to_string(k))) {
            return f;
        }
        power = power * x;
    }
    return std::nullopt;
}

// --- linalg ---------------------------------------------------------------

std::optional<Failure> linalg_instance(Rng& rng, int trial, const SuiteParams&) {
    const int n = cycle(trial, 1, 5);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = rng.rational();
    }
    if (auto f = check_equal(determinant(a), cofactor_determinant(a), "bareiss vs cofactor")) {
        return f;
    }
    if (n >= 2) {
        Matrix swapped = a;
        for (int c = 0; c < n; ++c) std::swap(swapped.at(0, c), swapped.at(1, c));
        if (auto f = check_equal(determinant(swapped), -determinant(a), "row swap negates")) {
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Failure> pfaffian_det_instance(Rng& rng, int trial, const SuiteParams&) {
    const int dim = 2 * cycle(trial, 1, 3);
    SkewMatrix s(dim);
    Matrix full(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Rational v = rng.rational();
            s.set(i, j, v);
            full.at(i, j) = v;
            full.at(j, i) = -v;
        }
    }
    Rational pf = pfaffian(s);
    return check_equal(pf * pf, determinant(full), "pfaffian^2 vs det;dim=" + std::to_string(dim));
}

std::optional<Failure> cauchy_instance(Rng& rng, int trial, const SuiteParams&) {
    const int m = cycle(trial, 1, 3);
    for (int tries = 0; tries < kResampleCap; ++tries) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        Rational disc = b * b - a * c;
        if (disc.is_zero()) continue;
        std::vector<Rational> x = rng.distinct_rationals(m);
        std::vector<Rational> y = rng.distinct_rationals(m);
        Matrix k(m, m);
        bool singular = false;
        Rational denomProd(1);
        for (int i = 0; i < m && !singular; ++i) {
            for (int j = 0; j < m; ++j) {
                Rational q = a + b * (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(j)]) +
                             c * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                if (q.is_zero()) {
                    singular = true;
                    break;
                }
                denomProd *= q;
                k.at(i, j) = q.inverse();
            }
        }
        if (singular) continue;
        Rational rhs = disc.pow(m * (m - 1) / 2) * vandermonde_value(x) * vandermonde_value(y) / denomProd;
        return check_equal(determinant(k), rhs,
                           "cauchy;x=" + vec_str(x) + ";y=" + vec_str(y));
    }
    return Failure{"exhausted resampling for a nonsingular cauchy instance"};
}

// --- fixture chain on the three-point measure at -1, 0, 1 ------------------

std::optional<Failure> fixture_instance(Rng&, int, const SuiteParams&) {
    Measure m3({Rational(-1), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(1)});
    OrthoSystem sys = build_system(m3, 2);

    if (!(sys.norm(0) == Rational(3)) || !(sys.norm(1) == Rational(2))) {
        return Failure{"norms;got=(" + sys.norm(0).str() + "," + sys.norm(1).str() + ")"};
    }

    // K(x,y) = 1/3 + xy/2 through both one-variable forms on a small grid
    for (long xi = -2; xi <= 2; ++xi) {
        for (long yi = -2; yi <= 2; ++yi) {
            Rational x(xi, 1), y(yi, 2);  // y offset by halves keeps x != y
            y += Rational(1, 2);
            Rational expected = Rational(1, 3) + x * y / Rational(2);
            if (auto f = check_equal(cd_kernel(sys, x, y, CdMode::Sum), expected, "cd sum")) return f;
            if (!(x == y)) {
                if (auto f = check_equal(cd_kernel(sys, x, y, CdMode::Quotient), expected, "cd quotient")) {
                    return f;
                }
            }
        }
    }

    // K_1(0, 1) = 1/3 through every route
    KernelPoint p1{{Rational(0)}, {Rational(1)}};
    for (KmRoute route : {KmRoute::Sum, KmRoute::TwoPointDet, KmRoute::Integral, KmRoute::OnePointDet}) {
        if (auto f = check_equal(km_eval(sys, p1, route), Rational(1, 3), "K1(0,1)")) return f;
    }
    if (auto f = check_equal(km_pfaffian(sys, SqrtChoice{{Rational(0), Rational(1)}}),
                             Rational(1, 3), "K1 pfaffian sqrt")) {
        return f;
    }

    // K_2 is the constant 1/6
    KernelPoint p2{{Rational(0), Rational(1)}, {Rational(-1), Rational(1, 2)}};
    for (KmRoute route : {KmRoute::Sum, KmRoute::TwoPointDet, KmRoute::Integral, KmRoute::OnePointDet}) {
        if (auto f = check_equal(km_eval(sys, p2, route), Rational(1, 6), "K2")) return f;
    }
    // sigma = (2, 3, 4, 5) gives a rational choice for both Pfaffian forms
    std::vector<Rational> sigma = {Rational(2), Rational(3), Rational(4), Rational(5)};
    SqrtChoice sqrtChoice;
    ZetaChoice zetaChoice;
    for (const Rational& s : sigma) {
        sqrtChoice.t.push_back(s - s.inverse());
        zetaChoice.zeta.push_back(s * s);
    }
    if (auto f = check_equal(km_pfaffian(sys, sqrtChoice), Rational(1, 6), "K2 pfaffian sqrt")) return f;
    if (auto f = check_equal(km_pfaffian(sys, zetaChoice), Rational(1, 6), "K2 pfaffian zeta")) return f;
    {
        KernelPoint sigmaPoint{{sqrtChoice.t[0] * sqrtChoice.t[0], sqrtChoice.t[1] * sqrtChoice.t[1]},
                               {sqrtChoice.t[2] * sqrtChoice.t[2], sqrtChoice.t[3] * sqrtChoice.t[3]}};
        if (auto f = check_equal(km_eval(sys, sigmaPoint, KmRoute::Integral), Rational(1, 6),
                                 "K2 at sigma point")) {
            return f;
        }
    }

    // Schur expansion of K_1: {((),()) : 1/3, ((1),(1)) : 1/2, mixed : 0}
    SchurExpansion expansion = schur_expansion(sys, 1);
    Partition empty, one({1});
    if (auto f = check_equal(expansion.coefficients.at({empty, empty}), Rational(1, 3),
                             "schur coeff ((),())")) {
        return f;
    }
    if (auto f = check_equal(expansion.coefficients.at({one, one}), Rational(1, 2),
                             "schur coeff ((1),(1))")) {
        return f;
    }
    if (auto f = check_equal(expansion.coefficients.at({empty, one}), Rational(0), "schur mixed")) return f;
    if (auto f = check_equal(expansion.coefficients.at({one, empty}), Rational(0), "schur mixed")) return f;

    // confluent values K_1(1,1) = 5/6 and K_1(0,0) = 1/3
    std::vector<Rational> onePt = {Rational(1)};
    if (auto f = check_equal(km_confluent(sys, onePt), Rational(5, 6), "confluent K1(1,1)")) return f;
    std::vector<Rational> zeroPt = {Rational(0)};
    if (auto f = check_equal(km_confluent(sys, zeroPt), Rational(1, 3), "confluent K1(0,0)")) return f;

    // m = n = 2 confluent value equals the constant kernel
    std::vector<Rational> pairPt = {Rational(0), Rational(1)};
    if (auto f = check_equal(km_confluent(sys, pairPt), Rational(1, 6), "confluent K2")) return f;
    return std::nullopt;
}

// --- kernel route agreement -------------------------------------------------

struct KernelInstance {
    Measure mu;
    OrthoSystem sys;
    SigmaChoices choices;
    KernelPoint pt;
    int m;
};

KernelInstance random_kernel_instance(Rng& rng, int trial, const SuiteParams& params,
                                      bool needExtension) {
    const int m = cycle(trial, 1, params.maxM);
    const int n = static_cast<int>(rng.range(m, std::max(m, params.maxN)));
    const int minPts = needExtension ? std::max(n, n + m - 1) : n;
    const int maxPts = std::max(6, minPts);
    Measure mu = nondegenerate_measure(rng, minPts, maxPts, needExtension ? n + m - 1 : n);
    OrthoSystem sys = build_system(mu, n);
    SigmaChoices choices = random_sigma_choices(rng, 2 * m);
    KernelPoint pt{{choices.z.begin(), choices.z.begin() + m},
                   {choices.z.begin() + m, choices.z.end()}};
    return KernelInstance{std::move(mu), std::move(sys), std::move(choices), std::move(pt), m};
}

std::optional<Failure> route_agreement_instance(Rng& rng, int trial, const SuiteParams& params) {
    KernelInstance inst = random_kernel_instance(rng, trial, params, true);
    const std::string ctx = measure_str(inst.mu) + ";n=" + std::to_string(inst.sys.n) +
                            ";x=" + vec_str(inst.pt.x) + ";y=" + vec_str(inst.pt.y);

    Rational reference = km_eval(inst.sys, inst.pt, KmRoute::Integral);
    for (KmRoute route : {KmRoute::Sum, KmRoute::TwoPointDet, KmRoute::OnePointDet}) {
        if (auto f = check_equal(km_eval(inst.sys, inst.pt, route), reference, "route;" + ctx)) {
            return f;
        }
    }
    if (auto f = check_equal(km_pfaffian(inst.sys, SqrtChoice{inst.choices.t}), reference,
                             "pfaffian sqrt;" + ctx)) {
        return f;
    }
    if (auto f = check_equal(km_pfaffian(inst.sys, ZetaChoice{inst.choices.zeta}), reference,
                             "pfaffian zeta;" + ctx)) {
        return f;
    }

    // the four evaluation routes also agree at generic distinct coordinates
    // (signs unconstrained, unlike the square z_i of the Pfaffian instance)
    std::vector<Rational> z = rng.distinct_rationals(2 * inst.m);
    KernelPoint generic{{z.begin(), z.begin() + inst.m}, {z.begin() + inst.m, z.end()}};
    Rational genericRef = km_eval(inst.sys, generic, KmRoute::Integral);
    for (KmRoute route : {KmRoute::Sum, KmRoute::TwoPointDet, KmRoute::OnePointDet}) {
        if (auto f = check_equal(km_eval(inst.sys, generic, route), genericRef,
                                 "route at generic point;z=" + vec_str(z) + ";" + ctx)) {
            return f;
        }
    }
    return std::nullopt;
}

// --- orthogonal-system invariants -------------------------------------------

std::optional<Failure> ortho_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int n = cycle(trial, 1, params.maxN);
    Measure mu = nondegenerate_measure(rng, n, 6, n);
    OrthoSystem sys = build_system(mu, n);
    const std::string ctx = measure_str(mu) + ";n=" + std::to_string(n);

    for (int i = 0; i <= n; ++i) {
        if (sys.poly(i).degree_in("x") != i ||
            !(sys.poly(i).terms().at(MultiPoly::Exponents{i}) == Rational(1))) {
            return Failure{"monicity;k=" + std::to_string(i) + ";" + ctx};
        }
        for (int j = 0; j < i; ++j) {
            if (auto f = check_equal(pair(sys.poly(i), sys.poly(j), mu), Rational(0),
                                     "orthogonality;i=" + std::to_string(i) + ";j=" + std::to_string(j) +
                                         ";" + ctx)) {
                return f;
            }
        }
    }

    // sum and quotient forms of the one-variable kernel agree off-diagonal
    std::vector<Rational> grid = rng.distinct_rationals(5);
    for (const Rational& x : grid) {
        for (const Rational& y : grid) {
            if (x == y) continue;
            if (auto f = check_equal(cd_kernel(sys, x, y, CdMode::Sum),
                                     cd_kernel(sys, x, y, CdMode::Quotient),
                                     "cd forms;x=" + x.str() + ";y=" + y.str() + ";" + ctx)) {
                return f;
            }
        }
    }

    // the full basis minor is the Vandermonde determinant
    std::vector<Rational> x = rng.distinct_rationals(n);
    std::vector<int> full;
    for (int k = 1; k <= n; ++k) full.push_back(k);
    return check_equal(basis_minor(sys, Subset(full), x), vandermonde_value(x),
                       "full minor vs vandermonde;" + ctx);
}

// --- permutation symmetry of the concatenated coordinates -------------------

std::optional<Failure> symmetry_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int m = cycle(trial, 1, params.maxM);
    const int n = static_cast<int>(rng.range(m, std::max(m, params.maxN)));
    Measure mu = nondegenerate_measure(rng, n, 6, n);
    OrthoSystem sys = build_system(mu, n);

    std::vector<Rational> z;
    for (int i = 0; i < 2 * m; ++i) z.push_back(rng.rational());  // repeats allowed
    KernelPoint base{{z.begin(), z.begin() + m}, {z.begin() + m, z.end()}};
    Rational reference = km_eval(sys, base, KmRoute::Integral);

    for (int p = 0; p < 10; ++p) {
        std::vector<Rational> shuffled = z;
        for (std::size_t k = shuffled.size(); k > 1; --k) {
            std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long>(k) - 1));
            std::swap(shuffled[k - 1], shuffled[j]);
        }
        KernelPoint pt{{shuffled.begin(), shuffled.begin() + m}, {shuffled.begin() + m, shuffled.end()}};
        if (auto f = check_equal(km_eval(sys, pt, KmRoute::Integral), reference,
                                 "permutation symmetry;z=" + vec_str(z) + ";perm=" + vec_str(shuffled))) {
            return f;
        }
    }
    return std::nullopt;
}

// --- independence of the square-root / zeta choices -------------------------

std::optional<Failure> choice_independence_instance(Rng& rng, int trial, const SuiteParams& params) {
    KernelInstance inst = random_kernel_instance(rng, trial, params, false);

    Rational base = km_pfaffian(inst.sys, SqrtChoice{inst.choices.t});
    for (std::size_t i = 0; i < inst.choices.t.size(); ++i) {
        SqrtChoice flipped{inst.choices.t};
        flipped.t[i] = -flipped.t[i];
        if (auto f = check_equal(km_pfaffian(inst.sys, flipped), base,
                                 "sqrt sign flip;i=" + std::to_string(i) + ";t=" + vec_str(inst.choices.t))) {
            return f;
        }
    }

    Rational zetaBase = km_pfaffian(inst.sys, ZetaChoice{inst.choices.zeta});
    if (auto f = check_equal(zetaBase, base, "zeta form vs sqrt form")) return f;
    for (std::size_t i = 0; i < inst.choices.zeta.size(); ++i) {
        ZetaChoice inverted{inst.choices.zeta};
        inverted.zeta[i] = inverted.zeta[i].inverse();
        if (auto f = check_equal(km_pfaffian(inst.sys, inverted), base,
                                 "zeta inversion;i=" + std::to_string(i) + ";zeta=" + vec_str(inst.choices.zeta))) {
            return f;
        }
    }

    // zeta difference identity linking z and zeta
    for (std::size_t i = 0; i < inst.choices.zeta.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.choices.zeta.size(); ++j) {
            const Rational& zi = inst.choices.zeta[i];
            const Rational& zj = inst.choices.zeta[j];
            Rational lhs = inst.choices.z[j] - inst.choices.z[i];
            Rational rhs = -(zj - zi) * (Rational(1) - zi * zj) / (zi * zj);
            if (auto f = check_equal(lhs, rhs, "zeta difference identity")) return f;
        }
    }
    return std::nullopt;
}

// --- Hodge star --------------------------------------------------------------

std::optional<Failure> hodge_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int n = cycle(trial, 1, params.maxN);
    Measure mu = nondegenerate_measure(rng, n, 5, n);
    OrthoSystem sys = build_system(mu, n);

    for (int m = 0; m <= std::min(params.maxM, n); ++m) {
        for (const Subset& s : subsets_of_size(n, m)) {
            HodgePrediction pred = hodge_star(sys, m, s);
            Rational scale = sys.norm_product(s);
            if (pred.sign < 0) scale = -scale;

            for (int rep = 0; rep < 3; ++rep) {
                std::vector<Rational> x;
                for (int k = 0; k < n - m; ++k) x.push_back(rng.rational());
                Rational applied = hodge_apply(sys, s, x);
                Rational predicted = scale * basis_minor(sys, pred.target, x);
                if (auto f = check_equal(applied, predicted,
                                         "hodge;S=" + s.str() + ";x=" + vec_str(x) + ";" + measure_str(mu))) {
                    return f;
                }
            }

            // second application: phi(p_{S^c}) closes the loop with the
            // scalar (-1)^{m(n-m)} prod_i <p_{i-1},p_{i-1}>
            HodgePrediction back = hodge_star(sys, n - m, pred.target);
            Rational backScale = sys.norm_product(pred.target);
            if (back.sign < 0) backScale = -backScale;
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<Rational> x;
                for (int k = 0; k < m; ++k) x.push_back(rng.rational());
                Rational applied = hodge_apply(sys, pred.target, x);
                Rational predicted = backScale * basis_minor(sys, s, x);
                if (auto f = check_equal(applied, predicted, "hodge return;S=" + s.str())) return f;
            }
            Rational roundtrip = scale * backScale;
            Rational expected = sys.norm_product_all();
            if ((m * (n - m)) % 2 == 1) expected = -expected;
            if (auto f = check_equal(roundtrip, expected, "hodge square scalar;S=" + s.str())) return f;
        }
    }
    return std::nullopt;
}

// --- reproducing property, orthogonality, spanning-vector pairing ------------

std::optional<Failure> reproducing_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int n = cycle(trial, 1, params.maxN);
    const int m = cycle(trial / params.maxN, 0, std::min(params.maxM, n));
    Measure mu = nondegenerate_measure(rng, n, 6, n);
    OrthoSystem sys = build_system(mu, n);
    const std::string ctx = measure_str(mu) + ";n=" + std::to_string(n) + ";m=" + std::to_string(m);

    // reproducing property for every basis element p_U, via the identity
    // Vdm(x)Vdm(y)K_m(x,y) = det(K(x_i,y_j)) which is defined at all points
    for (const Subset& u : subsets_of_size(n, m)) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> x;
            for (int k = 0; k < m; ++k) x.push_back(rng.rational());
            Rational integral = integrate_sym_fn(mu, m, [&](std::span<const Rational> y) {
                Matrix km(m, m);
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < m; ++j) {
                        km.at(i, j) = cd_kernel(sys, x[static_cast<std::size_t>(i)],
                                                y[static_cast<std::size_t>(j)], CdMode::Sum);
                    }
                }
                return basis_minor(sys, u, y) * determinant(km);
            });
            if (auto f = check_equal(integral, basis_minor(sys, u, x),
                                     "reproducing;U=" + u.str() + ";" + ctx)) {
                return f;
            }
        }
    }

    // orthogonality of the determinant basis
    for (const Subset& s : subsets_of_size(n, m)) {
        MultiPoly ps = basis_minor_poly(sys, s, "y");
        for (const Subset& t : subsets_of_size(n, m)) {
            MultiPoly pt = basis_minor_poly(sys, t, "y");
            Rational expected = s == t ? sys.norm_product(s) : Rational(0);
            if (auto f = check_equal(integrate_sym(ps * pt, mu, m), expected,
                                     "orthogonality;S=" + s.str() + ";T=" + t.str() + ";" + ctx)) {
                return f;
            }
        }
    }

    // pairing of spanning determinants equals the Gram determinant
    {
        const int dspM = cycle(trial, 1, 3);
        const int dspN = static_cast<int>(rng.range(1, 5));
        std::vector<MultiPoly> fs, gs;
        for (int k = 0; k < dspM; ++k) {
            fs.push_back(random_univariate(rng, dspN));
            gs.push_back(random_univariate(rng, dspN));
        }
        std::vector<int> full;
        for (int k = 1; k <= dspM; ++k) full.push_back(k);
        Subset all(full);
        MultiPoly df = family_minor_poly(fs, all, "y");
        MultiPoly dg = family_minor_poly(gs, all, "y");
        Matrix gram(dspM, dspM);
        for (int i = 0; i < dspM; ++i) {
            for (int j = 0; j < dspM; ++j) {
                gram.at(i, j) = pair(fs[static_cast<std::size_t>(i)], gs[static_cast<std::size_t>(j)], mu);
            }
        }
        Rational paired = integrate_sym_fn(
            mu, dspM, [&](std::span<const Rational> y) { return df.eval(y) * dg.eval(y); });
        if (auto f = check_equal(paired, determinant(gram),
                                 "spanning pairing;m=" + std::to_string(dspM))) {
            return f;
        }
    }
    return std::nullopt;
}

// --- contraction --------------------------------------------------------------

std::optional<Failure> contraction_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int n = cycle(trial, 1, params.maxN);
    Measure mu = nondegenerate_measure(rng, n, 6, n);
    OrthoSystem sys = build_system(mu, n);

    for (int m = 0; m <= n; ++m) {
        for (int l = m; l <= n; ++l) {
            for (int rep = 0; rep < 3; ++rep) {
                KernelPoint pt;
                for (int k = 0; k < m; ++k) pt.x.push_back(rng.rational());
                for (int k = 0; k < m; ++k) pt.y.push_back(rng.rational());
                ContractionSides sides = contraction_check(sys, m, l, pt);
                if (auto f = check_equal(sides.lhs, sides.rhs,
                                         "contraction;m=" + std::to_string(m) + ";l=" + std::to_string(l) +
                                             ";n=" + std::to_string(n) + ";x=" + vec_str(pt.x) +
                                             ";y=" + vec_str(pt.y) + ";" + measure_str(mu))) {
                    return f;
                }
            }
        }
    }
    return std::nullopt;
}

// --- confluent determinant and the correlation-function oracle -----------------

std::optional<Failure> confluent_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int m = cycle(trial, 1, params.maxM);
    const int n = static_cast<int>(rng.range(m, std::max(m, params.maxN)));
    const int minPts = std::max(n, n + m - 1);
    Measure mu = nondegenerate_measure(rng, minPts, std::max(6, minPts), n + m - 1, true);
    OrthoSystem sys = build_system(mu, n);

    std::vector<Rational> x = rng.distinct_rationals(m);
    Rational confluent = km_confluent(sys, x);
    KernelPoint diag{x, x};
    if (auto f = check_equal(confluent, km_eval(sys, diag, KmRoute::Integral),
                             "confluent vs integral;x=" + vec_str(x) + ";" + measure_str(mu))) {
        return f;
    }

    // correlation-function form: Vdm(x)^2 K_m(x,x) equals the pinned
    // integral of Vdm(x, w)^2 over the norm product
    Rational vdm2 = vandermonde_value(x).pow(2);
    Rational pinned = integrate_sym_fn(mu, n - m, [&](std::span<const Rational> w) {
        std::vector<Rational> xw(x.begin(), x.end());
        xw.insert(xw.end(), w.begin(), w.end());
        return vandermonde_value(xw).pow(2);
    });
    if (auto f = check_equal(vdm2 * confluent, pinned / sys.norm_product_all(),
                             "correlation oracle;x=" + vec_str(x))) {
        return f;
    }

    // positive weights make the correlation function nonnegative
    if ((vdm2 * confluent).sign() < 0) {
        return Failure{"correlation nonnegativity;x=" + vec_str(x) + ";" + measure_str(mu)};
    }
    return std::nullopt;
}

// --- Schur expansion ------------------------------------------------------------

std::optional<Failure> schur_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int n = cycle(trial, 1, params.maxN);
    const int m = static_cast<int>(rng.range(0, std::min(params.maxM, n)));
    Measure mu = nondegenerate_measure(rng, n, 6, n);
    OrthoSystem sys = build_system(mu, n);
    const std::string ctx = measure_str(mu) + ";n=" + std::to_string(n) + ";m=" + std::to_string(m);

    SchurExpansion expansion = schur_expansion(sys, m);
    MultiPoly kernel = km_polynomial(sys, m);
    if (!(schur_reconstruction(expansion) == kernel)) {
        return Failure{"schur reconstruction;" + ctx};
    }

    // orthogonal basis diagonalizes the general expansion
    std::vector<MultiPoly> orthoBasis(sys.polys.begin(), sys.polys.begin() + n);
    auto orthoCoeffs = general_expansion(sys, m, orthoBasis, orthoBasis);
    for (const auto& [key, coeff] : orthoCoeffs) {
        Rational expected = key.first == key.second ? sys.norm_product(key.first).inverse() : Rational(0);
        if (auto f = check_equal(coeff, expected,
                                 "orthogonal expansion;S=" + key.first.str() + ";T=" + key.second.str() + ";" + ctx)) {
            return f;
        }
    }

    // the monomial basis reproduces the Schur coefficients
    std::vector<MultiPoly> monomials;
    for (int k = 0; k < n; ++k) {
        monomials.push_back(MultiPoly::monomial(Rational(1), {"x"}, {k}));
    }
    auto monomialCoeffs = general_expansion(sys, m, monomials, monomials);
    for (const auto& [key, coeff] : monomialCoeffs) {
        Partition lambda = subset_to_partition(key.first);
        Partition muPart = subset_to_partition(key.second);
        if (auto f = check_equal(coeff, expansion.coefficients.at({lambda, muPart}),
                                 "monomial vs schur;S=" + key.first.str() + ";T=" + key.second.str() + ";" + ctx)) {
            return f;
        }
    }
    return std::nullopt;
}

// --- section-3 identities ---------------------------------------------------------

std::optional<Failure> rains_instance(Rng& rng, int trial, const SuiteParams&) {
    const int dim = 2 * cycle(trial, 1, 2);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) a.at(i, j) = Rational(rng.range(-9, 9));
    }
    IdentitySides sides = rains_sides(a);
    return check_equal(sides.lhs, sides.rhs, "rains;dim=" + std::to_string(dim));
}

std::optional<Failure> sundquist_instance(Rng& rng, int trial, const SuiteParams& params) {
    const int m = cycle(trial, 1, std::min(2, std::max(1, params.maxM)));
    SigmaChoices choices = random_sigma_choices(rng, 2 * m);
    FreeInput input;
    input.z = choices.z;
    input.zeta = choices.zeta;
    for (int i = 0; i < 2 * m; ++i) input.a.push_back(rng.rational());

    for (const Subset& s : subsets_of_size(2 * m, m)) {
        SundquistValues values = sundquist_sides(input, s, choices.t);
        const std::string ctx = "S=" + s.str() + ";a=" + vec_str(input.a) + ";t=" + vec_str(choices.t);
        if (auto f = check_equal(values.dpi, values.dpia, "sundquist dpi vs dpia;" + ctx)) return f;
        if (auto f = check_equal(values.dpi, *values.dpib, "sundquist dpi vs dpib;" + ctx)) return f;
    }

    // specialization a_i = p_n(z_i)/p_{n-1}(z_i) ties the determinant form to
    // the kernel Pfaffians: dpi = h_{n-1}^m Vdm(z) K_m(z) / prod p_{n-1}(z_i)
    const int n = static_cast<int>(rng.range(std::max(1, m), std::max(m, params.maxN)));
    for (int tries = 0; tries < kResampleCap; ++tries) {
        Measure mu = nondegenerate_measure(rng, n, 6, n);
        OrthoSystem sys = build_system(mu, n);
        bool usable = true;
        FreeInput special;
        special.z = choices.z;
        Rational denomProd(1);
        for (const Rational& z : choices.z) {
            Rational below = sys.poly_value(n - 1, z);
            if (below.is_zero()) {
                usable = false;
                break;
            }
            denomProd *= below;
            special.a.push_back(sys.poly_value(n, z) / below);
        }
        if (!usable) continue;
        std::vector<int> head;
        for (int k = 1; k <= m; ++k) head.push_back(k);
        SundquistValues values = sundquist_sides(special, Subset(head), choices.t);
        KernelPoint pt{{choices.z.begin(), choices.z.begin() + m},
                       {choices.z.begin() + m, choices.z.end()}};
        Rational expected = sys.norm(n - 1).pow(m) * vandermonde_value(choices.z) *
                            km_eval(sys, pt, KmRoute::Integral) / denomProd;
        return check_equal(values.dpi, expected, "sundquist kernel specialization;n=" + std::to_string(n));
    }
    return Failure{"exhausted resampling for the kernel specialization"};
}

std::optional<Failure> iw_instance(Rng& rng, int trial, const SuiteParams&) {
    const int m = cycle(trial, 1, 2);
    const int dim = 2 * m;
    for (int tries = 0; tries < kResampleCap; ++tries) {
        FreeInput input;
        input.aCoef = rng.rational();
        input.bCoef = rng.rational();
        input.cCoef = rng.rational();
        Rational disc = *input.bCoef * *input.bCoef - *input.aCoef * *input.cCoef;
        if (m >= 2 && disc.is_zero()) continue;
        for (int i = 0; i < dim; ++i) {
            input.z.push_back(rng.rational());
            input.x.push_back(rng.rational());
        }
        try {
            IdentitySides sides = iw_sides(input);
            if (auto f = check_equal(sides.lhs, sides.rhs,
                                     "iw;z=" + vec_str(input.z) + ";x=" + vec_str(input.x))) {
                return f;
            }
        } catch (const SingularInput&) {
            continue;
        }

        // consistency with the Pfaffian expansion: the same matrix
        // a_{ij} = z_j / q_{ij} must give both sides of the expansion
        Matrix a(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                if (i == j) continue;
                Rational q = *input.aCoef +
                             *input.bCoef * (input.x[static_cast<std::size_t>(i)] + input.x[static_cast<std::size_t>(j)]) +
                             *input.cCoef * input.x[static_cast<std::size_t>(i)] * input.x[static_cast<std::size_t>(j)];
                a.at(i, j) = input.z[static_cast<std::size_t>(j)] / q;
            }
        }
        IdentitySides viaRains = rains_sides(a);
        IdentitySides direct = iw_sides(input);
        if (auto f = check_equal(viaRains.lhs, direct.lhs, "iw vs rains lhs")) return f;
        if (auto f = check_equal(viaRains.rhs, direct.rhs, "iw vs rains rhs")) return f;
        return std::nullopt;
    }
    return Failure{"exhausted resampling for a nonsingular iw instance"};
}

std::optional<Failure> ssc_instance(Rng& rng, int trial, const SuiteParams&) {
    const int m = cycle(trial, 1, 2);
    std::vector<Rational> x;
    for (int i = 0; i < 2 * m; ++i) x.push_back(rng.rational());
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();

    IdentitySides sides = ssc_sides(x, a, b, c);
    if (auto f = check_equal(sides.lhs, sides.rhs, "ssc;x=" + vec_str(x))) return f;

    // the sum depends on (a, b, c) only through b^2 - ac
    if (!a.is_zero()) {
        IdentitySides scaled = ssc_sides(x, Rational(2) * a, b, c / Rational(2));
        if (auto f = check_equal(sides.lhs, scaled.lhs, "ssc discriminant dependence;x=" + vec_str(x))) {
            return f;
        }
    }

    // a repeated coordinate kills both sides
    if (!x.empty()) {
        std::vector<Rational> repeated = x;
        repeated[0] = repeated[repeated.size() - 1];
        IdentitySides degenerate = ssc_sides(repeated, a, b, c);
        if (auto f = check_equal(degenerate.lhs, Rational(0), "ssc repeated lhs")) return f;
        if (auto f = check_equal(degenerate.rhs, Rational(0), "ssc repeated rhs")) return f;
    }
    return std::nullopt;
}

struct SuiteEntry {
    const char* name;
    std::optional<Failure> (*fn)(Rng&, int, const SuiteParams&);
};

constexpr SuiteEntry kSuites[] = {
    {"poly", poly_instance},
    {"measure", measure_instance},
    {"linalg", linalg_instance},
    {"ortho", ortho_instance},
    {"pfaffian-det", pfaffian_det_instance},
    {"cauchy", cauchy_instance},
    {"fixture", fixture_instance},
    {"route-agreement", route_agreement_instance},
    {"symmetry", symmetry_instance},
    {"choice-independence", choice_independence_instance},
    {"hodge", hodge_instance},
    {"reproducing", reproducing_instance},
    {"contraction", contraction_instance},
    {"confluent", confluent_instance},
    {"schur", schur_instance},
    {"rains", rains_instance},
    {"sundquist", sundquist_instance},
    {"iw", iw_instance},
    {"ssc", ssc_instance},
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteEntry& entry : kSuites) out.emplace_back(entry.name);
        return out;
    }();
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const SuiteEntry& entry : kSuites) {
        if (name == entry.name) return true;
    }
    return false;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    if (params.trials < 1) throw InvalidArgument("run_suite: trials must be >= 1");
    if (params.maxN < 1 || params.maxM < 0) {
        throw InvalidArgument("run_suite: need maxN >= 1 and maxM >= 0");
    }
    for (const SuiteEntry& entry : kSuites) {
        if (name == entry.name) {
            return drive(entry.name, params, entry.fn);
        }
    }
    throw InvalidArgument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& nameOrAll, const SuiteParams& params) {
    std::vector<SuiteReport> out;
    if (nameOrAll == "all") {
        for (const SuiteEntry& entry : kSuites) out.push_back(run_suite(entry.name, params));
    } else {
        out.push_back(run_suite(nameOrAll, params));
    }
    return out;
}

std::string render_report(const SuiteReport& report) {
    std::string line = "suite=" + report.name + " trials=" + std::to_string(report.attempted) +
                       " status=" + (report.pass() ? "PASS" : "FAIL");
    if (report.counterexample) line += " counterexample=" + *report.counterexample;
    return line;
}

// ---------------------------------------------------------------------------
// kernel report

const std::vector<std::string>& kernel_route_names() {
    static const std::vector<std::string> names = {"sum",           "two_point_det", "integral",
                                                   "one_point_det", "pfaffian_sqrt", "pfaffian_zeta"};
    return names;
}

KernelReport kernel_report(const Measure& mu, int n, int m, const std::vector<Rational>& x,
                           const std::vector<Rational>& y, const std::vector<std::string>& routes) {
    if (m < 1 || static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m || m > n) {
        throw InvalidArity("kernel_report: need |x| = |y| = m with 1 <= m <= n");
    }
    OrthoSystem sys = build_system(mu, n);
    KernelPoint pt{x, y};
    std::vector<Rational> z = pt.z();

    std::ostringstream out;
    std::vector<Rational> values;
    auto emitValue = [&](const std::string& route, const Rational& v) {
        out << "route=" << route << " value=" << v.str() << "\n";
        values.push_back(v);
    };
    auto emitSkip = [&](const std::string& route, const std::string& reason) {
        out << "route=" << route << " skipped=" << reason << "\n";
    };

    for (const std::string& route : kernel_route_names()) {
        if (!routes.empty() && routes[0] != "all" &&
            std::find(routes.begin(), routes.end(), route) == routes.end()) {
            continue;
        }
        try {
            if (route == "sum") {
                emitValue(route, km_eval(sys, pt, KmRoute::Sum));
            } else if (route == "two_point_det") {
                emitValue(route, km_eval(sys, pt, KmRoute::TwoPointDet));
            } else if (route == "integral") {
                emitValue(route, km_eval(sys, pt, KmRoute::Integral));
            } else if (route == "one_point_det") {
                emitValue(route, km_eval(sys, pt, KmRoute::OnePointDet));
            } else if (route == "pfaffian_sqrt") {
                if (!pairwise_distinct(z)) {
                    emitSkip(route, "coincident");
                    continue;
                }
                SqrtChoice choice;
                bool rationalRoots = true;
                for (const Rational& zi : z) {
                    std::optional<Rational> root = rational_sqrt(zi);
                    if (!root) {
                        rationalRoots = false;
                        break;
                    }
                    choice.t.push_back(*root);
                }
                if (!rationalRoots) {
                    emitSkip(route, "irrational");
                    continue;
                }
                emitValue(route, km_pfaffian(sys, choice));
            } else if (route == "pfaffian_zeta") {
                if (!pairwise_distinct(z)) {
                    emitSkip(route, "coincident");
                    continue;
                }
                ZetaChoice choice;
                bool rationalZeta = true;
                for (const Rational& zi : z) {
                    std::optional<Rational> disc = rational_sqrt(zi * (zi + Rational(4)));
                    if (!disc) {
                        rationalZeta = false;
                        break;
                    }
                    choice.zeta.push_back((zi + Rational(2) + *disc) / Rational(2));
                }
                if (!rationalZeta) {
                    emitSkip(route, "irrational");
                    continue;
                }
                emitValue(route, km_pfaffian(sys, choice));
            }
        } catch (const CoincidentPoints&) {
            emitSkip(route, "coincident");
        } catch (const DegenerateMeasure&) {
            emitSkip(route, "degenerate");
        }
    }

    bool agree = true;
    for (const Rational& v : values) {
        if (!(v == values.front())) agree = false;
    }
    out << "agreement=" << (agree ? "true" : "false") << "\n";
    return KernelReport{out.str(), agree ? 0 : 1};
}

std::string ortho_report(const Measure& mu, int n) {
    OrthoSystem sys = build_system(mu, n);
    std::ostringstream out;
    out << "n=" << n << " support=" << mu.size() << "\n";
    for (int k = 0; k <= n; ++k) {
        out << "k=" << k << " poly=" << sys.poly(k).str();
        if (k < n) out << " norm=" << sys.norm(k).str();
        out << "\n";
    }
    return out.str();
}

std::string schur_report(const Measure& mu, int n, int m) {
    OrthoSystem sys = build_system(mu, n);
    SchurExpansion expansion = schur_expansion(sys, m);
    std::ostringstream out;
    out << "n=" << n << " m=" << m << " pairs=" << expansion.coefficients.size() << "\n";
    for (const auto& [key, coeff] : expansion.coefficients) {
        out << "lambda=" << key.first.str() << " mu=" << key.second.str() << " coeff=" << coeff.str()
            << "\n";
    }
    return out.str();
}

}  // namespace cdk
