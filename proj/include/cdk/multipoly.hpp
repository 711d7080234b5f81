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
#include <span>
#include <string>
#include <vector>

#include "cdk/rational.hpp"

namespace cdk {

/// Orders variable names by alphabetic prefix, then numeric suffix, so that
/// "x2" < "x10" and "x9" < "y1".
bool var_less(const std::string& a, const std::string& b);

/// Weakly decreasing list of nonnegative integers; trailing zeros are
/// stripped so each partition has one canonical representation.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    /// Part k (1-based), zero beyond the stored length.
    int part(int k) const;

    std::string str() const;  // "(2,1)", "()" for the empty partition

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Variables are kept sorted by var_less; each term maps an exponent vector
/// (one entry per variable) to a nonzero coefficient. Two polynomials are
/// equal iff they agree after aligning their variable lists.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;  // zero polynomial with no variables

    static MultiPoly constant(const Rational& c) { return constant(c, {}); }
    static MultiPoly constant(const Rational& c, std::vector<std::string> vars);
    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(const Rational& c, std::vector<std::string> vars, Exponents exps);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial included).
    Rational constant_value() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& var) const;

    Rational eval(std::span<const Rational> point) const;
    MultiPoly derivative(const std::string& var) const;

    /// Same polynomial with the values of variable slots i and j exchanged.
    MultiPoly swapped(std::size_t i, std::size_t j) const;

    /// Embeds into a superset of variables (used to align operands).
    MultiPoly with_variables(std::vector<std::string> vars) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }
    friend MultiPoly operator/(const MultiPoly& p, const Rational& c);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Canonical text form: terms in graded-lexicographic order, highest
    /// total degree first, e.g. "1/2*x1*y1 + 1/3".
    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    static void align(MultiPoly& a, MultiPoly& b);

    std::vector<std::string> vars_;
    TermMap terms_;

    friend MultiPoly divide_exact_by_linear(const MultiPoly& p, std::size_t j, std::size_t i);
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Exact value of p at the given point; the point length must match the
/// number of variables of p.
Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);

/// Formal partial derivative with respect to a variable of p.
MultiPoly poly_derivative(const MultiPoly& p, const std::string& var);

/// The product of (v_j - v_i) over variable slots i < j of `vars`.
MultiPoly vandermonde_poly(std::vector<std::string> vars);
/// Same over the standard variables x1..xm; the constant 1 for m <= 1.
MultiPoly vandermonde_poly(int m);

/// Exact quotient p / prod_{i<j}(v_j - v_i) over the given variable slots of
/// p. The input must be antisymmetric in those slots.
MultiPoly divide_by_vandermonde_block(const MultiPoly& p, std::span<const std::size_t> slots);
/// Exact quotient by the full Vandermonde of p's m variables.
MultiPoly divide_by_vandermonde(const MultiPoly& p, int m);

/// Schur polynomial s_lambda(prefix1..prefixm) via the bialternant quotient
/// det(x_i^{s_j - 1}) / Vandermonde, with {s_j} = {lambda_k + m + 1 - k}.
MultiPoly schur_polynomial(const Partition& lambda, int m, const std::string& prefix = "x");

/// Determinant of a square matrix of polynomials (cofactor expansion; meant
/// for the small alternants used throughout).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& entries);

/// Re-expresses a univariate polynomial (or constant) in the named variable.
MultiPoly embed_univariate(const MultiPoly& p, const std::string& var);

/// Evaluates a polynomial of at most one variable at a single point.
Rational eval_univariate(const MultiPoly& p, const Rational& x);

}  // namespace cdk
