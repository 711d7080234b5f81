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

#include "cdk/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cdk {

bool var_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t cut = s.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
        return std::pair<std::string_view, std::string_view>(
            std::string_view(s).substr(0, cut), std::string_view(s).substr(cut));
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.size() != nb.size()) return na.size() < nb.size();  // numeric compare
    if (na != nb) return na < nb;
    return a < b;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
            throw InvalidPartition("parts must be weakly decreasing and nonnegative");
        }
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int k) const {
    if (k < 1) throw InvalidArgument("Partition::part: index is 1-based");
    return k <= size() ? parts_[k - 1] : 0;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// MultiPoly construction

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end(), var_less);
    MultiPoly p;
    p.vars_ = std::move(vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, std::vector<std::string> vars, Exponents exps) {
    if (vars.size() != exps.size()) throw InvalidArity("monomial: vars/exponents mismatch");
    // sort variables, carrying exponents along
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return var_less(vars[a], vars[b]); });
    MultiPoly p;
    p.vars_.reserve(vars.size());
    Exponents e;
    e.reserve(exps.size());
    for (std::size_t k : order) {
        if (exps[k] < 0) throw InvalidArgument("monomial: negative exponent");
        p.vars_.push_back(vars[k]);
        e.push_back(exps[k]);
    }
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

// ---------------------------------------------------------------------------
// Queries

bool MultiPoly::is_constant() const {
    for (const auto& [e, c] : terms_) {
        for (int k : e)
            if (k != 0) return false;
    }
    return true;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw InvalidArity("constant_value: polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    }
    return deg;
}

int MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[idx]);
    return deg;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) {
        throw InvalidArity("eval: point has " + std::to_string(point.size()) +
                           " coordinates, polynomial has " + std::to_string(vars_.size()) +
                           " variables");
    }
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0) term *= point[k].pow(e[k]);
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw InvalidArity("derivative: unknown variable " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents d = e;
        --d[idx];
        out.add_term(d, c * Rational(e[idx]));
    }
    return out;
}

MultiPoly MultiPoly::swapped(std::size_t i, std::size_t j) const {
    if (i >= vars_.size() || j >= vars_.size()) throw InvalidArity("swapped: slot out of range");
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        std::swap(s[i], s[j]);
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> vars) const {
    std::sort(vars.begin(), vars.end(), var_less);
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        auto it = std::lower_bound(vars.begin(), vars.end(), vars_[k], var_less);
        if (it == vars.end() || *it != vars_[k]) {
            throw InvalidArity("with_variables: target set is not a superset");
        }
        slot[k] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly out;
    out.vars_ = std::move(vars);
    for (const auto& [e, c] : terms_) {
        Exponents n(out.vars_.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) n[slot[k]] = e[k];
        out.terms_.emplace(std::move(n), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged), var_less);
    a = a.with_variables(merged);
    b = b.with_variables(std::move(merged));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    MultiPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    MultiPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a, rhs = b;
    MultiPoly::align(lhs, rhs);
    MultiPoly out;
    out.vars_ = lhs.vars_;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out;
    out.vars_ = p.vars_;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
    return out;
}

MultiPoly operator/(const MultiPoly& p, const Rational& c) {
    if (c.is_zero()) throw Error("MultiPoly: division by zero scalar");
    return c.inverse() * p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    MultiPoly lhs = a, rhs = b;
    MultiPoly::align(lhs, rhs);
    return lhs.terms_ == rhs.terms_;
}

// ---------------------------------------------------------------------------
// Text form

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // graded-lexicographic: higher total degree first, then lexicographically
    // larger exponent vector first
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto grade = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int ga = grade(a->first), gb = grade(b->first);
        if (ga != gb) return ga > gb;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            os << mag.str();
        } else if (mag == Rational(1)) {
            os << mono;
        } else {
            os << mag.str() << "*" << mono;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Operations

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) { return p.eval(point); }

MultiPoly poly_derivative(const MultiPoly& p, const std::string& var) { return p.derivative(var); }

MultiPoly vandermonde_poly(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end(), var_less);
    MultiPoly out = MultiPoly::constant(Rational(1), vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            out = out * (MultiPoly::variable(vars[j]) - MultiPoly::variable(vars[i]));
        }
    }
    return out;
}

MultiPoly vandermonde_poly(int m) {
    if (m < 0) throw InvalidArgument("vandermonde_poly: negative variable count");
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    return vandermonde_poly(std::move(vars));
}

// Exact division of p by (v_j - v_i), where v_j, v_i are variable slots.
// Synthetic division in v_j with the monomial v_i as the root; the remainder
// p|_{v_j = v_i} must vanish.
MultiPoly divide_exact_by_linear(const MultiPoly& p, std::size_t j, std::size_t i) {
    int degJ = 0;
    for (const auto& [e, c] : p.terms_) degJ = std::max(degJ, e[j]);

    // Split p into layers A_k by the exponent of v_j (stored with e[j] = 0).
    std::vector<MultiPoly::TermMap> layer(static_cast<std::size_t>(degJ) + 1);
    for (const auto& [e, c] : p.terms_) {
        MultiPoly::Exponents base = e;
        int k = base[j];
        base[j] = 0;
        layer[static_cast<std::size_t>(k)].emplace(std::move(base), c);
    }

    auto accumulate = [](MultiPoly::TermMap& into, const MultiPoly::Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = into.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) into.erase(it);
        }
    };

    // B_{k-1} = A_k + v_i * B_k, from the top layer down.
    MultiPoly out;
    out.vars_ = p.vars();
    MultiPoly::TermMap carry;  // current B_k
    for (int k = degJ; k >= 1; --k) {
        MultiPoly::TermMap b = layer[static_cast<std::size_t>(k)];
        for (const auto& [e, c] : carry) {
            MultiPoly::Exponents shifted = e;
            ++shifted[i];
            accumulate(b, shifted, c);
        }
        for (const auto& [e, c] : b) {
            MultiPoly::Exponents q = e;
            q[j] = k - 1;
            out.terms_.emplace(std::move(q), c);
        }
        carry = std::move(b);
    }
    // remainder = A_0 + v_i * B_0
    MultiPoly::TermMap rem = layer[0];
    for (const auto& [e, c] : carry) {
        MultiPoly::Exponents shifted = e;
        ++shifted[i];
        accumulate(rem, shifted, c);
    }
    if (!rem.empty()) throw Error("internal: inexact division by linear Vandermonde factor");
    return out;
}

MultiPoly divide_by_vandermonde_block(const MultiPoly& p, std::span<const std::size_t> slots) {
    if (slots.size() <= 1) return p;
    for (std::size_t k = 0; k + 1 < slots.size(); ++k) {
        if (!(p.swapped(slots[k], slots[k + 1]) == -p)) {
            throw NotAntisymmetric("polynomial is not antisymmetric in the divided variables");
        }
    }
    MultiPoly q = p;
    for (std::size_t a = 0; a < slots.size(); ++a) {
        for (std::size_t b = a + 1; b < slots.size(); ++b) {
            q = divide_exact_by_linear(q, slots[b], slots[a]);
        }
    }
    return q;
}

MultiPoly divide_by_vandermonde(const MultiPoly& p, int m) {
    if (m < 0) throw InvalidArgument("divide_by_vandermonde: negative variable count");
    if (static_cast<int>(p.vars().size()) != m) {
        throw InvalidArity("divide_by_vandermonde: polynomial does not have " +
                           std::to_string(m) + " variables");
    }
    std::vector<std::size_t> slots(p.vars().size());
    std::iota(slots.begin(), slots.end(), 0);
    return divide_by_vandermonde_block(p, slots);
}

MultiPoly schur_polynomial(const Partition& lambda, int m, const std::string& prefix) {
    if (m < 0) throw InvalidArgument("schur_polynomial: negative variable count");
    if (lambda.size() > m) {
        throw InvalidPartition("partition " + lambda.str() + " has more than " +
                               std::to_string(m) + " parts");
    }
    if (m == 0) return MultiPoly::constant(Rational(1));

    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back(prefix + std::to_string(i));

    // Column exponents s_j - 1 with {s_j} = {lambda_k + m + 1 - k}, ascending.
    std::vector<int> exps;
    for (int k = m; k >= 1; --k) exps.push_back(lambda.part(k) + m - k);

    std::vector<std::vector<MultiPoly>> alternant(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            MultiPoly::Exponents e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(i)] = exps[static_cast<std::size_t>(j)];
            alternant[static_cast<std::size_t>(i)].push_back(
                MultiPoly::monomial(Rational(1), vars, e));
        }
    }
    std::vector<std::size_t> slots(static_cast<std::size_t>(m));
    std::iota(slots.begin(), slots.end(), 0);
    return divide_by_vandermonde_block(poly_det(alternant), slots);
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& entries) {
    const std::size_t n = entries.size();
    for (const auto& row : entries) {
        if (row.size() != n) throw InvalidArity("poly_det: matrix is not square");
    }
    if (n == 0) return MultiPoly::constant(Rational(1));
    if (n == 1) return entries[0][0];
    MultiPoly out;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(entries[r][c]);
            }
            minor.push_back(std::move(row));
        }
        MultiPoly term = entries[0][j] * poly_det(minor);
        if (j % 2 == 0) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

MultiPoly embed_univariate(const MultiPoly& p, const std::string& var) {
    if (p.vars().size() > 1) throw InvalidArity("embed_univariate: polynomial has several variables");
    MultiPoly out;
    std::vector<std::string> vars = {var};
    out = MultiPoly::constant(Rational(0), vars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents n{e.empty() ? 0 : e[0]};
        out += MultiPoly::monomial(c, vars, n);
    }
    return out;
}

Rational eval_univariate(const MultiPoly& p, const Rational& x) {
    if (p.vars().size() > 1) throw InvalidArity("eval_univariate: polynomial has several variables");
    if (p.vars().empty()) return p.constant_value();
    const Rational pt[1] = {x};
    return p.eval(pt);
}

}  // namespace cdk
