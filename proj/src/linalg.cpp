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

#include "cdk/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace cdk {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix select(const Matrix& a, std::span<const int> rows, std::span<const int> cols) {
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
        }
    }
    return out;
}

Rational determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidArity("determinant: matrix is not square");
    const int n = a.rows();
    if (n == 0) return Rational(1);

    Matrix m = a;
    int sign = 1;
    Rational prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m.at(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return Rational(0);
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    Rational det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

SkewMatrix::SkewMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 0 || dim % 2 != 0) throw InvalidArity("SkewMatrix: dimension must be even");
}

SkewMatrix SkewMatrix::from_matrix(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidArity("SkewMatrix: matrix is not square");
    SkewMatrix s(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (!(a.at(i, j) == -a.at(j, i))) {
                throw InvalidArgument("SkewMatrix: matrix is not skew-symmetric");
            }
        }
        if (!a.at(i, i).is_zero()) throw InvalidArgument("SkewMatrix: nonzero diagonal");
    }
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = i + 1; j < a.cols(); ++j) s.set(i, j, a.at(i, j));
    }
    return s;
}

void SkewMatrix::set(int i, int j, const Rational& v) {
    if (i == j) {
        if (!v.is_zero()) throw InvalidArgument("SkewMatrix: nonzero diagonal entry");
        return;
    }
    e_[index(i, j)] = v;
    e_[index(j, i)] = -v;
}

namespace {

Rational pfaffian_masked(const SkewMatrix& a, std::uint32_t mask,
                         std::unordered_map<std::uint32_t, Rational>& memo) {
    if (mask == 0) return Rational(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    int first = 0;
    while (((mask >> first) & 1u) == 0) ++first;

    // pf = sum over remaining partners j of (-1)^{pos(j)} a_{first,j} pf(rest),
    // with pos(j) the 1-based position of j among the active indices.
    Rational total(0);
    int pos = 1;
    for (int j = first + 1; j < a.dim(); ++j) {
        if (((mask >> j) & 1u) == 0) continue;
        ++pos;
        if (!a.at(first, j).is_zero()) {
            std::uint32_t rest = mask & ~(1u << first) & ~(1u << j);
            Rational term = a.at(first, j) * pfaffian_masked(a, rest, memo);
            if (pos % 2 == 0) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    memo.emplace(mask, total);
    return total;
}

}  // namespace

Rational pfaffian(const SkewMatrix& a) {
    if (a.dim() > 30) throw InvalidArgument("pfaffian: dimension too large for subset expansion");
    std::uint32_t mask = a.dim() == 32 ? ~0u : ((1u << a.dim()) - 1u);
    std::unordered_map<std::uint32_t, Rational> memo;
    return pfaffian_masked(a, mask, memo);
}

Rational vandermonde_value(std::span<const Rational> v) {
    Rational out(1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) out *= v[j] - v[i];
    }
    return out;
}

bool pairwise_distinct(std::span<const Rational> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return false;
        }
    }
    return true;
}

}  // namespace cdk
