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

#include <span>
#include <vector>

#include "cdk/rational.hpp"

namespace cdk {

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw InvalidArgument("Matrix: negative dimension");
    }

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[index(i, j)]; }
    const Rational& at(int i, int j) const { return e_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InvalidArgument("Matrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Submatrix with the given row and column index lists (0-based).
Matrix select(const Matrix& a, std::span<const int> rows, std::span<const int> cols);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. The 0x0 determinant is 1.
Rational determinant(const Matrix& a);

/// Even-dimensional skew-symmetric rational matrix; entries are stored in
/// full with a_{ij} = -a_{ji} enforced on write.
class SkewMatrix {
public:
    explicit SkewMatrix(int dim);

    /// Builds from a full matrix, validating exact skew-symmetry.
    static SkewMatrix from_matrix(const Matrix& a);

    int dim() const { return dim_; }
    const Rational& at(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, const Rational& v);

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw InvalidArgument("SkewMatrix: index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    int dim_;
    std::vector<Rational> e_;
};

/// Exact Pfaffian by expansion along the first active row with memoized
/// minors; pfaffian(A)^2 = determinant(A). The empty Pfaffian is 1.
Rational pfaffian(const SkewMatrix& a);

/// prod_{i<j}(v_j - v_i) of a coordinate vector.
Rational vandermonde_value(std::span<const Rational> v);

/// True when all entries are pairwise distinct.
bool pairwise_distinct(std::span<const Rational> v);

}  // namespace cdk
