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

#include <stdexcept>
#include <string>

namespace cdk {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Wrong number of arguments, variables, or mismatched dimensions.
struct InvalidArity : Error {
    explicit InvalidArity(const std::string& what) : Error(what) {}
};

// A scalar/index argument violates a documented precondition.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Input to an exact Vandermonde division is not antisymmetric.
struct NotAntisymmetric : Error {
    explicit NotAntisymmetric(const std::string& what) : Error(what) {}
};

// Partition is malformed or does not fit the requested variable count.
struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string& what) : Error(what) {}
};

// The bilinear pairing degenerates before the requested degree.
struct DegenerateMeasure : Error {
    explicit DegenerateMeasure(const std::string& what) : Error(what) {}
};

// A route that divides by a Vandermonde factor was given repeated points.
struct CoincidentPoints : Error {
    explicit CoincidentPoints(const std::string& what) : Error(what) {}
};

// A denominator required by an identity evaluator vanishes.
struct SingularInput : Error {
    explicit SingularInput(const std::string& what) : Error(what) {}
};

// The supplied function families are not bases (Gram determinant zero).
struct DegenerateBasis : Error {
    explicit DegenerateBasis(const std::string& what) : Error(what) {}
};

// A measure violates its invariants (duplicate points, zero weights, ...).
struct InvalidMeasure : Error {
    explicit InvalidMeasure(const std::string& what) : Error(what) {}
};

// Malformed textual input (rationals, measure files).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cdk
