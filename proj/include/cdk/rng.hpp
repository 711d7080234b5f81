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

#include <cstdint>
#include <vector>

#include "cdk/rational.hpp"

namespace cdk {

/// splitmix64 stream. Self-contained so that seeded runs are byte-identical
/// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        if (hi < lo) throw InvalidArgument("Rng::range: empty interval");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Random rational with numerator in [-9, 9] and denominator in {1,2,3}.
    Rational rational() { return Rational(range(-9, 9), range(1, 3)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    /// k pairwise distinct random rationals.
    std::vector<Rational> distinct_rationals(int k) {
        std::vector<Rational> out;
        int guard = 0;
        while (static_cast<int>(out.size()) < k) {
            Rational r = rational();
            bool fresh = true;
            for (const Rational& v : out) {
                if (v == r) fresh = false;
            }
            if (fresh) {
                out.push_back(r);
            } else if (++guard > 1000) {
                throw Error("Rng: could not draw distinct rationals");
            }
        }
        return out;
    }

private:
    std::uint64_t state_;
};

}  // namespace cdk
