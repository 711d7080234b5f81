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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdk/measure.hpp"
#include "cdk/rational.hpp"

namespace cdk {

struct SuiteParams {
    int trials = 50;
    std::uint64_t seed = 42;
    int maxN = 4;
    int maxM = 2;
};

struct SuiteReport {
    std::string name;
    int attempted = 0;
    int passed = 0;
    std::optional<std::string> counterexample;  // present iff passed < attempted
    std::chrono::milliseconds duration{0};

    bool pass() const { return attempted == passed; }
};

/// Names of the randomized verification suites, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite; throws InvalidArgument for an unknown name. Deterministic
/// given the parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

/// Runs a single suite or, for "all", every suite in registry order.
std::vector<SuiteReport> run_suites(const std::string& nameOrAll, const SuiteParams& params);

/// One stdout record per report: "suite=<name> trials=<t> status=PASS|FAIL"
/// plus a trailing counterexample token on failure. Durations are kept out
/// of the record so that seeded runs stay byte-identical.
std::string render_report(const SuiteReport& report);

struct KernelReport {
    std::string text;  // one "route=..." line per route plus "agreement=..."
    int exitCode;      // 0 agreement, 1 disagreement
};

/// Evaluates K_m at (x, y) through the requested routes ("all" or a subset
/// of sum, two_point_det, integral, one_point_det, pfaffian_sqrt,
/// pfaffian_zeta). Routes whose preconditions fail are reported as skipped
/// without breaking agreement.
KernelReport kernel_report(const Measure& mu, int n, int m, const std::vector<Rational>& x,
                           const std::vector<Rational>& y, const std::vector<std::string>& routes);

/// Report of the orthogonal system: one line per polynomial.
std::string ortho_report(const Measure& mu, int n);

/// Report of the Schur expansion coefficients of K_m.
std::string schur_report(const Measure& mu, int n, int m);

/// Names accepted by kernel_report.
const std::vector<std::string>& kernel_route_names();

}  // namespace cdk
