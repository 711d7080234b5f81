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

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdk/measure_io.hpp"
#include "cdk/suites.hpp"

namespace {

// Exit codes: 0 success/agreement, 1 mathematical disagreement, 2 invalid
// invocation or input.
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

std::vector<cdk::Rational> parse_coordinates(const std::string& list) {
    std::vector<cdk::Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(cdk::Rational::parse(item));
    if (out.empty()) throw cdk::ParseError("empty coordinate list");
    return out;
}

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Christoffel-Darboux kernel toolkit"};
    app.require_subcommand(1);

    std::string measurePath, xList, yList, routesList = "all", suiteName;
    int n = 0, m = 0;
    int trials = 50, maxN = 4, maxM = 2;
    std::uint64_t seed = 42;

    CLI::App* ortho = app.add_subcommand("ortho", "monic orthogonal polynomials and norms");
    ortho->add_option("--measure", measurePath, "measure file (JSON)")->required();
    ortho->add_option("--n", n, "degree bound")->required();

    CLI::App* kernel = app.add_subcommand("kernel", "evaluate K_m through independent routes");
    kernel->add_option("--measure", measurePath, "measure file (JSON)")->required();
    kernel->add_option("--n", n, "degree bound")->required();
    kernel->add_option("--m", m, "number of coordinates per block")->required();
    kernel->add_option("--x", xList, "comma-separated rationals")->required();
    kernel->add_option("--y", yList, "comma-separated rationals")->required();
    kernel->add_option("--routes", routesList, "route list or \"all\"");

    CLI::App* schur = app.add_subcommand("schur", "Schur expansion coefficients of K_m");
    schur->add_option("--measure", measurePath, "measure file (JSON)")->required();
    schur->add_option("--n", n, "degree bound")->required();
    schur->add_option("--m", m, "number of coordinates per block")->required();

    CLI::App* verify = app.add_subcommand("verify", "seeded randomized verification suites");
    verify->add_option("--suite", suiteName, "suite name or \"all\"")->required();
    verify->add_option("--trials", trials, "instances per suite");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--max-n", maxN, "largest degree bound drawn");
    verify->add_option("--max-m", maxM, "largest block size drawn");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ortho->parsed()) {
            std::cout << cdk::ortho_report(cdk::parse_measure(measurePath), n);
            return kExitOk;
        }

        if (kernel->parsed()) {
            std::vector<cdk::Rational> x = parse_coordinates(xList);
            std::vector<cdk::Rational> y = parse_coordinates(yList);
            if (m < 1 || static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m || m > n) {
                std::cerr << "error: need |x| = |y| = m with 1 <= m <= n\n";
                return kExitUsage;
            }
            std::vector<std::string> routes = split_list(routesList);
            for (const std::string& route : routes) {
                if (route != "all" && std::find(cdk::kernel_route_names().begin(),
                                                cdk::kernel_route_names().end(),
                                                route) == cdk::kernel_route_names().end()) {
                    std::cerr << "error: unknown route " << route << "\n";
                    return kExitUsage;
                }
            }
            cdk::KernelReport report =
                cdk::kernel_report(cdk::parse_measure(measurePath), n, m, x, y, routes);
            std::cout << report.text;
            return report.exitCode == 0 ? kExitOk : kExitDisagreement;
        }

        if (schur->parsed()) {
            if (m < 0 || m > n) {
                std::cerr << "error: need 0 <= m <= n\n";
                return kExitUsage;
            }
            std::cout << cdk::schur_report(cdk::parse_measure(measurePath), n, m);
            return kExitOk;
        }

        if (verify->parsed()) {
            if (suiteName != "all" && !cdk::is_suite_name(suiteName)) {
                std::cerr << "error: unknown suite " << suiteName << "\n";
                return kExitUsage;
            }
            if (trials < 1) {
                std::cerr << "error: trials must be >= 1\n";
                return kExitUsage;
            }
            cdk::SuiteParams params{trials, seed, maxN, maxM};
            bool allPass = true;
            for (const cdk::SuiteReport& report : cdk::run_suites(suiteName, params)) {
                std::cout << cdk::render_report(report) << "\n";
                allPass = allPass && report.pass();
            }
            return allPass ? kExitOk : kExitDisagreement;
        }
    } catch (const cdk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
