/*
   Copyright 2026 The qborel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qborel/suites.hpp"

using namespace qborel;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string suite;
    SuiteParams params;
    std::optional<double> max_seconds;
};

SuiteParams with_degree(int d) {
    SuiteParams p;
    p.degree = d;
    return p;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Hopf axioms on X^n g^m, n <= 6, |m| <= 3", "hopf-axioms", with_degree(6), 30.0},
        {2, "adjoint coaction closed form and q-binomial product", "appendix", {}, std::nullopt},
        {3, "classification of crossed submodules for sum I <= 6", "classification", {}, std::nullopt},
        {4, "q(n) for n = 2..5: dual basis, relations, derivations, decomposition", "thm-qcalc", {}, std::nullopt},
        {5, "two-dimensional calculus relations and expansion of d", "two-dim-corollary", with_degree(5), std::nullopt},
        {6, "q -> 1 limit, degeneracy and failure of the direct sum", "classical", {}, std::nullopt},
        {7, "factor replacement, dual_classical(n) and nat_bp", "dual-classical", {}, std::nullopt},
        {8, "kappa-Minkowski relations, pullback and invariance", "kappa", with_degree(4), 120.0},
        {9, "negative controls", "negative-controls", {}, std::nullopt},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Report r;
        std::string error;
        try {
            r = run_suite(c.suite, c.params);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = !c.max_seconds || seconds < *c.max_seconds;
        const bool pass = error.empty() && r.pass() && r.checked() > 0 && in_time;
        if (!pass) ++failed;

        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
                  << c.suite << ", " << r.checked() << " cases, " << timing;
        if (c.max_seconds) std::cout << " < " << *c.max_seconds << "s";
        std::cout << "]\n";
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        if (!in_time) std::cout << "    runtime bound exceeded\n";
        for (const auto& rel : r.relations)
            if (!rel.pass())
                std::cout << "    " << rel.id << ": " << rel.failures.size() << " of " << rel.checked << " failed\n";
    }
    std::cout << (failed == 0 ? "all 9 criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
