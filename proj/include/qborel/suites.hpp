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

#ifndef QBOREL_SUITES_HPP
#define QBOREL_SUITES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qborel/report.hpp"

namespace qborel {

/// Optional overrides; each suite documents its defaults.
struct SuiteParams {
    std::optional<int> n;
    std::optional<int> degree;
    std::set<int> set;
};

/// Registered suite ids, in registration order.
std::vector<std::string> suite_names();

/// One-line description of a suite; throws UnknownSuite.
std::string suite_description(const std::string& name);

/// Runs a suite. Relation ids are prefixed by the part of the suite that
/// produced them, e.g. "q(3)/leibniz". Throws UnknownSuite.
Report run_suite(const std::string& name, const SuiteParams& params = {});

/// Runs several suites concurrently; the reports come back in the order of names.
std::vector<Report> run_suites(const std::vector<std::string>& names, const SuiteParams& params = {});

}  // namespace qborel

#endif  // QBOREL_SUITES_HPP
