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

#ifndef QBOREL_REPORT_HPP
#define QBOREL_REPORT_HPP

#include <string>
#include <vector>

namespace qborel {

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
};

/// Outcome of checking one identity over a batch of inputs.
struct RelationResult {
    std::string id;
    /// The identity being checked, as formula text.
    std::string anchor;
    long checked = 0;
    std::vector<Failure> failures;
    /// Informational lines (e.g. a reported discrepancy) that do not fail.
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }

    /// Counts one case and records it as a failure when got != expected.
    template <class T>
    void expect(const std::string& input, const T& expected, const T& got, std::string (*show)(const T&)) {
        ++checked;
        if (!(expected == got)) failures.push_back({input, show(expected), show(got)});
    }
    void expect_true(const std::string& input, bool ok, const std::string& detail = "false") {
        ++checked;
        if (!ok) failures.push_back({input, "true", detail});
    }
};

/// A named batch of relation results.
struct Report {
    std::string suite;
    std::string anchor;
    std::vector<RelationResult> relations;

    long checked() const {
        long n = 0;
        for (const auto& r : relations) n += r.checked;
        return n;
    }
    bool pass() const {
        for (const auto& r : relations)
            if (!r.pass()) return false;
        return true;
    }
    void merge(const Report& o) { relations.insert(relations.end(), o.relations.begin(), o.relations.end()); }
};

/// Plain text summary, one line per relation.
std::string to_text(const Report& r);
/// JSON document with schema version 1.
std::string to_json(const Report& r);

}  // namespace qborel

#endif  // QBOREL_REPORT_HPP
