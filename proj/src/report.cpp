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

#include "qborel/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qborel {

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << (r.pass() ? "PASS" : "FAIL") << "  " << r.suite << "  (" << r.checked() << " cases)\n";
    for (const auto& rel : r.relations) {
        os << "  " << (rel.pass() ? "ok  " : "FAIL") << "  " << rel.id << "  [" << rel.anchor << "]  " << rel.checked
           << " checked";
        if (!rel.pass()) os << ", " << rel.failures.size() << " failed";
        os << "\n";
        for (std::size_t i = 0; i < rel.failures.size() && i < 5; ++i) {
            const auto& f = rel.failures[i];
            os << "        input: " << f.input << "\n        expected: " << f.expected << "\n        got: " << f.got << "\n";
        }
        for (const auto& n : rel.notes) os << "        note: " << n << "\n";
    }
    return os.str();
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["anchor"] = r.anchor;
    j["checked"] = r.checked();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    nlohmann::ordered_json relations = nlohmann::ordered_json::array();
    for (const auto& rel : r.relations) {
        nlohmann::ordered_json jr;
        jr["id"] = rel.id;
        jr["anchor"] = rel.anchor;
        jr["checked"] = rel.checked;
        jr["pass"] = rel.pass();
        nlohmann::ordered_json jf = nlohmann::ordered_json::array();
        for (const auto& f : rel.failures) {
            nlohmann::ordered_json e{{"relation", rel.id}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}};
            jf.push_back(e);
            failures.push_back(e);
        }
        jr["failures"] = jf;
        if (!rel.notes.empty()) jr["notes"] = rel.notes;
        relations.push_back(jr);
    }
    j["relations"] = relations;
    j["failures"] = failures;
    j["pass"] = r.pass();
    return j.dump(2);
}

}  // namespace qborel
