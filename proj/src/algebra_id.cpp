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

#include "qborel/algebra_id.hpp"

#include "qborel/errors.hpp"

namespace qborel {

AlgebraId AlgebraId::un(int n) {
    if (n < 2 || n > kMaxXLetters + 1) throw InvalidDescriptor("U(b_n+) needs 2 <= n <= 10");
    return {Family::Un, n};
}

AlgebraId AlgebraId::cn(int n) {
    if (n < 2 || n > kMaxXLetters + 1) throw InvalidDescriptor("C(B_n+) needs 2 <= n <= 10");
    return {Family::Cn, n};
}

std::string AlgebraId::name() const {
    switch (family) {
        case Family::Uq: return "Uq";
        case Family::U: return "U";
        case Family::C: return "C";
        case Family::Un: return "Un(" + std::to_string(n) + ")";
        case Family::Cn: return "Cn(" + std::to_string(n) + ")";
    }
    return "?";
}

std::string AlgebraId::x_name(int i) const {
    switch (family) {
        case Family::Un: return "x" + std::to_string(i + 1);
        case Family::Cn: return "p" + std::to_string(i + 1);
        default: return "X";
    }
}

std::string AlgebraId::col_name() const {
    switch (family) {
        case Family::U: return "H";
        case Family::Un: return "x0";
        default: return "g";
    }
}

namespace {

std::string power(const std::string& letter, int e) {
    if (e == 1) return letter;
    return letter + "^" + std::to_string(e);
}

}  // namespace

std::string render_monomial(const AlgebraId& id, const Monomial& m) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += " ";
        out += s;
    };
    for (int i = id.x_count() - 1; i >= 0; --i)
        if (m.x[static_cast<std::size_t>(i)] != 0) append(power(id.x_name(i), m.x[static_cast<std::size_t>(i)]));
    if (m.col != 0) append(power(id.col_name(), m.col));
    return out.empty() ? "1" : out;
}

}  // namespace qborel
