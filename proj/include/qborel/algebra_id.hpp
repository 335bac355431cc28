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

#ifndef QBOREL_ALGEBRA_ID_HPP
#define QBOREL_ALGEBRA_ID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace qborel {

/// The five algebras. Uq is U_q(b+), which doubles as C_q(B+) through
/// self-duality; U and C are its classical limits; Un and Cn are the
/// kappa-Minkowski algebra U(b_{n+}) and its momentum algebra C(B_{n+}).
enum class Family : std::uint8_t { Uq, U, C, Un, Cn };

/// Largest number of X-type letters (x_1..x_9 or p_1..p_9).
inline constexpr int kMaxXLetters = 9;

struct AlgebraId {
    Family family = Family::Uq;
    int n = 2;

    static AlgebraId uq() { return {Family::Uq, 2}; }
    static AlgebraId u() { return {Family::U, 2}; }
    static AlgebraId c() { return {Family::C, 2}; }
    static AlgebraId un(int n);
    static AlgebraId cn(int n);

    /// Number of X-type letters: one for Uq, U, C and n - 1 for Un, Cn.
    int x_count() const { return (family == Family::Un || family == Family::Cn) ? n - 1 : 1; }
    /// The column letter is g (Laurent) for Uq, C, Cn and H or x0 (polynomial) otherwise.
    bool laurent_column() const { return family == Family::Uq || family == Family::C || family == Family::Cn; }
    bool is_q() const { return family == Family::Uq; }
    bool commutative() const { return family == Family::C || family == Family::Cn; }

    std::string name() const;
    /// Letter for X-type index i (0-based): "X", "x1", "p1", ...
    std::string x_name(int i) const;
    /// Letter for the column variable: "g", "H" or "x0".
    std::string col_name() const;

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Normal-ordered basis monomial. x holds the exponents of the X-type
/// letters (X; x_1..x_{n-1}; p_1..p_{n-1}); col is the exponent of the
/// column letter (g, H or x_0), stored to the right of every X-type letter.
struct Monomial {
    std::array<std::int16_t, kMaxXLetters> x{};
    int col = 0;

    static Monomial xg(int xdeg, int col) {
        Monomial m;
        m.x[0] = static_cast<std::int16_t>(xdeg);
        m.col = col;
        return m;
    }
    int xdeg() const {
        int s = 0;
        for (auto e : x) s += e;
        return s;
    }
    bool is_unit() const { return col == 0 && xdeg() == 0; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Text form in the storage order, e.g. "X^2 g^-1", "x2 x1^3 x0", "1".
std::string render_monomial(const AlgebraId& id, const Monomial& m);

}  // namespace qborel

#endif  // QBOREL_ALGEBRA_ID_HPP
