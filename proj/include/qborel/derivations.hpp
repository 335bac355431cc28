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

#ifndef QBOREL_DERIVATIONS_HPP
#define QBOREL_DERIVATIONS_HPP

#include "qborel/algebra.hpp"
#include "qborel/qcombinatorics.hpp"

namespace qborel::ops {

// Operators on commuting polynomials. A CommPoly carries the letters of an
// algebra but multiplies commutatively; normal_order maps it into the algebra.

/// Applies a map defined on monomials, extended linearly.
template <class S, class F>
CommPoly<S> map_terms(const CommPoly<S>& f, F&& on_monomial) {
    CommPoly<S> out(f.algebra());
    for (const auto& [m, c] : f.terms()) on_monomial(m, c, out);
    return out;
}

/// (1/k!) (d/dx_i)^k.
template <class S>
CommPoly<S> divided_x_derivative(const CommPoly<S>& f, int k, int letter = 0) {
    const auto i = static_cast<std::size_t>(letter);
    return map_terms(f, [&](const Monomial& m, const S& c, CommPoly<S>& out) {
        if (m.x[i] < k) return;
        Monomial r = m;
        r.x[i] = static_cast<std::int16_t>(m.x[i] - k);
        out.add(r, c * ScalarTraits<S>::from_rational(binomial(m.x[i], k)));
    });
}

/// d/dx_i.
template <class S>
CommPoly<S> x_derivative(const CommPoly<S>& f, int letter = 0) {
    return divided_x_derivative(f, 1, letter);
}

/// d/dt for the column letter t.
template <class S>
CommPoly<S> col_derivative(const CommPoly<S>& f) {
    return map_terms(f, [](const Monomial& m, const S& c, CommPoly<S>& out) {
        if (m.col == 0) return;
        Monomial r = m;
        r.col = m.col - 1;
        out.add(r, c * S(m.col));
    });
}

/// T_{a,t} f = f(t + a) for the polynomial column letter t.
template <class S>
CommPoly<S> shift_col(const CommPoly<S>& f, int a) {
    return map_terms(f, [&](const Monomial& m, const S& c, CommPoly<S>& out) {
        if (m.col < 0) throw DomainError("shift of a negative power");
        const Rational shift(a);
        Monomial r = m;
        for (int j = 0; j <= m.col; ++j) {
            r.col = j;
            out.add(r, c * ScalarTraits<S>::from_rational(binomial(m.col, j) * shift.pow(m.col - j)));
        }
    });
}

/// (f(t + a) - f(t)) / a.
template <class S>
CommPoly<S> finite_difference_col(const CommPoly<S>& f, int a) {
    if (a == 0) throw DomainError("finite difference with step 0");
    return (shift_col(f, a) - f) * ScalarTraits<S>::from_rational(Rational(1, a));
}

/// Q_{m,g} Q_{m,X} f: g -> q^m g and X -> q^m X.
inline CommPoly<RatFunc> q_scale(const CommPoly<RatFunc>& f, int m_col, int m_x) {
    return map_terms(f, [&](const Monomial& m, const RatFunc& c, CommPoly<RatFunc>& out) {
        out.add(m, c * RatFunc::q_pow(m_col * m.col + m_x * m.x[0]));
    });
}

/// [a]_q = (q^a - 1)/(q - 1) for any integer a.
inline RatFunc qint_signed(int a) {
    if (a >= 0) return RatFunc(qint(a));
    return (RatFunc::q_pow(a) - RatFunc(1)) / (RatFunc::q() - RatFunc(1));
}

/// q-derivative in X: (f(X) - f(qX)) / (X (1 - q)).
inline CommPoly<RatFunc> q_derivative_x(const CommPoly<RatFunc>& f) {
    return map_terms(f, [](const Monomial& m, const RatFunc& c, CommPoly<RatFunc>& out) {
        if (m.x[0] == 0) return;
        out.add(Monomial::xg(m.x[0] - 1, m.col), c * RatFunc(qint(m.x[0])));
    });
}

/// q-derivative in g, with Laurent exponents.
inline CommPoly<RatFunc> q_derivative_g(const CommPoly<RatFunc>& f) {
    return map_terms(f, [](const Monomial& m, const RatFunc& c, CommPoly<RatFunc>& out) {
        if (m.col == 0) return;
        out.add(Monomial::xg(m.x[0], m.col - 1), c * qint_signed(m.col));
    });
}

/// (1/[k]_q!) (d_q/dX)^k.
inline CommPoly<RatFunc> divided_q_derivative_x(const CommPoly<RatFunc>& f, int k) {
    return map_terms(f, [&](const Monomial& m, const RatFunc& c, CommPoly<RatFunc>& out) {
        if (m.x[0] < k) return;
        out.add(Monomial::xg(m.x[0] - k, m.col), c * qbinom(m.x[0], k));
    });
}

/// Euler operator X d/dX + g d/dg: multiplies X^a g^b by a + b.
template <class S>
CommPoly<S> euler(const CommPoly<S>& f) {
    return map_terms(f, [](const Monomial& m, const S& c, CommPoly<S>& out) { out.add(m, c * S(m.xdeg() + m.col)); });
}

}  // namespace qborel::ops

#endif  // QBOREL_DERIVATIONS_HPP
