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

#ifndef QBOREL_DUALITY_HPP
#define QBOREL_DUALITY_HPP

#include "qborel/algebra.hpp"

namespace qborel {

enum class PairingKind { QSelfDual, Classical, Kappa };

/// Which pairing to use. Slot 1 is always the enveloping-type algebra
/// (U_q(b+), U(b+), U(b_{n+})) and slot 2 the function-type one.
struct PairingId {
    PairingKind kind = PairingKind::QSelfDual;
    int n = 2;

    static PairingId q_selfdual() { return {PairingKind::QSelfDual, 2}; }
    static PairingId classical() { return {PairingKind::Classical, 2}; }
    static PairingId kappa(int n) {
        if (n < 2) throw InvalidDescriptor("kappa pairing needs n >= 2");
        return {PairingKind::Kappa, n};
    }

    AlgebraId left() const {
        switch (kind) {
            case PairingKind::QSelfDual: return AlgebraId::uq();
            case PairingKind::Classical: return AlgebraId::u();
            case PairingKind::Kappa: return AlgebraId::un(n);
        }
        return {};
    }
    AlgebraId right() const {
        switch (kind) {
            case PairingKind::QSelfDual: return AlgebraId::uq();
            case PairingKind::Classical: return AlgebraId::c();
            case PairingKind::Kappa: return AlgebraId::cn(n);
        }
        return {};
    }
};

/// Pairing of two basis monomials:
///   q:         <X^n g^m, X^r g^s> = delta_{nr} [n]_q! q^{-n(n-1)/2} q^{-ms}
///   classical: <X^n H^m, X^r g^s> = delta_{nr} n! s^m
///   kappa:     <x^m x0^k, p^r g^s> = prod_i delta_{m_i r_i} m_i! s^k
template <class S>
S pair_monomials(const PairingId& id, const Monomial& a, const Monomial& b) {
    if (a.x != b.x) return S(0);
    if (id.kind == PairingKind::QSelfDual) {
        if constexpr (ScalarTraits<S>::has_q) {
            const int n = a.x[0];
            return qfact(n) * RatFunc::q_pow(-n * (n - 1) / 2 - a.col * b.col);
        } else {
            throw AlgebraMismatch("q pairing needs rational-function scalars");
        }
    }
    Rational v = Rational(b.col).pow(a.col);
    for (auto e : a.x) v *= factorial(e);
    return ScalarTraits<S>::from_rational(v);
}

template <class S>
S pair(const PairingId& id, const Element<S>& a, const Element<S>& b) {
    if (!(a.algebra() == id.left()) || !(b.algebra() == id.right()))
        throw AlgebraMismatch("pairing slots expect " + id.left().name() + " x " + id.right().name() + ", got " +
                              a.algebra().name() + " x " + b.algebra().name());
    S r(0);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.x != mb.x) continue;
            r += ca * cb * pair_monomials<S>(id, ma, mb);
        }
    return r;
}

/// Picks the pairing and slot order for <x, a> with x a tangent-side element
/// and a an element of the algebra carrying the calculus.
inline PairingId pairing_for(const AlgebraId& x_side, const AlgebraId& a_side, bool& flipped) {
    flipped = false;
    if (x_side.is_q() && a_side.is_q()) return PairingId::q_selfdual();
    if (x_side.family == Family::U && a_side.family == Family::C) return PairingId::classical();
    if (x_side.family == Family::C && a_side.family == Family::U) {
        flipped = true;
        return PairingId::classical();
    }
    if (x_side.family == Family::Un && a_side.family == Family::Cn && x_side.n == a_side.n)
        return PairingId::kappa(x_side.n);
    if (x_side.family == Family::Cn && a_side.family == Family::Un && x_side.n == a_side.n) {
        flipped = true;
        return PairingId::kappa(x_side.n);
    }
    throw AlgebraMismatch("no pairing between " + x_side.name() + " and " + a_side.name());
}

/// <x, a>, choosing the slot order from the two algebras.
template <class S>
S evaluate(const Element<S>& x, const Element<S>& a) {
    bool flipped = false;
    PairingId id = pairing_for(x.algebra(), a.algebra(), flipped);
    return flipped ? pair(id, a, x) : pair(id, x, a);
}

template <class S>
S evaluate_monomials(const AlgebraId& x_side, const Monomial& x, const AlgebraId& a_side, const Monomial& a) {
    bool flipped = false;
    PairingId id = pairing_for(x_side, a_side, flipped);
    return flipped ? pair_monomials<S>(id, a, x) : pair_monomials<S>(id, x, a);
}

// ---------------------------------------------------------------------------
// Adjoint coaction on C_q(B+) (and C(B+) at q = 1)

/// Ad_L(v) = v_(1) S(v_(3)) (x) v_(2), computed from the iterated coproduct.
template <class S>
Tensor<S, 2> adjoint_coaction_direct(const Element<S>& v) {
    const AlgebraId& id = v.algebra();
    auto d3 = coproduct_on_left(coproduct(v));
    Tensor<S, 2> out(id);
    for (const auto& [k, c] : d3.terms()) {
        Element<S> left = Element<S>::term(id, k[0]) * antipode_monomial<S>(id, k[2]);
        for (const auto& [m, cm] : left.terms()) out.add({m, k[1]}, c * cm);
    }
    return out;
}

/// Closed form of Ad_L on X^n P(g):
///   sum_t [n t]_q g^t X^{n-t} (x) X^t P(g) prod_{u=1}^{n-t} (1 - q^{u-n} g)
/// applied to every X-degree of v separately.
template <class S>
Tensor<S, 2> adjoint_coaction_closed(const Element<S>& v) {
    const AlgebraId& id = v.algebra();
    if (id.family != Family::Uq && id.family != Family::C)
        throw AlgebraMismatch("the adjoint coaction closed form lives on C_q(B+) or C(B+)");
    std::map<int, Element<S>> by_degree;
    for (const auto& [m, c] : v.terms()) {
        auto it = by_degree.try_emplace(m.x[0], Element<S>(id)).first;
        it->second.add(Monomial::xg(0, m.col), c);
    }
    Tensor<S, 2> out(id);
    for (const auto& [n, p] : by_degree) {
        for (int t = 0; t <= n; ++t) {
            Element<S> right = Element<S>::xg(id, t, 0) * p;
            for (int u = 1; u <= n - t; ++u)
                right = right * (Element<S>::constant(id, S(1)) - Element<S>::xg(id, 0, 1, detail::q_factor<S>(id, u - n)));
            Element<S> left = gen_col<S>(id, t) * Element<S>::xg(id, n - t, 0);
            out += tensor(left, right) *= detail::family_binomial<S>(id, n, t);
        }
    }
    return out;
}

/// Convenience overload: X^n P(g) with P given as an element with no X.
template <class S>
Tensor<S, 2> adjoint_coaction_closed(int n, const Element<S>& p) {
    return adjoint_coaction_closed(Element<S>::xg(p.algebra(), n, 0) * p);
}

// ---------------------------------------------------------------------------
// Actions

enum class Generator { X, G, GInv, H };

/// Left adjoint action of a generator of U_q(b+) on U_q(b+):
///   g |> X^n g^k = q^{-n} X^n g^k,  X |> X^n g^k = X^{n+1} g^k (1 - q^{-(n+k)}).
template <class S>
Element<S> adjoint_action_uq(Generator h, const Element<S>& v) {
    const AlgebraId& id = v.algebra();
    if (!id.is_q()) throw AlgebraMismatch("adjoint_action_uq acts on U_q(b+)");
    Element<S> out(id);
    for (const auto& [m, c] : v.terms()) {
        const int n = m.x[0];
        switch (h) {
            case Generator::G: out.add(m, c * ScalarTraits<S>::q_pow(-n)); break;
            case Generator::GInv: out.add(m, c * ScalarTraits<S>::q_pow(n)); break;
            case Generator::X:
                out.add(Monomial::xg(n + 1, m.col), c * (S(1) - ScalarTraits<S>::q_pow(-(n + m.col))));
                break;
            case Generator::H: throw AlgebraMismatch("H is not a generator of U_q(b+)");
        }
    }
    return out;
}

/// Left adjoint action on U(b+):
///   X |> X^n H^m = X^{n+1} (H^m - (H+1)^m),  H |> X^n H^m = n X^n H^m.
template <class S>
Element<S> adjoint_action_classical(Generator h, const Element<S>& v) {
    const AlgebraId& id = v.algebra();
    if (id.family != Family::U) throw AlgebraMismatch("adjoint_action_classical acts on U(b+)");
    Element<S> out(id);
    for (const auto& [m, c] : v.terms()) {
        const int n = m.x[0];
        switch (h) {
            case Generator::H: out.add(m, c * S(n)); break;
            case Generator::X:
                for (int j = 0; j < m.col; ++j)
                    out.add(Monomial::xg(n + 1, j), -c * detail::from_rational<S>(binomial(m.col, j)));
                break;
            default: throw AlgebraMismatch("U(b+) is generated by X and H");
        }
    }
    return out;
}

/// h |> v = h_(1) v S(h_(2)), for cross-checking the closed forms.
template <class S>
Element<S> adjoint_action_bruteforce(const Element<S>& h, const Element<S>& v) {
    Element<S> out(v.algebra());
    for (const auto& [k, c] : coproduct(h).terms())
        out += Element<S>::term(h.algebra(), k[0]) * v * antipode_monomial<S>(h.algebra(), k[1]) * c;
    return out;
}

/// Coregular action h |> a = a_(1) <a_(2), h>, where h lives on the
/// tangent side of the pairing.
template <class S>
Element<S> coregular_action(const Element<S>& h, const Element<S>& a) {
    Element<S> out(a.algebra());
    for (const auto& [k, c] : coproduct(a).terms()) {
        S v(0);
        for (const auto& [mh, ch] : h.terms())
            v += ch * evaluate_monomials<S>(h.algebra(), mh, a.algebra(), k[1]);
        if (!v.is_zero()) out.add(k[0], c * v);
    }
    return out;
}

/// a |> x = <x_(1), a> x_(2): the action of the calculus algebra on the
/// tangent side. No projection to ker(eps) is applied.
template <class S>
Element<S> tangent_action(const Element<S>& a, const Element<S>& x) {
    Element<S> out(x.algebra());
    for (const auto& [k, c] : coproduct(x).terms()) {
        S v(0);
        for (const auto& [ma, ca] : a.terms()) v += ca * evaluate_monomials<S>(x.algebra(), k[0], a.algebra(), ma);
        if (!v.is_zero()) out.add(k[1], c * v);
    }
    return out;
}

/// Braided derivation d_x(a) = <x, a_(1)> a_(2).
template <class S>
Element<S> derivation_oracle(const Element<S>& x, const Element<S>& a) {
    Element<S> out(a.algebra());
    for (const auto& [k, c] : coproduct(a).terms()) {
        S v(0);
        for (const auto& [mx, cx] : x.terms()) v += cx * evaluate_monomials<S>(x.algebra(), mx, a.algebra(), k[0]);
        if (!v.is_zero()) out.add(k[1], c * v);
    }
    return out;
}

/// Checks d_x(ab) = d_x(a) b + a_(2) d_{a_(1) |> x}(b), with the acting
/// element projected to ker(eps) before it is used as a derivation.
template <class S>
bool braided_leibniz_check(const Element<S>& x, const Element<S>& a, const Element<S>& b) {
    Element<S> lhs = derivation_oracle(x, a * b);
    Element<S> rhs = derivation_oracle(x, a) * b;
    for (const auto& [k, c] : coproduct(a).terms()) {
        Element<S> ax = project_ker_counit(tangent_action(Element<S>::term(a.algebra(), k[0]), x));
        if (ax.is_zero()) continue;
        rhs += Element<S>::term(a.algebra(), k[1]) * derivation_oracle(ax, b) * c;
    }
    return lhs == rhs;
}

}  // namespace qborel

#endif  // QBOREL_DUALITY_HPP
