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

#ifndef QBOREL_PARSE_HPP
#define QBOREL_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qborel/algebra.hpp"

namespace qborel {

/// Syntax tree of an algebra expression. Juxtaposition is multiplication,
/// ^ binds tighter than * and /, which bind tighter than + and -.
struct Expr {
    enum class Kind { Number, Q, Generator, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Number;
    Rational value;
    std::string name;
    int exponent = 0;
    std::size_t pos = 0;
    std::vector<Expr> args;

    bool contains_q() const;
    bool contains_generator() const;
    /// Prefix form, e.g. "(+ (* X g) 2)".
    std::string to_string() const;
};

/// Parses src. Identifiers are X, g, H, q, x0..x9 and p1..p9; q may only
/// appear in a coefficient, before every generator of its product.
Expr parse(std::string_view src);
/// As above, and every generator must belong to id.
Expr parse(std::string_view src, const AlgebraId& id);

namespace detail {

template <class S>
S scalar_power(const S& s, int e) {
    if (e < 0) {
        if (s.is_zero()) throw DomainError("negative power of zero");
        return scalar_power(S(1) / s, -e);
    }
    S r(1);
    for (int i = 0; i < e; ++i) r *= s;
    return r;
}

template <class S>
bool is_scalar(const Element<S>& a) {
    return a.is_zero() || (a.size() == 1 && a.terms().begin()->first.is_unit());
}

}  // namespace detail

/// Evaluates bottom-up, normal ordering every product.
template <class S>
Element<S> eval_expr(const Expr& e, const AlgebraId& id) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return Element<S>::constant(id, ScalarTraits<S>::from_rational(e.value));
        case K::Q:
            if constexpr (ScalarTraits<S>::has_q) return Element<S>::constant(id, S::q());
            throw AlgebraMismatch("q appears in " + id.name() + ", whose coefficients are rational");
        case K::Generator:
            if (e.name == id.col_name()) return gen_col<S>(id);
            for (int i = 0; i < id.x_count(); ++i)
                if (e.name == id.x_name(i)) return gen_x<S>(id, i);
            throw AlgebraMismatch("generator " + e.name + " is not in " + id.name());
        case K::Neg: return -eval_expr<S>(e.args[0], id);
        case K::Add: return eval_expr<S>(e.args[0], id) + eval_expr<S>(e.args[1], id);
        case K::Sub: return eval_expr<S>(e.args[0], id) - eval_expr<S>(e.args[1], id);
        case K::Mul: return eval_expr<S>(e.args[0], id) * eval_expr<S>(e.args[1], id);
        case K::Div: {
            const Element<S> den = eval_expr<S>(e.args[1], id);
            if (!detail::is_scalar(den)) throw DomainError("division by a non-scalar");
            if (den.is_zero()) throw DomainError("division by zero");
            return eval_expr<S>(e.args[0], id) * (S(1) / den.coeff(Monomial{}));
        }
        case K::Pow: {
            const Element<S> base = eval_expr<S>(e.args[0], id);
            if (e.exponent >= 0) return power(base, e.exponent);
            if (detail::is_scalar(base))
                return Element<S>::constant(id, detail::scalar_power(base.coeff(Monomial{}), e.exponent));
            if (base.size() == 1 && id.laurent_column()) {
                const auto& [m, c] = *base.terms().begin();
                if (m.xdeg() == 0)
                    return Element<S>::xg(id, 0, m.col * e.exponent, detail::scalar_power(c, e.exponent));
            }
            throw DomainError("negative power of a non-invertible element");
        }
    }
    throw DomainError("malformed expression");
}

template <class S>
Element<S> parse_element(std::string_view src, const AlgebraId& id) {
    return eval_expr<S>(parse(src, id), id);
}

}  // namespace qborel

#endif  // QBOREL_PARSE_HPP
