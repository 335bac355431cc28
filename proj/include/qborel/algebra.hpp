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

#ifndef QBOREL_ALGEBRA_HPP
#define QBOREL_ALGEBRA_HPP

#include <array>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "qborel/algebra_id.hpp"
#include "qborel/errors.hpp"
#include "qborel/scalar.hpp"

namespace qborel {

struct NormalOrderedTag {};
struct CommutativeTag {};

/// Finite linear combination of monomials of one algebra with coefficients
/// in S. Zero coefficients are never stored.
template <class S, class Tag>
class Combination {
   public:
    using Scalar = S;
    using Terms = std::map<Monomial, S>;

    Combination() = default;
    explicit Combination(AlgebraId id) : id_(id) {
        if constexpr (!ScalarTraits<S>::has_q) {
            if (id.is_q()) throw AlgebraMismatch("U_q(b+) needs rational-function coefficients");
        }
    }

    static Combination term(AlgebraId id, const Monomial& m, const S& c = S(1)) {
        Combination r(id);
        r.add(m, c);
        return r;
    }
    static Combination constant(AlgebraId id, const S& c) { return term(id, Monomial{}, c); }
    static Combination xg(AlgebraId id, int xdeg, int col, const S& c = S(1)) {
        return term(id, Monomial::xg(xdeg, col), c);
    }

    const AlgebraId& algebra() const { return id_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add(const Monomial& m, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Combination& operator+=(const Combination& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Combination& operator*=(const S& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    Combination operator-() const {
        Combination r = *this;
        for (auto& [m, v] : r.terms_) v = -v;
        return r;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(Combination a, const S& c) { return a *= c; }
    friend Combination operator*(const S& c, Combination a) { return a *= c; }
    friend bool operator==(const Combination& a, const Combination& b) {
        return a.id_ == b.id_ && a.terms_ == b.terms_;
    }

   private:
    void require_same(const Combination& o) const {
        if (!(id_ == o.id_)) throw AlgebraMismatch("operands in " + id_.name() + " and " + o.id_.name());
    }

    AlgebraId id_;
    Terms terms_;
};

/// Element of one of the five algebras in the storage normal order.
template <class S>
using Element = Combination<S, NormalOrderedTag>;

/// Commutative polynomial in the letters of an algebra (the domain of the
/// normal-ordering maps).
template <class S>
using CommPoly = Combination<S, CommutativeTag>;

namespace detail {

template <class S>
S from_rational(const Rational& r) {
    return ScalarTraits<S>::from_rational(r);
}

/// q^k for the q-family, 1 otherwise.
template <class S>
S q_factor(const AlgebraId& id, int k) {
    if (!id.is_q() || k == 0) return S(1);
    return ScalarTraits<S>::q_pow(k);
}

template <class S>
S family_binomial(const AlgebraId& id, int n, int r) {
    if (id.is_q()) return ScalarTraits<S>::qbinom(n, r);
    return from_rational<S>(binomial(n, r));
}

/// Adds c * (a b) to out, normal ordering the product.
template <class S, class Tag>
void accumulate_product(const AlgebraId& id, const Monomial& a, const Monomial& b, const S& c,
                        Combination<S, Tag>& out) {
    Monomial m;
    for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] = static_cast<std::int16_t>(a.x[i] + b.x[i]);
    if constexpr (std::is_same_v<Tag, CommutativeTag>) {
        m.col = a.col + b.col;
        out.add(m, c);
        return;
    } else {
        switch (id.family) {
            case Family::Uq:
                m.col = a.col + b.col;
                out.add(m, c * q_factor<S>(id, -a.col * b.xdeg()));
                return;
            case Family::C:
            case Family::Cn:
                m.col = a.col + b.col;
                out.add(m, c);
                return;
            case Family::U:
            case Family::Un: {
                // H^e X^c = X^c (H + c)^e
                const int e = a.col;
                const Rational shift(b.xdeg());
                for (int j = 0; j <= e; ++j) {
                    m.col = j + b.col;
                    out.add(m, c * from_rational<S>(binomial(e, j) * shift.pow(e - j)));
                }
                return;
            }
        }
    }
}

}  // namespace detail

template <class S, class Tag>
Combination<S, Tag> operator*(const Combination<S, Tag>& a, const Combination<S, Tag>& b) {
    if (!(a.algebra() == b.algebra()))
        throw AlgebraMismatch("product of elements of " + a.algebra().name() + " and " + b.algebra().name());
    Combination<S, Tag> out(a.algebra());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) detail::accumulate_product(a.algebra(), ma, mb, ca * cb, out);
    return out;
}

template <class S>
Element<S> multiply(const Element<S>& a, const Element<S>& b) {
    return a * b;
}

template <class S, class Tag>
Combination<S, Tag> power(const Combination<S, Tag>& a, int e) {
    if (e < 0) throw DomainError("negative power of an algebra element");
    auto r = Combination<S, Tag>::constant(a.algebra(), S(1));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

/// X-type generator with 0-based index i.
template <class S>
Element<S> gen_x(const AlgebraId& id, int i = 0) {
    if (i < 0 || i >= id.x_count()) throw IndexOutOfRange("generator index out of range");
    Monomial m;
    m.x[static_cast<std::size_t>(i)] = 1;
    return Element<S>::term(id, m);
}

/// Power of the column generator g, H or x0. Negative powers only for g.
template <class S>
Element<S> gen_col(const AlgebraId& id, int k = 1) {
    if (k < 0 && !id.laurent_column()) throw DomainError("negative power of " + id.col_name());
    return Element<S>::xg(id, 0, k);
}

// ---------------------------------------------------------------------------
// Tensors

template <class S, std::size_t N>
class Tensor {
   public:
    using Key = std::array<Monomial, N>;
    using Terms = std::map<Key, S>;

    Tensor() = default;
    explicit Tensor(AlgebraId id) : id_(id) {}

    const AlgebraId& algebra() const { return id_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Key& k, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Tensor& operator*=(const S& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.id_ == b.id_ && a.terms_ == b.terms_; }

   private:
    AlgebraId id_;
    Terms terms_;
};

template <class S>
Tensor<S, 2> tensor(const Element<S>& a, const Element<S>& b) {
    Tensor<S, 2> t(a.algebra());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add({ma, mb}, ca * cb);
    return t;
}

/// Componentwise product in the tensor power (no braiding).
template <class S, std::size_t N>
Tensor<S, N> operator*(const Tensor<S, N>& a, const Tensor<S, N>& b) {
    const AlgebraId& id = a.algebra();
    Tensor<S, N> out(id);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<std::pair<typename Tensor<S, N>::Key, S>> partial{{{}, ca * cb}};
            for (std::size_t leg = 0; leg < N; ++leg) {
                Element<S> prod(id);
                detail::accumulate_product(id, ka[leg], kb[leg], S(1), prod);
                std::vector<std::pair<typename Tensor<S, N>::Key, S>> next;
                for (const auto& [key, c] : partial)
                    for (const auto& [m, cm] : prod.terms()) {
                        auto k2 = key;
                        k2[leg] = m;
                        next.emplace_back(k2, c * cm);
                    }
                partial = std::move(next);
            }
            for (const auto& [key, c] : partial) out.add(key, c);
        }
    }
    return out;
}

/// Extracts the element sitting in one leg for a fixed monomial in the other.
template <class S>
Element<S> right_leg(const Tensor<S, 2>& t, const Monomial& left) {
    Element<S> r(t.algebra());
    for (const auto& [k, c] : t.terms())
        if (k[0] == left) r.add(k[1], c);
    return r;
}

/// Groups a two-leg tensor by its left-leg monomials.
template <class S>
std::map<Monomial, Element<S>> right_legs(const Tensor<S, 2>& t) {
    std::map<Monomial, Element<S>> out;
    for (const auto& [k, c] : t.terms()) {
        auto it = out.try_emplace(k[0], Element<S>(t.algebra())).first;
        it->second.add(k[1], c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hopf structure

namespace detail {

/// Enumerates every componentwise sub-vector r <= x of the X-type exponents.
template <class F>
void for_each_subvector(const AlgebraId& id, const Monomial& m, F&& f) {
    const int k = id.x_count();
    std::array<std::int16_t, kMaxXLetters> r{};
    while (true) {
        f(r);
        int i = 0;
        for (; i < k; ++i) {
            if (r[static_cast<std::size_t>(i)] < m.x[static_cast<std::size_t>(i)]) {
                ++r[static_cast<std::size_t>(i)];
                break;
            }
            r[static_cast<std::size_t>(i)] = 0;
        }
        if (i == k) return;
    }
}

template <class S>
void accumulate_coproduct(const AlgebraId& id, const Monomial& m, const S& c, Tensor<S, 2>& out) {
    switch (id.family) {
        case Family::Uq:
        case Family::C: {
            // Delta(X^n g^k) = sum_r [n r] q^{-r(n-r)} X^{n-r} g^{k+r} (x) X^r g^k
            const int n = m.x[0];
            for (int r = 0; r <= n; ++r) {
                S coef = family_binomial<S>(id, n, r) * q_factor<S>(id, -r * (n - r));
                out.add({Monomial::xg(n - r, m.col + r), Monomial::xg(r, m.col)}, c * coef);
            }
            return;
        }
        case Family::U:
        case Family::Un:
            // primitive generators
            for_each_subvector(id, m, [&](const std::array<std::int16_t, kMaxXLetters>& r) {
                Rational xb(1);
                Monomial left, right;
                for (int i = 0; i < id.x_count(); ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    xb *= binomial(m.x[ui], r[ui]);
                    left.x[ui] = r[ui];
                    right.x[ui] = static_cast<std::int16_t>(m.x[ui] - r[ui]);
                }
                for (int j = 0; j <= m.col; ++j) {
                    left.col = j;
                    right.col = m.col - j;
                    out.add({left, right}, c * from_rational<S>(xb * binomial(m.col, j)));
                }
            });
            return;
        case Family::Cn:
            // Delta p_i = p_i (x) 1 + g (x) p_i, Delta g = g (x) g
            for_each_subvector(id, m, [&](const std::array<std::int16_t, kMaxXLetters>& r) {
                Rational xb(1);
                Monomial left, right;
                int moved = 0;
                for (int i = 0; i < id.x_count(); ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    xb *= binomial(m.x[ui], r[ui]);
                    left.x[ui] = static_cast<std::int16_t>(m.x[ui] - r[ui]);
                    right.x[ui] = r[ui];
                    moved += r[ui];
                }
                left.col = m.col + moved;
                right.col = m.col;
                out.add({left, right}, c * from_rational<S>(xb));
            });
            return;
    }
}

}  // namespace detail

template <class S>
Tensor<S, 2> coproduct(const Element<S>& a) {
    Tensor<S, 2> out(a.algebra());
    for (const auto& [m, c] : a.terms()) detail::accumulate_coproduct(a.algebra(), m, c, out);
    return out;
}

/// Coproduct of a single basis monomial.
template <class S>
Tensor<S, 2> coproduct(const AlgebraId& id, const Monomial& m) {
    Tensor<S, 2> out(id);
    detail::accumulate_coproduct(id, m, S(1), out);
    return out;
}

template <class S>
S counit_monomial(const AlgebraId& id, const Monomial& m) {
    if (m.xdeg() != 0) return S(0);
    if (!id.laurent_column() && m.col != 0) return S(0);
    return S(1);
}

template <class S>
S counit(const Element<S>& a) {
    S r(0);
    for (const auto& [m, c] : a.terms()) r += c * counit_monomial<S>(a.algebra(), m);
    return r;
}

/// x - eps(x) 1.
template <class S>
Element<S> project_ker_counit(const Element<S>& a) {
    return a - Element<S>::constant(a.algebra(), counit(a));
}

template <class S>
Element<S> antipode_monomial(const AlgebraId& id, const Monomial& m) {
    switch (id.family) {
        case Family::Uq:
        case Family::C: {
            // S(X^n g^k) = g^{-k} (-g^{-1} X)^n
            auto sx = Element<S>::xg(id, 1, -1, S(-1));
            if (id.family == Family::Uq) sx = gen_col<S>(id, -1) * gen_x<S>(id) * S(-1);
            return gen_col<S>(id, -m.col) * power(sx, m.x[0]);
        }
        case Family::Cn: {
            Monomial r = m;
            r.col = -m.col - m.xdeg();
            return Element<S>::term(id, r, (m.xdeg() % 2) ? S(-1) : S(1));
        }
        case Family::U:
        case Family::Un: {
            // S(x^m H^k) = S(H)^k S(x^m) = (-1)^{k+|m|} H^k x^m
            Monomial xs = m;
            xs.col = 0;
            S sign = ((m.col + m.xdeg()) % 2) ? S(-1) : S(1);
            return gen_col<S>(id, m.col) * Element<S>::term(id, xs, sign);
        }
    }
    return Element<S>(id);
}

template <class S>
Element<S> antipode(const Element<S>& a) {
    Element<S> out(a.algebra());
    for (const auto& [m, c] : a.terms()) out += antipode_monomial<S>(a.algebra(), m) * c;
    return out;
}

/// (Delta (x) id) applied to a two-leg tensor.
template <class S>
Tensor<S, 3> coproduct_on_left(const Tensor<S, 2>& t) {
    Tensor<S, 3> out(t.algebra());
    for (const auto& [k, c] : t.terms()) {
        auto d = coproduct<S>(t.algebra(), k[0]);
        for (const auto& [kd, cd] : d.terms()) out.add({kd[0], kd[1], k[1]}, c * cd);
    }
    return out;
}

/// (id (x) Delta) applied to a two-leg tensor.
template <class S>
Tensor<S, 3> coproduct_on_right(const Tensor<S, 2>& t) {
    Tensor<S, 3> out(t.algebra());
    for (const auto& [k, c] : t.terms()) {
        auto d = coproduct<S>(t.algebra(), k[1]);
        for (const auto& [kd, cd] : d.terms()) out.add({k[0], kd[0], kd[1]}, c * cd);
    }
    return out;
}

/// Applies a linear map, given on monomials, to one leg of a tensor.
template <class S, std::size_t N, class F>
Tensor<S, N> map_leg(const Tensor<S, N>& t, std::size_t leg, F&& f) {
    Tensor<S, N> out(t.algebra());
    for (const auto& [k, c] : t.terms()) {
        Element<S> img = f(k[leg]);
        for (const auto& [m, cm] : img.terms()) {
            auto k2 = k;
            k2[leg] = m;
            out.add(k2, c * cm);
        }
    }
    return out;
}

/// Multiplies the two legs of a tensor: a (x) b -> a b.
template <class S>
Element<S> multiply_legs(const Tensor<S, 2>& t) {
    Element<S> out(t.algebra());
    for (const auto& [k, c] : t.terms()) detail::accumulate_product(t.algebra(), k[0], k[1], c, out);
    return out;
}

// ---------------------------------------------------------------------------
// Normal ordering

enum class Ordering {
    /// X-type letters first, column letter last: X^m g^n, X^m H^n, x^m x0^k.
    Storage,
    /// Column letter first: g^n X^m, H^n X^m.
    ColumnFirst
};

template <class S>
Element<S> normal_order(const CommPoly<S>& f, Ordering order) {
    const AlgebraId& id = f.algebra();
    Element<S> out(id);
    for (const auto& [m, c] : f.terms()) {
        if (order == Ordering::Storage || id.commutative()) {
            out.add(m, c);
        } else {
            Monomial xs = m;
            xs.col = 0;
            out += (Element<S>::xg(id, 0, m.col) * Element<S>::term(id, xs)) * c;
        }
    }
    return out;
}

/// Inverse of normal_order.
template <class S>
CommPoly<S> symbol(const Element<S>& a, Ordering order) {
    const AlgebraId& id = a.algebra();
    CommPoly<S> out(id);
    for (const auto& [m, c] : a.terms()) {
        if (order == Ordering::Storage || id.commutative()) {
            out.add(m, c);
            continue;
        }
        if (id.family == Family::Uq) {
            // X^b g^a = q^{ab} g^a X^b
            out.add(m, c * detail::q_factor<S>(id, m.col * m.xdeg()));
            continue;
        }
        // X^b H^a = (H - b)^a X^b
        const Rational shift(-m.xdeg());
        Monomial t = m;
        for (int j = 0; j <= m.col; ++j) {
            t.col = j;
            out.add(t, c * detail::from_rational<S>(binomial(m.col, j) * shift.pow(m.col - j)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

template <class S>
std::string render_term(const AlgebraId& id, const Monomial& m, const S& c) {
    const std::string cs = ScalarTraits<S>::to_string(c);
    const bool atomic = ScalarTraits<S>::is_atomic(c);
    const std::string coef = atomic ? cs : "(" + cs + ")";
    if (m.is_unit()) return coef;
    const std::string ms = render_monomial(id, m);
    if (c == S(1)) return ms;
    if (c == S(-1)) return "-" + ms;
    return coef + " * " + ms;
}

template <class S, class Tag>
std::string render(const Combination<S, Tag>& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        std::string t = render_term(a.algebra(), m, c);
        if (out.empty()) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

template <class S, std::size_t N>
std::string render(const Tensor<S, N>& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        std::string legs;
        for (std::size_t i = 0; i < N; ++i) {
            if (i) legs += " (x) ";
            legs += render_monomial(t.algebra(), k[i]);
        }
        std::string cs = ScalarTraits<S>::to_string(c);
        std::string term;
        if (c == S(1)) term = legs;
        else if (c == S(-1)) term = "-" + legs;
        else term = (ScalarTraits<S>::is_atomic(c) ? cs : "(" + cs + ")") + " * " + legs;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

/// Embeds a Rational element into rational-function coefficients.
template <class Tag>
Combination<RatFunc, Tag> lift(const Combination<Rational, Tag>& a) {
    Combination<RatFunc, Tag> out(a.algebra());
    for (const auto& [m, c] : a.terms()) out.add(m, RatFunc(c));
    return out;
}

/// Sets q = 1 in every coefficient, moving a q-family element to C or U.
template <class Tag>
Combination<Rational, Tag> at_q1(const Combination<RatFunc, Tag>& a, AlgebraId target) {
    Combination<Rational, Tag> out(target);
    for (const auto& [m, c] : a.terms()) out.add(m, eval_q1(c));
    return out;
}

}  // namespace qborel

#endif  // QBOREL_ALGEBRA_HPP
