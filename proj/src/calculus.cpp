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

#include "qborel/calculus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace qborel {

namespace {

template <class S>
Element<S> one(const AlgebraId& id) {
    return Element<S>::constant(id, S(1));
}

template <class S>
std::string show_element(const Element<S>& e) {
    return render(e);
}

template <class S>
std::string show_poly(const CommPoly<S>& e) {
    return render(e);
}

std::string set_name(const std::set<int>& set) {
    std::string out = "{";
    for (int n : set) out += (out.size() > 1 ? "," : "") + std::to_string(n);
    return out + "}";
}

RatFunc q_minus_one_power(int k) {
    return RatFunc::q_pow(k) - RatFunc(1);
}

}  // namespace

Element<Rational> truncated_log_g(const AlgebraId& id, int order) {
    if (!id.laurent_column()) throw AlgebraMismatch("log g lives in an algebra with a group-like letter g");
    Element<Rational> gm1 = gen_col<Rational>(id, 1) - one<Rational>(id);
    Element<Rational> out(id);
    Element<Rational> p = gm1;
    for (int k = 1; k <= order; ++k) {
        out += p * Rational(k % 2 ? 1 : -1, k);
        p = p * gm1;
    }
    return out;
}

Calculus<RatFunc> build_q(int n, const CalculusOptions& opt) {
    if (n < 2) throw InvalidDescriptor("q(n) needs n >= 2");
    const AlgebraId id = AlgebraId::uq();
    Calculus<RatFunc> c;
    c.kind = CalculusKind::QN;
    c.n = n;
    c.set = {n};
    c.name = "q(" + std::to_string(n) + ")";
    c.base = id;
    c.tangent_side = id;
    c.ordering = Ordering::ColumnFirst;
    c.eta_reps.push_back((gen_col<RatFunc>(id, 1) - one<RatFunc>(id)) * (RatFunc(1) / q_minus_one_power(n - 1)));
    for (int k = 1; k < n; ++k) c.eta_reps.push_back(Element<RatFunc>::xg(id, k, 0));
    c.listed_tangent = canonical_tangent_space_q({n});
    ClassificationPair<RatFunc> pair(one<RatFunc>(id), {1, n});
    finish_calculus(c, canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, Truncation::for_sum(id, n + 1),
                    opt);
    return c;
}

Calculus<RatFunc> build_q_set(const std::set<int>& set, const CalculusOptions& opt) {
    if (set.empty()) throw InvalidDescriptor("q_set needs a non-empty set");
    for (int n : set)
        if (n < 2) throw InvalidDescriptor("q_set needs integers n >= 2");
    const AlgebraId id = AlgebraId::uq();
    std::set<int> full = set;
    full.insert(1);
    const int sum = std::accumulate(full.begin(), full.end(), 0);
    const Truncation t = Truncation::for_sum(id, sum);
    ClassificationPair<RatFunc> pair(one<RatFunc>(id), full);
    auto gens = canonical_crossed_submodule(pair);
    GradedSubspace<RatFunc> m = closure(gens, OperatorFamily::CrossedModule, id, t);
    Calculus<RatFunc> c;
    c.kind = CalculusKind::QSet;
    c.n = *set.rbegin();
    c.set = set;
    c.name = "q_set(" + set_name(set) + ")";
    c.base = id;
    c.tangent_side = id;
    c.ordering = Ordering::ColumnFirst;
    c.eta_reps = Reducer<RatFunc>(m, {}).standard_basis();
    c.listed_tangent = canonical_tangent_space_q(set);
    finish_calculus(c, gens, OperatorFamily::CrossedModule, t, opt);
    return c;
}

Calculus<Rational> build_classical_cbp(int n, const CalculusOptions& opt) {
    if (n < 2) throw InvalidDescriptor("classical_CBp({1,n}) needs n >= 2");
    const AlgebraId id = AlgebraId::c();
    const AlgebraId u = AlgebraId::u();
    Calculus<Rational> c;
    c.kind = CalculusKind::ClassicalCBp;
    c.n = n;
    c.set = {1, n};
    c.name = "classical_CBp({1," + std::to_string(n) + "})";
    c.base = id;
    c.tangent_side = u;
    c.ordering = Ordering::ColumnFirst;
    c.eta_reps.push_back(gen_col<Rational>(id, 1) - one<Rational>(id));
    c.listed_tangent.push_back(gen_col<Rational>(u, 1));
    for (int k = 1; k < n; ++k) {
        c.eta_reps.push_back(Element<Rational>::xg(id, k, 0));
        c.listed_tangent.push_back(Element<Rational>::xg(u, k, 0, Rational(1) / factorial(k)));
    }
    ClassificationPair<Rational> pair(one<Rational>(id), {1, n});
    finish_calculus(c, canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, Truncation::for_sum(id, n + 1),
                    opt);
    return c;
}

Calculus<Rational> build_dual_classical(int n, const CalculusOptions& opt) {
    if (n < 2) throw InvalidDescriptor("dual_classical(n) needs n >= 2");
    const AlgebraId id = AlgebraId::u();
    const AlgebraId cc = AlgebraId::c();
    Calculus<Rational> c;
    c.kind = CalculusKind::DualClassical;
    c.n = n;
    c.set = {1, n};
    c.name = "dual_classical(" + std::to_string(n) + ")";
    c.base = id;
    c.tangent_side = cc;
    c.ordering = Ordering::ColumnFirst;
    c.eta_reps.push_back(gen_col<Rational>(id, 1) * Rational(1, 1 - n));
    c.listed_tangent.push_back(Element<Rational>::xg(cc, 0, 1 - n) - one<Rational>(cc));
    for (int k = 1; k < n; ++k) {
        c.eta_reps.push_back(Element<Rational>::xg(id, k, 0));
        c.listed_tangent.push_back(Element<Rational>::xg(cc, k, 1 - n, Rational(1) / factorial(k)));
    }
    finish_calculus(c, classical_limit_ideal({1, n}), OperatorFamily::LeftIdeal, Truncation::for_sum(id, n + 1), opt);
    return c;
}

Calculus<Rational> build_nat_bp(const CalculusOptions& opt) {
    const AlgebraId id = AlgebraId::u();
    const AlgebraId cc = AlgebraId::c();
    Calculus<Rational> c;
    c.kind = CalculusKind::NatBp;
    c.n = 2;
    c.name = "nat_bp";
    c.base = id;
    c.tangent_side = cc;
    c.ordering = Ordering::Storage;
    c.eta_reps = {gen_col<Rational>(id, 1), gen_x<Rational>(id)};
    c.listed_tangent = {truncated_log_g(cc, opt.log_order), gen_x<Rational>(cc)};
    const std::vector<Element<Rational>> gens = {Element<Rational>::xg(id, 0, 2), Element<Rational>::xg(id, 1, 1),
                                                 Element<Rational>::xg(id, 2, 0)};
    finish_calculus(c, gens, OperatorFamily::LeftIdeal, Truncation{3, 0, 4}, opt);
    return c;
}

Calculus<Rational> build_kappa_calculus(int n, const CalculusOptions& opt) {
    if (n < 2 || n > kMaxXLetters + 1) throw InvalidDescriptor("kappa(n) needs 2 <= n <= 10");
    const AlgebraId id = AlgebraId::un(n);
    const AlgebraId cn = AlgebraId::cn(n);
    Calculus<Rational> c;
    c.kind = CalculusKind::Kappa;
    c.n = n;
    c.name = "kappa(" + std::to_string(n) + ")";
    c.base = id;
    c.tangent_side = cn;
    c.ordering = Ordering::Storage;
    c.eta_reps.push_back(gen_col<Rational>(id, 1));
    c.listed_tangent.push_back(truncated_log_g(cn, opt.log_order));
    for (int i = 0; i < n - 1; ++i) {
        c.eta_reps.push_back(gen_x<Rational>(id, i));
        c.listed_tangent.push_back(gen_x<Rational>(cn, i));
    }
    std::vector<Element<Rational>> gens = {Element<Rational>::xg(id, 0, 2)};
    for (int i = 0; i < n - 1; ++i) {
        gens.push_back(gen_x<Rational>(id, i) * gen_col<Rational>(id, 1));
        for (int j = i; j < n - 1; ++j) gens.push_back(gen_x<Rational>(id, i) * gen_x<Rational>(id, j));
    }
    finish_calculus(c, gens, OperatorFamily::LeftIdeal, Truncation{3, 0, 4}, opt);
    return c;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

template <class S>
class Checker {
   public:
    Checker(const Calculus<S>& c, int D, const Tweak& tweak, std::string suite)
        : c_(c), D_(D), tweak_(tweak) {
        report_.suite = std::move(suite);
        report_.anchor = c.name;
    }

    Report take() { return std::move(report_); }

    S factor(const std::string& id) const { return tweak_.relation == id ? S(2) : S(1); }
    RelationResult& add(const std::string& id, const std::string& anchor) {
        report_.relations.push_back({id, anchor, 0, {}, {}});
        return report_.relations.back();
    }

    Element<S> el(const Monomial& m) const { return Element<S>::term(c_.base, m); }
    Element<S> xg(int a, int b) const { return Element<S>::xg(c_.base, a, b); }
    GammaElement<S> eta(int i) const { return qborel::eta(c_, i); }
    std::string name(const Monomial& m) const { return render_monomial(c_.base, m); }
    std::vector<Monomial> monomials(int deg) const { return monomials_up_to(c_.base, deg); }

    void expect(RelationResult& r, const std::string& input, const GammaElement<S>& expected,
                const GammaElement<S>& got) const {
        r.expect(input, expected, got, &render_gamma<S>);
    }

    /// [a, w]_lambda = rhs for each a in the list.
    void commutator_relation(const std::string& id, const std::string& anchor, const std::vector<Monomial>& as,
                             const std::function<GammaElement<S>(const Monomial&)>& w,
                             const std::function<S(const Monomial&)>& lambda,
                             const std::function<GammaElement<S>(const Monomial&)>& rhs) {
        RelationResult& r = add(id, anchor);
        const S f = factor(id);
        for (const Monomial& a : as) {
            const GammaElement<S> got = commutator(c_, el(a), w(a), lambda(a) * f);
            expect(r, name(a), rhs(a), got);
        }
    }

    void common_relations(bool closed_forms) {
        // d against <phi_i, a_(1)> a_(2).
        {
            RelationResult& r = add("d-oracle", "da = sum_i eta_i (x) <phi_i, a_(1)> a_(2)");
            const S f = factor("d-oracle");
            for (const Monomial& m : monomials(D_)) {
                GammaElement<S> expected = zero_form(c_);
                for (int i = 0; i < c_.dim(); ++i)
                    expected[i] = derivation_oracle(c_.tangent_basis[static_cast<std::size_t>(i)], el(m));
                expected[0] *= f;
                expect(r, name(m), expected, d(c_, el(m)));
            }
        }
        if (closed_forms) {
            {
                RelationResult& r = add("d-expansion", "d:f: = sum_i eta_i :partial_i f:");
                const S f = factor("d-expansion");
                for (const Monomial& m : monomials(D_)) {
                    GammaElement<S> expected = d_from_closed_forms(c_, el(m));
                    expected[0] *= f;
                    expect(r, name(m), expected, d(c_, el(m)));
                }
            }
            {
                RelationResult& r = add("closed-form-vs-oracle", ":partial_i f: = <phi_i, f_(1)> f_(2)");
                const S f = factor("closed-form-vs-oracle");
                for (const Monomial& m : monomials(D_ + 1)) {
                    const CommPoly<S> sym = symbol(el(m), c_.ordering);
                    for (int i = 0; i < c_.dim(); ++i) {
                        Element<S> closed = derivation_closed_form(c_, i, sym);
                        if (i == 0) closed *= f;
                        r.expect(name(m) + ", i=" + std::to_string(i), closed,
                                 derivation_oracle(c_.tangent_basis[static_cast<std::size_t>(i)], el(m)),
                                 &show_element<S>);
                    }
                }
            }
        }
        {
            RelationResult& r = add("leibniz", "d(ab) = (da) b + a (db)");
            const S f = factor("leibniz");
            const auto ms = monomials(std::max(D_, 3));
            for (const Monomial& a : ms)
                for (const Monomial& b : ms) {
                    const int da = a.xdeg() + std::abs(a.col), db = b.xdeg() + std::abs(b.col);
                    if (!(da <= 3 && db <= 3) && da + db > D_) continue;
                    const GammaElement<S> expected = d(c_, el(a)) * el(b) + left_act(c_, el(a), d(c_, el(b))) * f;
                    expect(r, name(a) + " , " + name(b), expected, d(c_, el(a) * el(b)));
                }
        }
        {
            RelationResult& r = add("braided-leibniz", "d_x(ab) = (d_x a) b + a_(2) d_{a_(1) > x} b");
            const S f = factor("braided-leibniz");
            const auto ms = monomials(2);
            for (int i = 0; i < c_.dim(); ++i) {
                const Element<S>& x = c_.tangent_basis[static_cast<std::size_t>(i)];
                for (const Monomial& a : ms)
                    for (const Monomial& b : ms) {
                        Element<S> rhs = derivation_oracle(x, el(a)) * el(b);
                        for (const auto& [k, coef] : coproduct(el(a)).terms()) {
                            const Element<S> ax = project_ker_counit(tangent_action(el(k[0]), x));
                            if (!ax.is_zero()) rhs += el(k[1]) * derivation_oracle(ax, el(b)) * (coef * f);
                        }
                        r.expect("phi_" + std::to_string(i) + ", " + name(a) + " , " + name(b), rhs,
                                 derivation_oracle(x, el(a) * el(b)), &show_element<S>);
                    }
            }
        }
        {
            RelationResult& r = add("duality", "<phi_i, eta_j> = delta_ij and phi_i annihilates M");
            const int dim = c_.dim();
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    S v = evaluate(c_.tangent_basis[static_cast<std::size_t>(i)], c_.eta_reps[static_cast<std::size_t>(j)]);
                    if (tweak_.relation == "duality" && i == j) v *= S(2);
                    r.expect_true("<phi_" + std::to_string(i) + ", eta_" + std::to_string(j) + ">", v == S(i == j ? 1 : 0),
                                  ScalarTraits<S>::to_string(v));
                }
            for (const auto& m : c_.M->basis())
                for (int i = 0; i < dim; ++i) {
                    const S v = evaluate(c_.tangent_basis[static_cast<std::size_t>(i)], m);
                    r.expect_true("<phi_" + std::to_string(i) + ", " + render(m) + ">", v.is_zero(),
                                  ScalarTraits<S>::to_string(v));
                }
            if (!c_.listed_is_dual) {
                std::string g;
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        if (!(c_.gram(i, j) == S(i == j ? 1 : 0)))
                            g += " <listed_" + std::to_string(i) + ", eta_" + std::to_string(j) +
                                 "> = " + ScalarTraits<S>::to_string(c_.gram(i, j)) + ";";
                r.notes.push_back("listed tangent vectors are not dual to the eta basis; using the dual basis." + g);
            }
        }
    }

    const Calculus<S>& c_;
    int D_;
    Tweak tweak_;
    Report report_;
};

template <class S>
std::vector<Monomial> all_letters(const AlgebraId& id) {
    std::vector<Monomial> out;
    for (int i = 0; i < id.x_count(); ++i) {
        Monomial m;
        m.x[static_cast<std::size_t>(i)] = 1;
        out.push_back(m);
    }
    out.push_back(Monomial::xg(0, 1));
    if (id.laurent_column()) out.push_back(Monomial::xg(0, -1));
    return out;
}

void q_relations(Checker<RatFunc>& ch) {
    const auto& c = ch.c_;
    const int n = c.n;
    const RatFunc lam = q_minus_one_power(n - 1);
    const Monomial X = Monomial::xg(1, 0), g = Monomial::xg(0, 1);
    {
        RelationResult& r = ch.add("d-generators", "dX = eta1 + (q^{n-1}-1) eta0 X, dg = (q^{n-1}-1) eta0 g");
        const RatFunc f = ch.factor("d-generators");
        ch.expect(r, "X", ch.eta(1) + ch.eta(0) * ch.xg(1, 0) * (lam * f), d(c, ch.xg(1, 0)));
        ch.expect(r, "g", ch.eta(0) * ch.xg(0, 1) * (lam * f), d(c, ch.xg(0, 1)));
    }
    ch.commutator_relation(
        "eta0-commutator", "[a, eta0] = da", ch.monomials(ch.D_), [&](const Monomial&) { return ch.eta(0); },
        [](const Monomial&) { return RatFunc(1); }, [&](const Monomial& a) { return d(c, ch.el(a)); });
    std::vector<Monomial> idx;
    for (int i = 0; i < n; ++i) idx.push_back(Monomial::xg(0, i));
    for (int i = 0; i < n; ++i) {
        const RatFunc l = RatFunc::q_pow(n - 1 - i);
        RelationResult& r = ch.add("g-eta", "[g, eta_i]_{q^{n-1-i}} = 0");
        r.expect("i=" + std::to_string(i), zero_form(c), commutator(c, ch.el(g), ch.eta(i), l * ch.factor("g-eta")),
                 &render_gamma<RatFunc>);
        RelationResult& s = ch.add("x-eta", "[X, eta_i]_{q^{n-1-i}} = eta_{i+1} (0 for i = n-1)");
        s.expect("i=" + std::to_string(i), i + 1 < n ? ch.eta(i + 1) : zero_form(c),
                 commutator(c, ch.el(X), ch.eta(i), l * ch.factor("x-eta")), &render_gamma<RatFunc>);
    }
}

void classical_relations(Checker<Rational>& ch) {
    const auto& c = ch.c_;
    const int n = c.n;
    const Monomial X = Monomial::xg(1, 0), g = Monomial::xg(0, 1);
    {
        RelationResult& r = ch.add("d-generators", "dX = eta1 + eta0 X, dg = eta0 g");
        const Rational f = ch.factor("d-generators");
        ch.expect(r, "X", ch.eta(1) + ch.eta(0) * ch.xg(1, 0) * f, d(c, ch.xg(1, 0)));
        ch.expect(r, "g", ch.eta(0) * ch.xg(0, 1) * f, d(c, ch.xg(0, 1)));
    }
    for (int i = 0; i < n; ++i) {
        RelationResult& r = ch.add("g-eta", "[g, eta_i] = 0");
        r.expect("i=" + std::to_string(i), zero_form(c), commutator(c, ch.el(g), ch.eta(i), ch.factor("g-eta")),
                 &render_gamma<Rational>);
        RelationResult& s = ch.add("x-eta", "[X, eta_i] = eta_{i+1} for 0 < i < n-1, 0 otherwise");
        s.expect("i=" + std::to_string(i), (i > 0 && i + 1 < n) ? ch.eta(i + 1) : zero_form(c),
                 commutator(c, ch.el(X), ch.eta(i), ch.factor("x-eta")), &render_gamma<Rational>);
    }
}

void dual_classical_relations(Checker<Rational>& ch) {
    const auto& c = ch.c_;
    const int n = c.n;
    const Monomial X = Monomial::xg(1, 0), H = Monomial::xg(0, 1);
    {
        RelationResult& r = ch.add("d-generators", "dX = eta1, dH = (1-n) eta0");
        const Rational f = ch.factor("d-generators");
        ch.expect(r, "X", ch.eta(1) * f, d(c, ch.xg(1, 0)));
        ch.expect(r, "H", ch.eta(0) * Rational(1 - n) * f, d(c, ch.xg(0, 1)));
    }
    for (int i = 0; i < n; ++i) {
        RelationResult& r = ch.add("h-eta", "[H, eta_i] = (1-n+i) eta_i");
        r.expect("i=" + std::to_string(i), ch.eta(i) * (Rational(1 - n + i) * ch.factor("h-eta")),
                 commutator(c, ch.el(H), ch.eta(i)), &render_gamma<Rational>);
        RelationResult& s = ch.add("x-eta", "[X, eta_i] = eta_{i+1} (0 for i = n-1)");
        s.expect("i=" + std::to_string(i), i + 1 < n ? ch.eta(i + 1) : zero_form(c),
                 commutator(c, ch.el(X), ch.eta(i), ch.factor("x-eta")), &render_gamma<Rational>);
    }
    if (n != 2) return;
    const GammaElement<Rational> dH = d(c, ch.el(H)), dX = d(c, ch.el(X));
    {
        RelationResult& r = ch.add("dh-commutator", "[dH, a] = da");
        const Rational f = ch.factor("dh-commutator");
        for (const Monomial& a : ch.monomials(ch.D_))
            ch.expect(r, ch.name(a), d(c, ch.el(a)) * f, dH * ch.el(a) - left_act(c, ch.el(a), dH));
    }
    {
        RelationResult& r = ch.add("dx-commutator", "[dX, a] = 0");
        const Rational f = ch.factor("dx-commutator");
        for (const Monomial& a : ch.monomials(ch.D_))
            ch.expect(r, ch.name(a), zero_form(c), dX * ch.el(a) * f - left_act(c, ch.el(a), dX));
    }
    {
        RelationResult& r = ch.add("d-display", "d:f: = :D_{1,H} f: dH + :d_X f: dX, X left of H, coefficients on the left");
        const Rational f = ch.factor("d-display");
        long literal_failures = 0, right_failures = 0;
        for (const Monomial& m : ch.monomials(ch.D_)) {
            const CommPoly<Rational> sym = symbol(ch.el(m), Ordering::Storage);
            const Element<Rational> dh_coef = normal_order(ops::finite_difference_col(sym, 1), Ordering::Storage);
            const Element<Rational> dx_coef = normal_order(ops::x_derivative(sym), Ordering::Storage);
            const GammaElement<Rational> df = d(c, ch.el(m));
            ch.expect(r, ch.name(m), left_act(c, dh_coef, dH) * f + left_act(c, dx_coef, dX), df);
            if (!(dH * dh_coef + dX * dx_coef == df)) ++literal_failures;
            const Element<Rational> back = normal_order(ops::finite_difference_col(sym, -1), Ordering::Storage);
            if (!(dH * back + dX * dx_coef == df)) ++right_failures;
        }
        if (literal_failures > 0)
            r.notes.push_back("with the coefficients to the right of dH the expansion fails on " +
                              std::to_string(literal_failures) + " of " + std::to_string(r.checked) + " monomials");
        if (right_failures == 0)
            r.notes.push_back("dH :D_{-1,H} f: + dX :d_X f: holds on every monomial checked");
    }
}

void nat_bp_relations(Checker<Rational>& ch) {
    const auto& c = ch.c_;
    const Monomial X = Monomial::xg(1, 0), H = Monomial::xg(0, 1);
    const GammaElement<Rational> dH = d(c, ch.el(H)), dX = d(c, ch.el(X));
    ch.commutator_relation(
        "dh-central", "[a, dH] = 0", ch.monomials(ch.D_), [&](const Monomial&) { return dH; },
        [](const Monomial&) { return Rational(1); }, [&](const Monomial&) { return zero_form(c); });
    ch.commutator_relation(
        "x-dx", "[X, dX] = 0", {X}, [&](const Monomial&) { return dX; }, [](const Monomial&) { return Rational(1); },
        [&](const Monomial&) { return zero_form(c); });
    {
        RelationResult& r = ch.add("h-dx", "[H, dX] = dX");
        ch.expect(r, "H", dX * ch.factor("h-dx"), commutator(c, ch.el(H), dX));
    }
}

void kappa_relations(Checker<Rational>& ch) {
    const auto& c = ch.c_;
    const int n = c.n;
    const Monomial x0 = Monomial::xg(0, 1);
    auto xi = [](int i) {
        Monomial m;
        m.x[static_cast<std::size_t>(i)] = 1;
        return m;
    };
    const GammaElement<Rational> dx0 = d(c, ch.el(x0));
    ch.commutator_relation(
        "dx0-central", "[a, dx0] = 0", ch.monomials(ch.D_), [&](const Monomial&) { return dx0; },
        [](const Monomial&) { return Rational(1); }, [&](const Monomial&) { return zero_form(c); });
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) {
            RelationResult& r = ch.add("xi-dxj", "[x_i, dx_j] = 0");
            r.expect("i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1), zero_form(c),
                     commutator(c, ch.el(xi(i)), d(c, ch.el(xi(j))), ch.factor("xi-dxj")), &render_gamma<Rational>);
        }
        RelationResult& r = ch.add("x0-dxi", "[x0, dx_i] = dx_i");
        const GammaElement<Rational> dxi = d(c, ch.el(xi(i)));
        r.expect("i=" + std::to_string(i + 1), dxi * ch.factor("x0-dxi"), commutator(c, ch.el(x0), dxi),
                 &render_gamma<Rational>);
    }
}

/// Merges relation results that share an id, keeping the first anchor.
Report merge_by_id(Report r) {
    Report out;
    out.suite = r.suite;
    out.anchor = r.anchor;
    for (auto& rel : r.relations) {
        auto it = std::find_if(out.relations.begin(), out.relations.end(), [&](const auto& o) { return o.id == rel.id; });
        if (it == out.relations.end()) {
            out.relations.push_back(std::move(rel));
            continue;
        }
        it->checked += rel.checked;
        it->failures.insert(it->failures.end(), rel.failures.begin(), rel.failures.end());
        it->notes.insert(it->notes.end(), rel.notes.begin(), rel.notes.end());
    }
    return out;
}

}  // namespace

Report verify_relations(const Calculus<RatFunc>& c, int D, const Tweak& tweak) {
    Checker<RatFunc> ch(c, D, tweak, c.name);
    if (c.kind == CalculusKind::QN) q_relations(ch);
    ch.common_relations(c.kind == CalculusKind::QN);
    return merge_by_id(ch.take());
}

Report verify_relations(const Calculus<Rational>& c, int D, const Tweak& tweak) {
    Checker<Rational> ch(c, D, tweak, c.name);
    switch (c.kind) {
        case CalculusKind::ClassicalCBp: classical_relations(ch); break;
        case CalculusKind::DualClassical: dual_classical_relations(ch); break;
        case CalculusKind::NatBp: nat_bp_relations(ch); break;
        case CalculusKind::Kappa: kappa_relations(ch); break;
        default: break;
    }
    ch.common_relations(true);
    return merge_by_id(ch.take());
}

Report verify_two_dim_corollary(const Calculus<RatFunc>& c, int D, const Tweak& tweak) {
    if (c.kind != CalculusKind::QN || c.n != 2) throw InvalidDescriptor("the two-dimensional relations concern q(2)");
    Checker<RatFunc> ch(c, D, tweak, c.name + " two-dimensional form");
    const RatFunc q = RatFunc::q();
    const Element<RatFunc> X = ch.xg(1, 0), g = ch.xg(0, 1);
    const GammaElement<RatFunc> dX = d(c, X), dg = d(c, g);
    auto rel = [&](const std::string& id, const std::string& anchor, const Element<RatFunc>& a,
                   const GammaElement<RatFunc>& w, const RatFunc& lambda, const GammaElement<RatFunc>& rhs) {
        RelationResult& r = ch.add(id, anchor);
        ch.expect(r, render(a), rhs, commutator(c, a, w, lambda * ch.factor(id)));
    };
    rel("g-dX", "[g, dX] = 0", g, dX, RatFunc(1), zero_form(c));
    rel("g-dg", "[g, dg]_q = 0", g, dg, q, zero_form(c));
    rel("X-dX", "[X, dX]_q = 0", X, dX, q, zero_form(c));
    rel("X-dg", "[X, dg]_q = (q-1) dX g", X, dg, q, dX * g * (q - RatFunc(1)));
    {
        RelationResult& r = ch.add("d-display", "d:f: = dg :D_{q,g} f: + dX :D_{q,X} f:");
        const RatFunc f = ch.factor("d-display");
        for (const Monomial& m : ch.monomials(D)) {
            const CommPoly<RatFunc> sym = symbol(ch.el(m), c.ordering);
            const GammaElement<RatFunc> expected = dg * normal_order(ops::q_derivative_g(sym), c.ordering) * f +
                                                   dX * normal_order(ops::q_derivative_x(sym), c.ordering);
            ch.expect(r, ch.name(m), expected, d(c, ch.el(m)));
        }
    }
    return ch.take();
}

Report compare_q_limit(int n, int D) {
    if (n < 2) throw InvalidDescriptor("q(n) needs n >= 2");
    Calculus<RatFunc> qc;
    qc.kind = CalculusKind::QN;
    qc.n = n;
    qc.base = AlgebraId::uq();
    qc.eta_reps.resize(static_cast<std::size_t>(n));
    Calculus<Rational> cc;
    cc.kind = CalculusKind::ClassicalCBp;
    cc.n = n;
    cc.base = AlgebraId::c();
    cc.eta_reps.resize(static_cast<std::size_t>(n));
    Report rep;
    rep.suite = "q(" + std::to_string(n) + ") at q = 1";
    rep.anchor = "classical_CBp({1," + std::to_string(n) + "})";
    RelationResult r{"q-limit", "partial_i^q -> partial_i at q = 1, partial_0^q / (q^{n-1} - 1) -> Euler operator", 0, {}, {}};
    const RatFunc scale = RatFunc(1) / q_minus_one_power(n - 1);
    for (const Monomial& m : monomials_up_to(qc.base, D)) {
        const CommPoly<RatFunc> fq = CommPoly<RatFunc>::term(qc.base, m);
        const CommPoly<Rational> fc = CommPoly<Rational>::term(cc.base, m);
        for (int i = 0; i < n; ++i) {
            CommPoly<RatFunc> dq = derivation_symbol(qc, i, fq);
            if (i == 0) dq *= scale;
            CommPoly<Rational> limit(cc.base);
            for (const auto& [mm, coef] : dq.terms()) limit.add(mm, eval_q1(coef));
            r.expect(render_monomial(qc.base, m) + ", i=" + std::to_string(i), derivation_symbol(cc, i, fc), limit,
                     &show_poly<Rational>);
        }
    }
    rep.relations.push_back(std::move(r));
    return rep;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

template <class S, class Build>
Decomposition<S> decompose_with(const AlgebraId& id, const std::set<int>& set, Build build) {
    if (set.empty()) throw InvalidDescriptor("decomposition needs a non-empty set");
    for (int n : set)
        if (n < 2) throw InvalidDescriptor("decomposition needs integers n >= 2");
    std::set<int> full = set;
    full.insert(1);
    const int sum = std::accumulate(full.begin(), full.end(), 0);
    ClassificationPair<S> pair(Element<S>::constant(id, S(1)), full);
    const GradedSubspace<S> m = closure(canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, id,
                                        Truncation::for_sum(id, sum));
    const std::vector<Element<S>> basis = Reducer<S>(m, {}).standard_basis();
    Decomposition<S> out;
    out.total_dim = static_cast<int>(basis.size());
    for (int n : set) out.summands.push_back(build(n));
    for (const auto& s : out.summands) out.summand_dim_sum += s.dim();
    out.map = Matrix<S>(out.summand_dim_sum, out.total_dim);
    out.well_defined = true;
    int row = 0;
    for (const auto& s : out.summands) {
        for (int j = 0; j < out.total_dim; ++j) {
            const Vector<S> v = s.reducer.coords(basis[static_cast<std::size_t>(j)]);
            for (int i = 0; i < s.dim(); ++i) out.map(row + i, j) = v[i];
        }
        for (const auto& b : m.basis()) {
            const Vector<S> v = s.reducer.coords(b);
            for (int i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) out.well_defined = false;
        }
        row += s.dim();
    }
    RowEchelon<S> r(out.total_dim);
    for (int i = 0; i < out.summand_dim_sum; ++i) r.insert(out.map.row(i).transpose());
    out.is_direct_sum = out.well_defined && out.summand_dim_sum == out.total_dim && r.rank() == out.total_dim;
    return out;
}

}  // namespace

Decomposition<RatFunc> decompose(const std::set<int>& set) {
    return decompose_with<RatFunc>(AlgebraId::uq(), set, [](int n) { return build_q(n); });
}

Decomposition<Rational> decompose_classical(const std::set<int>& set) {
    return decompose_with<Rational>(AlgebraId::c(), set, [](int n) { return build_classical_cbp(n); });
}

// ---------------------------------------------------------------------------
// Uniqueness of nat_bp

namespace {

/// Polynomials in three commuting variables a, b, c over Q.
class MPoly3 {
   public:
    using Exp = std::array<int, 3>;

    MPoly3() = default;
    static MPoly3 var(int i) {
        MPoly3 p;
        Exp e{};
        e[static_cast<std::size_t>(i)] = 1;
        p.t_[e] = Rational(1);
        return p;
    }
    static MPoly3 constant(const Rational& r) {
        MPoly3 p;
        if (!r.is_zero()) p.t_[Exp{}] = r;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }

    friend MPoly3 operator+(MPoly3 a, const MPoly3& b) {
        for (const auto& [e, c] : b.t_) a.add(e, c);
        return a;
    }
    friend MPoly3 operator-(MPoly3 a, const MPoly3& b) {
        for (const auto& [e, c] : b.t_) a.add(e, -c);
        return a;
    }
    friend MPoly3 operator*(const MPoly3& a, const MPoly3& b) {
        MPoly3 r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }

    /// Sets the variables flagged in zero to 0.
    MPoly3 restrict(const std::array<bool, 3>& zero) const {
        MPoly3 r;
        for (const auto& [e, c] : t_) {
            bool keep = true;
            for (std::size_t i = 0; i < 3; ++i)
                if (zero[i] && e[i] > 0) keep = false;
            if (keep) r.add(e, c);
        }
        return r;
    }

   private:
    void add(const Exp& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::map<Exp, Rational> t_;
};

}  // namespace

Report nat_bp_uniqueness() {
    const AlgebraId id = AlgebraId::u();
    const Truncation t{3, 0, 4};
    const std::vector<Element<Rational>> base = {Element<Rational>::xg(id, 0, 2), Element<Rational>::xg(id, 2, 0)};
    const GradedSubspace<Rational> m0 = closure(base, OperatorFamily::LeftIdeal, id, t);
    const std::vector<Element<Rational>> v = Reducer<Rational>(m0, {}).standard_basis();
    const Reducer<Rational> red(m0, v);
    const int dim = red.dim();

    Report rep;
    rep.suite = "nat_bp uniqueness";
    rep.anchor = "codimension-2 left ideals of ker(eps) containing H^2 and X^2";
    RelationResult shape{"quotient-basis", "ker(eps)/(H^2, X^2) has basis H, X, XH", 0, {}, {}};
    shape.expect_true("dimension", dim == 3, std::to_string(dim));
    rep.relations.push_back(shape);
    if (dim != 3) return rep;

    // v = a b0 + b b1 + c b2; the line through v is stable iff [v | L_X v | L_H v] has rank 1.
    std::array<MPoly3, 3> vec;
    for (int i = 0; i < 3; ++i) vec[static_cast<std::size_t>(i)] = MPoly3::var(i);
    auto apply = [&](const Element<Rational>& h) {
        std::array<MPoly3, 3> out{};
        for (int j = 0; j < 3; ++j) {
            const Vector<Rational> col = red.coords(h * v[static_cast<std::size_t>(j)]);
            for (int i = 0; i < 3; ++i)
                out[static_cast<std::size_t>(i)] =
                    out[static_cast<std::size_t>(i)] + MPoly3::constant(col[i]) * vec[static_cast<std::size_t>(j)];
        }
        return out;
    };
    const std::array<std::array<MPoly3, 3>, 3> cols = {vec, apply(gen_x<Rational>(id)), apply(gen_col<Rational>(id))};
    std::vector<MPoly3> minors;
    for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2)
            for (std::size_t r1 = 0; r1 < 3; ++r1)
                for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
                    minors.push_back(cols[c1][r1] * cols[c2][r2] - cols[c1][r2] * cols[c2][r1]);

    RelationResult cases{"case-split", "the only stable line avoiding H and X is spanned by XH", 0, {}, {}};
    const char* names[3] = {"a", "b", "c"};
    std::vector<std::string> found;
    for (int mask = 1; mask < 8; ++mask) {
        std::array<bool, 3> zero{};
        std::string label;
        for (int i = 0; i < 3; ++i) {
            zero[static_cast<std::size_t>(i)] = !(mask & (1 << i));
            label += std::string(names[i]) + (zero[static_cast<std::size_t>(i)] ? "=0 " : "!=0 ");
        }
        label.pop_back();
        bool all_zero = true, some_monomial = false;
        for (const auto& p : minors) {
            const MPoly3 r = p.restrict(zero);
            if (!r.is_zero()) all_zero = false;
            if (r.is_monomial()) some_monomial = true;
        }
        ++cases.checked;
        if (!all_zero && !some_monomial) {
            cases.failures.push_back({label, "decided", "undetermined"});
            continue;
        }
        if (!all_zero) continue;
        const bool only_h = mask == 1, only_x = mask == 2;
        if (!only_h && !only_x) found.push_back(label);
        cases.notes.push_back(label + ": stable line" + (only_h ? " (contains H)" : only_x ? " (contains X)" : ""));
    }
    cases.expect_true("stable lines avoiding H and X", found.size() == 1 && found[0] == "a=0 b=0 c!=0",
                      found.empty() ? "none" : found[0]);
    rep.relations.push_back(cases);

    RelationResult same{"matches-nat_bp", "(H^2, X^2, XH) is the ideal of nat_bp", 0, {}, {}};
    const std::vector<Element<Rational>> gens = {base[0], base[1], v[2]};
    same.expect_true("M", closure(gens, OperatorFamily::LeftIdeal, id, t) == *build_nat_bp().M);
    rep.relations.push_back(same);
    return rep;
}

}  // namespace qborel
