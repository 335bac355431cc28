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

#include <functional>

#include "doctest.h"
#include "qborel/duality.hpp"

using namespace qborel;

namespace {

using E = Element<RatFunc>;
using ER = Element<Rational>;

const AlgebraId kUq = AlgebraId::uq();
RatFunc q(int k = 1) { return RatFunc::q_pow(k); }
E uq(int n, int m, RatFunc c = 1) { return E::xg(kUq, n, m, c); }

// Sum over Delta(t) of <a, t_1> <b, t_2> for the given pairing.
template <class S>
S pair_tensor_left(const PairingId& id, const Element<S>& a, const Element<S>& b, const Tensor<S, 2>& t) {
    S r(0);
    for (const auto& [k, c] : t.terms())
        r += c * pair(id, a, Element<S>::term(t.algebra(), k[0])) * pair(id, b, Element<S>::term(t.algebra(), k[1]));
    return r;
}

template <class S>
S pair_tensor_right(const PairingId& id, const Tensor<S, 2>& t, const Element<S>& c1, const Element<S>& c2) {
    S r(0);
    for (const auto& [k, c] : t.terms())
        r += c * pair(id, Element<S>::term(t.algebra(), k[0]), c1) * pair(id, Element<S>::term(t.algebra(), k[1]), c2);
    return r;
}

}  // namespace

TEST_SUITE("duality") {
    TEST_CASE("pairing values") {
        const auto pq = PairingId::q_selfdual();
        CHECK(pair(pq, uq(1, 0), uq(1, 0)) == RatFunc(1));
        CHECK(pair(pq, uq(1, 0), uq(0, 1)) == RatFunc(0));
        CHECK(pair(pq, uq(0, 2), uq(0, 3)) == q(-6));
        CHECK(pair(pq, uq(3, 0), uq(3, 0)) == qfact(3) * q(-3));
        const auto pc = PairingId::classical();
        CHECK(pair(pc, ER::xg(AlgebraId::u(), 0, 1), ER::xg(AlgebraId::c(), 0, 2)) == Rational(2));
        CHECK(pair(pc, ER::xg(AlgebraId::u(), 2, 3), ER::xg(AlgebraId::c(), 2, -1)) == Rational(-2));
        CHECK_THROWS_AS(pair(pc, ER::xg(AlgebraId::c(), 0, 1), ER::xg(AlgebraId::u(), 0, 1)), AlgebraMismatch);
    }

    TEST_CASE("pairing orientation: Hopf pairing axioms for the q pairing") {
        const auto pq = PairingId::q_selfdual();
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int m1 = -1; m1 <= 1; ++m1)
                for (int n2 = 0; n2 <= 2; ++n2)
                    for (int m2 = -1; m2 <= 1; ++m2)
                        for (int s = -1; s <= 1; ++s) {
                            E a = uq(n1, m1), b = uq(n2, m2), x = uq(n1 + n2, s);
                            // <x, ab> = <x_1, a><x_2, b>
                            CHECK(pair(pq, x, a * b) == pair_tensor_right(pq, coproduct(x), a, b));
                            // <ab, x> = <a (x) b, Delta x>
                            CHECK(pair(pq, a * b, x) == pair_tensor_left(pq, a, b, coproduct(x)));
                            CHECK(pair(pq, antipode(a), x) == pair(pq, a, antipode(x)));
                        }
        for (int n = 0; n <= 3; ++n)
            for (int s = -2; s <= 2; ++s) CHECK(pair(pq, uq(0, 0), uq(n, s)) == counit(uq(n, s)));
    }

    TEST_CASE("pairing orientation: classical and kappa pairings") {
        const auto pc = PairingId::classical();
        const AlgebraId u = AlgebraId::u(), c = AlgebraId::c();
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int h1 = 0; h1 <= 2; ++h1)
                for (int n2 = 0; n2 <= 2; ++n2)
                    for (int h2 = 0; h2 <= 1; ++h2)
                        for (int s = -2; s <= 2; ++s) {
                            ER a = ER::xg(u, n1, h1), b = ER::xg(u, n2, h2);
                            ER y1 = ER::xg(c, n1, s), y2 = ER::xg(c, n2, s + 1), y = ER::xg(c, n1 + n2, s);
                            Rational split(0);
                            for (const auto& [k, cc] : coproduct(y).terms())
                                split += cc * pair(pc, a, ER::term(c, k[0])) * pair(pc, b, ER::term(c, k[1]));
                            CHECK(pair(pc, a * b, y) == split);
                            CHECK(pair(pc, ER::xg(u, n1 + n2, h1), y1 * y2) ==
                                  pair_tensor_right(pc, coproduct(ER::xg(u, n1 + n2, h1)), y1, y2));
                            CHECK(pair(pc, antipode(a), y) == pair(pc, a, antipode(y)));
                        }
        const auto pk = PairingId::kappa(3);
        const AlgebraId un = AlgebraId::un(3), cn = AlgebraId::cn(3);
        Monomial m1, m2;
        m1.x = {1, 1};
        m1.col = 1;
        m2.x = {1, 0};
        m2.col = 2;
        ER a = ER::term(un, m1), y1 = ER::term(cn, m2), y2 = ER::term(cn, Monomial{{0, 1}, -1});
        CHECK(pair(pk, a, y1 * y2) == pair_tensor_right(pk, coproduct(a), y1, y2));
    }

    TEST_CASE("adjoint coaction examples") {
        CHECK(adjoint_coaction_direct(uq(0, 1)) == tensor(uq(0, 0), uq(0, 1)));
        CHECK(adjoint_coaction_direct(uq(0, 0)) == tensor(uq(0, 0), uq(0, 0)));
        auto expected = tensor(uq(1, 0), uq(0, 0) - uq(0, 1)) + tensor(uq(0, 1), uq(1, 0));
        CHECK(adjoint_coaction_direct(uq(1, 0)) == expected);
        CHECK(adjoint_coaction_closed(1, uq(0, 0)) == expected);
        CHECK(adjoint_coaction_closed(0, uq(0, 3)) == tensor(uq(0, 0), uq(0, 3)));
    }

    TEST_CASE("adjoint coaction closed form equals the direct computation") {
        for (int n = 0; n <= 5; ++n)
            for (const E& p : {uq(0, 0), uq(0, 1), uq(0, -1), uq(0, 0) + uq(0, 1)}) {
                E v = uq(n, 0) * p;
                CHECK(adjoint_coaction_closed(n, p) == adjoint_coaction_direct(v));
            }
        const AlgebraId c = AlgebraId::c();
        for (int n = 0; n <= 4; ++n) {
            ER v = ER::xg(c, n, 1) - ER::xg(c, n, -1);
            CHECK(adjoint_coaction_closed(v) == adjoint_coaction_direct(v));
        }
    }

    TEST_CASE("adjoint coaction is a comodule map") {
        for (int n = 0; n <= 3; ++n)
            for (int k = -1; k <= 1; ++k) {
                auto ad = adjoint_coaction_direct(uq(n, k));
                Tensor<RatFunc, 3> lhs(kUq), rhs = coproduct_on_left(ad);
                for (const auto& [key, c] : ad.terms()) {
                    auto inner = adjoint_coaction_direct(E::term(kUq, key[1]));
                    for (const auto& [k2, c2] : inner.terms()) lhs.add({key[0], k2[0], k2[1]}, c * c2);
                }
                CHECK(lhs == rhs);
            }
    }

    TEST_CASE("adjoint actions") {
        CHECK(adjoint_action_uq(Generator::G, uq(2, 1)) == uq(2, 1, q(-2)));
        CHECK(adjoint_action_uq(Generator::X, uq(1, -1)).is_zero());
        CHECK(adjoint_action_uq(Generator::X, uq(1, 0)) == uq(2, 0, RatFunc(1) - q(-1)));
        for (int n = 0; n <= 4; ++n)
            for (int k = -2; k <= 2; ++k) {
                E v = uq(n, k);
                CHECK(adjoint_action_uq(Generator::X, v) == adjoint_action_bruteforce(uq(1, 0), v));
                CHECK(adjoint_action_uq(Generator::G, v) == adjoint_action_bruteforce(uq(0, 1), v));
                CHECK(adjoint_action_uq(Generator::GInv, v) == adjoint_action_bruteforce(uq(0, -1), v));
                // module axiom (X g) |> v = X |> (g |> v)
                CHECK(adjoint_action_bruteforce(uq(1, 0) * uq(0, 1), v) ==
                      adjoint_action_uq(Generator::X, adjoint_action_uq(Generator::G, v)));
                CHECK(adjoint_action_bruteforce(uq(0, 1) * uq(1, 0), v) ==
                      adjoint_action_uq(Generator::G, adjoint_action_uq(Generator::X, v)));
            }
        const AlgebraId u = AlgebraId::u();
        CHECK(adjoint_action_classical(Generator::H, ER::xg(u, 3, 1)) == ER::xg(u, 3, 1, Rational(3)));
        CHECK(adjoint_action_classical(Generator::X, ER::xg(u, 0, 1)) == ER::xg(u, 1, 0, Rational(-1)));
        CHECK(adjoint_action_classical(Generator::X, ER::xg(u, 2, 0)).is_zero());
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) {
                ER v = ER::xg(u, n, m);
                CHECK(adjoint_action_classical(Generator::X, v) == adjoint_action_bruteforce(gen_x<Rational>(u), v));
                CHECK(adjoint_action_classical(Generator::H, v) == adjoint_action_bruteforce(gen_col<Rational>(u), v));
            }
    }

    TEST_CASE("kappa coregular action reproduces derivative and shift") {
        for (int n : {2, 3, 4}) {
            const AlgebraId un = AlgebraId::un(n), cn = AlgebraId::cn(n);
            const int lim = n == 4 ? 2 : 3;
            std::vector<Monomial> mons;
            Monomial m;
            std::function<void(int)> gen = [&](int i) {
                if (i == n - 1) {
                    for (int k = 0; k <= lim; ++k) {
                        m.col = k;
                        mons.push_back(m);
                    }
                    return;
                }
                for (int e = 0; e <= lim; ++e) {
                    m.x[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(e);
                    gen(i + 1);
                }
            };
            gen(0);
            for (const auto& mm : mons) {
                CommPoly<Rational> f = CommPoly<Rational>::term(un, mm);
                ER a = normal_order(f, Ordering::Storage);
                for (int i = 0; i < n - 1; ++i) {
                    CommPoly<Rational> df(un);
                    if (mm.x[static_cast<std::size_t>(i)] > 0) {
                        Monomial d = mm;
                        d.x[static_cast<std::size_t>(i)] -= 1;
                        df.add(d, Rational(mm.x[static_cast<std::size_t>(i)]));
                    }
                    CHECK(coregular_action(gen_x<Rational>(cn, i), a) == normal_order(df, Ordering::Storage));
                }
                CommPoly<Rational> shifted(un);
                for (int j = 0; j <= mm.col; ++j) {
                    Monomial d = mm;
                    d.col = j;
                    shifted.add(d, binomial(mm.col, j));
                }
                CHECK(coregular_action(gen_col<Rational>(cn), a) == normal_order(shifted, Ordering::Storage));
                CHECK(coregular_action(ER::constant(cn, 1), a) == a);
            }
        }
        const AlgebraId u2 = AlgebraId::un(2), c2 = AlgebraId::cn(2);
        CHECK(coregular_action(gen_x<Rational>(c2), ER::xg(u2, 2, 0)) == ER::xg(u2, 1, 0, Rational(2)));
        CHECK(coregular_action(gen_col<Rational>(c2), ER::xg(u2, 0, 1)) == ER::xg(u2, 0, 1) + ER::constant(u2, 1));
    }

    TEST_CASE("tangent action examples") {
        // n = 2: X acting on g^{-1} - 1
        E x = uq(0, -1) - uq(0, 0);
        CHECK(project_ker_counit(tangent_action(uq(1, 0), x)).is_zero());
        CHECK(tangent_action(uq(0, 0), uq(1, -1) + uq(0, 2)) == uq(1, -1) + uq(0, 2));
        // g acting on X g^{-1}: <(Xg^{-1})_1, g> (Xg^{-1})_2 from the coproduct and pairing
        E got = tangent_action(uq(0, 1), uq(1, -1));
        E expected(kUq);
        for (const auto& [k, c] : coproduct(uq(1, -1)).terms())
            expected += E::term(kUq, k[1]) * (c * pair(PairingId::q_selfdual(), E::term(kUq, k[0]), uq(0, 1)));
        CHECK(got == expected);
        CHECK(got == uq(1, -1));
    }

    TEST_CASE("braided Leibniz rule") {
        std::vector<E> xs = {uq(0, -1) - uq(0, 0), uq(1, -1), uq(2, -2) - uq(0, 0), uq(1, 1)};
        for (const auto& x : xs)
            for (int n1 = 0; n1 <= 2; ++n1)
                for (int k1 = -1; k1 <= 1; ++k1)
                    for (int n2 = 0; n2 <= 2; ++n2)
                        for (int k2 = -1; k2 <= 1; ++k2) CHECK(braided_leibniz_check(x, uq(n1, k1), uq(n2, k2)));
        const AlgebraId u = AlgebraId::u(), c = AlgebraId::c();
        for (const ER& x : {ER::xg(c, 0, -1) - ER::constant(c, 1), ER::xg(c, 1, -1)})
            for (int n1 = 0; n1 <= 2; ++n1)
                for (int h1 = 0; h1 <= 2; ++h1) CHECK(braided_leibniz_check(x, ER::xg(u, n1, h1), ER::xg(u, 1, 1)));
    }
}
