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

#include <random>

#include "doctest.h"
#include "qborel/algebra.hpp"

using namespace qborel;

namespace {

using E = Element<RatFunc>;
using ER = Element<Rational>;

const AlgebraId kUq = AlgebraId::uq();

RatFunc q(int k = 1) { return RatFunc::q_pow(k); }

E uq(int n, int m, RatFunc c = 1) { return E::xg(kUq, n, m, c); }

// Oracle for the coproduct: Delta is an algebra map fixed by its values on
// the generators, so Delta(X^n g^k) = Delta(X)^n Delta(g)^k.
Tensor<RatFunc, 2> coproduct_from_generators(int n, int k) {
    auto dx = tensor(uq(1, 0), uq(0, 0)) + tensor(uq(0, 1), uq(1, 0));
    auto dg = tensor(uq(0, k), uq(0, k));
    Tensor<RatFunc, 2> acc = tensor(uq(0, 0), uq(0, 0));
    for (int i = 0; i < n; ++i) acc = acc * dx;
    return acc * dg;
}

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("products in normal order") {
        CHECK(uq(1, 1) * uq(1, 1) == uq(2, 2, q(-1)));
        CHECK(render(uq(1, 1) * uq(1, 1)) == "q^-1 * X^2 g^2");
        CHECK(uq(0, 1) * uq(1, 0) == uq(1, 1, q(-1)));

        const AlgebraId u = AlgebraId::u();
        auto h = gen_col<Rational>(u), x = gen_x<Rational>(u);
        CHECK(h * x == x * h + x);
        CHECK(x * h * x == ER::xg(u, 2, 1) + ER::xg(u, 2, 0));

        const AlgebraId u3 = AlgebraId::un(3);
        auto x0 = gen_col<Rational>(u3), x1 = gen_x<Rational>(u3, 0), x2 = gen_x<Rational>(u3, 1);
        CHECK(x0 * x1 == x1 * x0 + x1);
        CHECK(render(x0 * x1) == "x1 + x1 x0");
        CHECK(x1 * x2 == x2 * x1);
        CHECK(x0 * x2 - x2 * x0 == x2);

        const AlgebraId c = AlgebraId::c();
        CHECK(gen_col<Rational>(c) * gen_x<Rational>(c) == gen_x<Rational>(c) * gen_col<Rational>(c));
        CHECK_THROWS_AS(uq(1, 0) * E::xg(AlgebraId::c(), 1, 0), AlgebraMismatch);
        CHECK_THROWS_AS(ER(AlgebraId::uq()), AlgebraMismatch);
    }

    TEST_CASE("associativity on monomial triples") {
        std::vector<E> mons;
        for (int n = 0; n <= 2; ++n)
            for (int m = -2; m <= 2; ++m) mons.push_back(uq(n, m));
        for (const auto& a : mons)
            for (const auto& b : mons)
                for (const auto& c : mons) CHECK((a * b) * c == a * (b * c));

        for (AlgebraId id : {AlgebraId::u(), AlgebraId::un(3)}) {
            std::vector<ER> ms;
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 2; ++j) {
                    Monomial m;
                    m.x[0] = static_cast<std::int16_t>(i);
                    m.x[id.x_count() - 1] += static_cast<std::int16_t>(j % 2);
                    m.col = j;
                    ms.push_back(ER::term(id, m));
                }
            for (const auto& a : ms)
                for (const auto& b : ms)
                    for (const auto& c : ms) CHECK((a * b) * c == a * (b * c));
        }
    }

    TEST_CASE("coproduct closed form agrees with the generator oracle") {
        CHECK(coproduct(uq(1, 0)) == tensor(uq(1, 0), uq(0, 0)) + tensor(uq(0, 1), uq(1, 0)));
        CHECK(coproduct(uq(0, 3)) == tensor(uq(0, 3), uq(0, 3)));
        for (int n = 0; n <= 6; ++n)
            for (int k = -3; k <= 3; ++k) CHECK(coproduct(uq(n, k)) == coproduct_from_generators(n, k));
    }

    TEST_CASE("coproduct of X^n equals the form with g^r X^(n-r) on the left leg") {
        for (int n = 0; n <= 6; ++n) {
            Tensor<RatFunc, 2> appendix(kUq);
            for (int r = 0; r <= n; ++r)
                appendix += tensor(uq(0, r) * uq(n - r, 0), uq(r, 0)) *= ScalarTraits<RatFunc>::qbinom(n, r);
            CHECK(coproduct(uq(n, 0)) == appendix);
        }
    }

    TEST_CASE("counit and antipode examples") {
        CHECK(counit(uq(1, 0, 3) + uq(0, 1, 2)) == RatFunc(2));
        CHECK(counit(uq(0, 0)) == RatFunc(1));
        CHECK(counit(uq(1, 5)) == RatFunc(0));
        CHECK(antipode(uq(1, 0)) == uq(0, -1, -1) * uq(1, 0));
        CHECK(antipode(uq(0, 2)) == uq(0, -2));
        auto sx = antipode(uq(1, 0));
        CHECK(antipode(uq(2, 0)) == sx * sx);
        CHECK(antipode(uq(2, 0)) == uq(0, -2, q(-1)) * uq(2, 0));
        CHECK(counit(gen_col<Rational>(AlgebraId::u())) == Rational(0));
    }

    TEST_CASE("Hopf axioms on U_q(b+) monomials") {
        for (int n = 0; n <= 4; ++n)
            for (int k = -2; k <= 2; ++k) {
                E a = uq(n, k);
                auto d = coproduct(a);
                CHECK(coproduct_on_left(d) == coproduct_on_right(d));
                auto eps_left = multiply_legs(map_leg(d, 0, [](const Monomial& m) {
                    return E::constant(kUq, counit_monomial<RatFunc>(kUq, m));
                }));
                CHECK(eps_left == a);
                auto s_left = multiply_legs(map_leg(d, 0, [](const Monomial& m) { return antipode_monomial<RatFunc>(kUq, m); }));
                auto s_right = multiply_legs(map_leg(d, 1, [](const Monomial& m) { return antipode_monomial<RatFunc>(kUq, m); }));
                CHECK(s_left == E::constant(kUq, counit(a)));
                CHECK(s_right == E::constant(kUq, counit(a)));
            }
    }

    TEST_CASE("Hopf axioms in the classical and kappa families") {
        for (AlgebraId id : {AlgebraId::u(), AlgebraId::c(), AlgebraId::un(3), AlgebraId::cn(3)}) {
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    for (int k = id.laurent_column() ? -2 : 0; k <= 2; ++k) {
                        Monomial m;
                        m.x[0] = static_cast<std::int16_t>(a);
                        m.x[id.x_count() - 1] += static_cast<std::int16_t>(b);
                        m.col = k;
                        ER e = ER::term(id, m);
                        auto d = coproduct(e);
                        CHECK(coproduct_on_left(d) == coproduct_on_right(d));
                        auto s_left = multiply_legs(map_leg(d, 0, [&](const Monomial& mm) { return antipode_monomial<Rational>(id, mm); }));
                        CHECK(s_left == ER::constant(id, counit(e)));
                        auto s_right = multiply_legs(map_leg(d, 1, [&](const Monomial& mm) { return antipode_monomial<Rational>(id, mm); }));
                        CHECK(s_right == ER::constant(id, counit(e)));
                        for (int b2 = 0; b2 <= 1; ++b2) {
                            ER f = ER::term(id, Monomial::xg(b2, 1));
                            CHECK(coproduct(e * f) == coproduct(e) * coproduct(f));
                        }
                    }
        }
    }

    TEST_CASE("coproduct is an algebra map on U_q(b+)") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> deg(0, 4), gd(-2, 2);
        for (int t = 0; t < 40; ++t) {
            E a = uq(deg(rng), gd(rng)), b = uq(deg(rng), gd(rng));
            CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
        }
    }

    TEST_CASE("normal ordering conventions") {
        const AlgebraId u = AlgebraId::u();
        CommPoly<RatFunc> gx = CommPoly<RatFunc>::xg(kUq, 1, 1);
        CHECK(normal_order(gx, Ordering::ColumnFirst) == uq(1, 1, q(-1)));
        CHECK(normal_order(gx, Ordering::Storage) == uq(1, 1));
        auto hx = CommPoly<Rational>::xg(u, 1, 1);
        CHECK(normal_order(hx, Ordering::ColumnFirst) == ER::xg(u, 1, 1) + ER::xg(u, 1, 0));
        for (int a = 0; a <= 3; ++a)
            for (int b = -2; b <= 3; ++b) {
                auto f = CommPoly<RatFunc>::xg(kUq, a, b, RatFunc(3) + q());
                CHECK(symbol(normal_order(f, Ordering::ColumnFirst), Ordering::ColumnFirst) == f);
                if (b >= 0) {
                    auto h = CommPoly<Rational>::xg(u, a, b, Rational(2));
                    CHECK(symbol(normal_order(h, Ordering::ColumnFirst), Ordering::ColumnFirst) == h);
                }
            }
    }

    TEST_CASE("rendering") {
        CHECK(render(E(kUq)) == "0");
        CHECK(render(uq(0, 0)) == "1");
        CHECK(render(uq(1, 0) - uq(0, -1, 2)) == "-2 * g^-1 + X");
        CHECK(render(uq(1, 2, RatFunc(1) + q())) == "(1 + q) * X g^2");
        CHECK(render(tensor(uq(1, 0), uq(0, 0)) + tensor(uq(0, 1), uq(1, 0))) == "g (x) X + X (x) 1");
        const AlgebraId u3 = AlgebraId::un(4);
        Monomial m;
        m.x = {1, 0, 2};
        m.col = 3;
        CHECK(render_monomial(u3, m) == "x3^2 x1 x0^3");
        CHECK(render_monomial(AlgebraId::cn(3), Monomial::xg(1, -1)) == "p1 g^-1");
    }
}
