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

#include "doctest.h"
#include "qborel/kappa.hpp"

using namespace qborel;

namespace {

using ER = Element<Rational>;
using CP = CommPoly<Rational>;

Monomial mono(std::initializer_list<int> xs, int x0) {
    Monomial m;
    std::size_t i = 0;
    for (int e : xs) m.x[i++] = static_cast<std::int16_t>(e);
    m.col = x0;
    return m;
}

// Moments of exp(-x^2) by the recurrence m(k + 2) = (k + 1)/2 m(k), m(0) = 1, m(1) = 0.
Rational moment_by_recurrence(int k) {
    std::vector<Rational> m = {Rational(1), Rational(0)};
    for (int j = 0; static_cast<int>(m.size()) <= k; ++j) m.push_back(m[j] * Rational(j + 1, 2));
    return m[k];
}

}  // namespace

TEST_SUITE("kappa") {
    TEST_CASE("one-variable integrals") {
        const AlgebraId id = GaussianPoly::letters(1);
        CHECK(gaussian_integral(GaussianPoly(1, CP::constant(id, 1))) == SqrtPiScalar(1, 1));
        CHECK(gaussian_integral(GaussianPoly::monomial(1, mono({}, 1))).is_zero());
        CHECK(gaussian_integral(GaussianPoly::monomial(1, mono({}, 2))) == SqrtPiScalar(Rational(1, 2), 1));
        for (int k = 0; k <= 10; ++k)
            CHECK(gaussian_integral(GaussianPoly::monomial(1, mono({}, k))) == SqrtPiScalar(moment_by_recurrence(k), 1));
        CHECK_THROWS_AS(GaussianPoly::monomial(1, mono({1}, 0)), DomainError);
    }

    TEST_CASE("shifted moments") {
        // Mean -1 and variance 1/2 under exp(-(x + 1)^2).
        CHECK(shifted_moment(0, 1) == Rational(1));
        CHECK(shifted_moment(1, 1) == Rational(-1));
        CHECK(shifted_moment(2, 1) == Rational(3, 2));
        for (int k = 0; k <= 6; ++k) CHECK(shifted_moment(k, 0) == moment_by_recurrence(k));
    }

    TEST_CASE("sqrt(pi) scalars") {
        CHECK((SqrtPiScalar(1, 2) + SqrtPiScalar(2, 2)) == SqrtPiScalar(3, 2));
        CHECK((SqrtPiScalar(1, 2) - SqrtPiScalar(1, 2)).is_zero());
        CHECK_THROWS_AS(SqrtPiScalar(1, 1) + SqrtPiScalar(1, 2), DomainError);
        CHECK((SqrtPiScalar(2, 1) * SqrtPiScalar(Rational(1, 2), 1)) == SqrtPiScalar(1, 2));
        CHECK(SqrtPiScalar(Rational(3, 4), 2).to_string() == "3/4 * sqrt(pi)^2");
    }

    TEST_CASE("integral is linear and symmetric in the spatial letters") {
        const AlgebraId id = AlgebraId::un(4);
        const CP a = CP::term(id, mono({2, 0, 4}, 2)), b = CP::term(id, mono({0, 2, 0}, 0));
        const SqrtPiScalar ia = gaussian_integral(GaussianPoly(4, a)), ib = gaussian_integral(GaussianPoly(4, b));
        CHECK(gaussian_integral(GaussianPoly(4, a * Rational(3) + b)) == ia * Rational(3) + ib);
        CHECK(ia == gaussian_integral(GaussianPoly::monomial(4, mono({4, 2, 0}, 2))));
        CHECK(ia == gaussian_integral(GaussianPoly::monomial(4, mono({0, 4, 2}, 2))));
        CHECK(ia == SqrtPiScalar(Rational(3, 4) * Rational(1, 2) * Rational(1, 2), 4));
    }

    TEST_CASE("invariance examples") {
        CHECK(invariance_check(GaussianPoly::monomial(2, mono({0}, 1))).pass());
        CHECK(invariance_check(GaussianPoly::monomial(2, mono({1}, 2))).pass());
        CHECK(invariance_check(GaussianPoly::monomial(2, mono({0}, 0))).pass());
        // (x + 1)^2 against exp(-(x + 1)^2): shifted moments 3/2 - 2 * 1 + 1 = 1/2.
        const GaussianPoly sq = GaussianPoly::monomial(1, mono({}, 2));
        CHECK(shifted_gaussian_integral(sq, 1) == SqrtPiScalar(Rational(1, 2), 1));
        CHECK(shifted_gaussian_integral(GaussianPoly::monomial(1, mono({}, 1)), 1).is_zero());
        for (int n : {2, 3, 4}) CHECK(invariance_suite(n, 4).pass());
    }

    TEST_CASE("d on kappa-Minkowski space") {
        const auto c2 = build_kappa_calculus(2);
        const AlgebraId u2 = c2.base;
        const ER x0 = gen_col<Rational>(u2), x1 = gen_x<Rational>(u2);
        auto dx = [&](const Calculus<Rational>& c, int mu) { return eta(c, mu); };
        CHECK(d_kappa(CP::term(u2, mono({}, 1)), c2) == dx(c2, 0));
        CHECK(d_kappa(CP::term(u2, mono({1}, 1)), c2) == dx(c2, 1) * x0 + dx(c2, 0) * x1);
        CHECK(d_kappa(CP::term(u2, mono({2}, 0)), c2) == dx(c2, 1) * x1 * Rational(2));
        CHECK(d(c2, x1 * x0) == d_kappa(CP::term(u2, mono({1}, 1)), c2));

        const auto c4 = build_kappa_calculus(4);
        const AlgebraId u4 = c4.base;
        const GammaElement<Rational> expected = dx(c4, 0) * ER::term(u4, mono({1, 1}, 0)) +
                                                dx(c4, 1) * ER::term(u4, mono({0, 1}, 1)) +
                                                dx(c4, 2) * ER::term(u4, mono({1}, 1));
        CHECK(d_kappa(CP::term(u4, mono({1, 1}, 1)), c4) == expected);
        CHECK(d(c4, ER::term(u4, mono({1, 1}, 1))) == expected);
    }

    TEST_CASE("kappa relation suites") {
        for (int n : {2, 3, 4}) {
            const Report r = verify_relations(build_kappa_calculus(n), n == 4 ? 3 : 4);
            CHECK_MESSAGE(r.pass(), to_text(r));
        }
        CHECK_FALSE(verify_relations(build_kappa_calculus(3, {2}), 3).pass());
        CHECK_FALSE(verify_relations(build_kappa_calculus(3), 3, Tweak{"x0-dxi"}).pass());
    }

    TEST_CASE("pairing and pullback") {
        CHECK(kappa_pairing_duality_check(2, 3).pass());
        CHECK(kappa_pairing_duality_check(4, 2).pass());
        for (int n : {2, 3, 4}) CHECK(kappa_pullback_check(n).pass());
    }
}
