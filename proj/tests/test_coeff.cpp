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
#include "qborel/errors.hpp"
#include "qborel/qcombinatorics.hpp"

using namespace qborel;

namespace {

RatFunc poly(std::initializer_list<long> coeffs, int low = 0) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatFunc(QPolynomial::from_coefficients(low, c));
}

// Independent oracle: [n]! / ([m]! [n-m]!) computed by field division.
RatFunc qbinom_by_factorials(int n, int m) { return qfact(n) / (qfact(m) * qfact(n - m)); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), low(-2, 2);
    auto rand_poly = [&](bool nonzero) {
        while (true) {
            std::vector<Rational> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
            auto p = QPolynomial::from_coefficients(low(rng), c);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RatFunc(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_SUITE("coeff") {
    TEST_CASE("rational arithmetic stays in lowest terms") {
        Rational a(6, -4);
        CHECK(a.to_string() == "-3/2");
        CHECK((a + Rational(3, 2)).is_zero());
        CHECK(Rational::parse("10/4") == Rational(5, 2));
        CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
        CHECK_THROWS_AS(Rational(1, 0), DomainError);
        CHECK(factorial(5) == Rational(120));
        CHECK(binomial(6, 2) == Rational(15));
    }

    TEST_CASE("laurent polynomial rendering") {
        CHECK(poly({1, 1, 1}).to_string() == "1 + q + q^2");
        CHECK(RatFunc::q_pow(-1).to_string() == "q^-1");
        CHECK((-RatFunc::q()).to_string() == "-q");
        CHECK(poly({2}, 3).to_string() == "2*q^3");
        CHECK((RatFunc(Rational(1, 2)) * RatFunc::q()).to_string() == "1/2*q");
        CHECK((RatFunc(1) - RatFunc::q()).to_string() == "1 - q");
        CHECK(RatFunc(0).to_string() == "0");
    }

    TEST_CASE("rational functions normalize to a canonical form") {
        RatFunc q = RatFunc::q();
        RatFunc a = (q * q - 1) / (q - 1);
        CHECK(a == q + 1);
        CHECK(a.is_polynomial());
        RatFunc b = RatFunc(1) / (q * q * 2);
        CHECK(b == RatFunc(QPolynomial::monomial(Rational(1, 2), -2)));
        RatFunc c = RatFunc(1) / (RatFunc(2) - q * 2);
        CHECK(c.denominator().leading_coeff() == Rational(1));
        CHECK(c.denominator().low_degree() == 0);
        CHECK(c.to_string() == "(-1/2)/(-1 + q)");
        CHECK((q / (q * q + q)).to_string() == "(1)/(1 + q)");
    }

    TEST_CASE("field axioms on random triples") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
            // equality agrees with cross multiplication
            CHECK((a == b) == (a.numerator() * b.denominator() == b.numerator() * a.denominator()));
        }
    }

    TEST_CASE("q-integers and q-factorials") {
        CHECK(qint(0) == RatFunc(0));
        CHECK(qint(1) == RatFunc(1));
        CHECK(qint(3) == poly({1, 1, 1}));
        CHECK(qfact(0) == RatFunc(1));
        CHECK(qfact(2) == poly({1, 1}));
        CHECK(qfact(3) == poly({1, 1}) * poly({1, 1, 1}));
    }

    TEST_CASE("q-binomials against the factorial oracle") {
        CHECK(qbinom(2, 1) == poly({1, 1}));
        CHECK(qbinom(4, 2) == poly({1, 1, 1}) * poly({1, 0, 1}));
        for (int n = 0; n <= 12; ++n) {
            CHECK(qbinom(n, 0) == RatFunc(1));
            for (int m = 0; m <= n; ++m) {
                CHECK(qbinom(n, m) == qbinom_by_factorials(n, m));
                CHECK(qbinom(n, m).is_polynomial());
                CHECK(eval_q1(qbinom(n, m)) == binomial(n, m));
                if (m >= 1) {
                    RatFunc upper = m <= n - 1 ? qbinom(n - 1, m) : RatFunc(0);
                    CHECK(qbinom(n, m) == qbinom(n - 1, m - 1) + RatFunc::q_pow(m) * upper);
                }
            }
        }
        CHECK(qbinom(60, 3) == qbinom_by_factorials(60, 3));
        CHECK_THROWS_AS(qbinom(2, 3), DomainError);
    }

    TEST_CASE("evaluation at q = 1") {
        CHECK(eval_q1(qint(5)) == Rational(5));
        CHECK(eval_q1(qbinom(4, 2)) == Rational(6));
        CHECK_THROWS_AS(eval_q1(RatFunc(1) / (RatFunc(1) - RatFunc::q())), EvaluationPole);
        RatFunc removable = (RatFunc::q_pow(2) - 1) / (RatFunc::q() - 1);
        CHECK(eval_q1(removable) == Rational(2));
    }

    TEST_CASE("q-binomial product identity") {
        for (int n = 0; n <= 10; ++n) CHECK(verify_qbinom_identity(n));
    }
}
