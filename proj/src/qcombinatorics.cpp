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

#include "qborel/qcombinatorics.hpp"

#include <vector>

#include "qborel/errors.hpp"

namespace qborel {

namespace {

constexpr int kTableSize = 48;

QPolynomial qint_poly(int n) {
    return QPolynomial::from_coefficients(0, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

// Pascal rows [n choose m]_q for n < kTableSize, built once and read-only afterwards.
const std::vector<std::vector<RatFunc>>& qbinom_table() {
    static const std::vector<std::vector<RatFunc>> table = [] {
        std::vector<std::vector<QPolynomial>> rows(kTableSize);
        for (int n = 0; n < kTableSize; ++n) {
            rows[n].resize(static_cast<std::size_t>(n + 1));
            rows[n][0] = QPolynomial(1);
            rows[n][n] = QPolynomial(1);
            for (int m = 1; m < n; ++m) rows[n][m] = rows[n - 1][m - 1] + rows[n - 1][m].shifted(m);
        }
        std::vector<std::vector<RatFunc>> out(kTableSize);
        for (int n = 0; n < kTableSize; ++n)
            for (auto& p : rows[n]) out[n].emplace_back(std::move(p));
        return out;
    }();
    return table;
}

}  // namespace

RatFunc qint(int n) {
    if (n < 0) throw DomainError("qint needs n >= 0");
    return RatFunc(qint_poly(n));
}

RatFunc qfact(int n) {
    if (n < 0) throw DomainError("qfact needs n >= 0");
    QPolynomial acc(1);
    for (int k = 2; k <= n; ++k) acc *= qint_poly(k);
    return RatFunc(acc);
}

RatFunc qbinom(int n, int m) {
    if (n < 0 || m < 0 || m > n) throw DomainError("qbinom needs 0 <= m <= n");
    if (n < kTableSize) return qbinom_table()[n][m];
    QPolynomial num(1), den(1);
    for (int k = 0; k < m; ++k) {
        num *= qint_poly(n - k);
        den *= qint_poly(k + 1);
    }
    return RatFunc(divide(num, den).first);
}

Rational eval_q1(const RatFunc& r) {
    try {
        return r.evaluate(Rational(1));
    } catch (const EvaluationPole&) {
        throw EvaluationPole("rational function " + r.to_string() + " has a pole at q = 1");
    }
}

bool verify_qbinom_identity(int n) {
    if (n < 0) throw DomainError("verify_qbinom_identity needs n >= 0");
    std::vector<RatFunc> product{RatFunc(1)};
    for (int j = 1; j <= n; ++j) {
        std::vector<RatFunc> next(product.size() + 1);
        RatFunc qj = RatFunc::q_pow(j);
        for (std::size_t i = 0; i < product.size(); ++i) {
            next[i] += product[i];
            next[i + 1] += product[i] * qj;
        }
        product = std::move(next);
    }
    for (int i = 0; i <= n; ++i) {
        RatFunc lhs = qbinom(n, i) * RatFunc::q_pow(i * (i + 1) / 2);
        if (!(lhs == product[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

}  // namespace qborel
