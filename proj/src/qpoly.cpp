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

#include "qborel/qpoly.hpp"

#include <algorithm>

#include "qborel/errors.hpp"

namespace qborel {

QPolynomial QPolynomial::monomial(const Rational& c, int exponent) {
    QPolynomial p;
    if (!c.is_zero()) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

QPolynomial QPolynomial::from_coefficients(int low, std::vector<Rational> coeffs) {
    QPolynomial p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void QPolynomial::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t QPolynomial::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

Rational QPolynomial::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

QPolynomial QPolynomial::shifted(int k) const {
    QPolynomial r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    QPolynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QPolynomial QPolynomial::substitute_power(int k) const {
    if (k < 1) throw DomainError("substitute_power needs k >= 1");
    if (is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>((high_degree() - low_) * k + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return from_coefficients(low_ * k, std::move(c));
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high_degree(), o.high_degree());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) { return *this += -o; }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial::from_coefficients(a.low_ + b.low_, std::move(c));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

Rational QPolynomial::evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (x.is_zero() && low_ < 0) throw EvaluationPole("negative power of q evaluated at 0");
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc * x.pow(low_);
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        int e = low_ + static_cast<int>(i);
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string var;
        if (e == 1) var = "q";
        else if (e != 0) var = "q^" + std::to_string(e);
        if (var.empty()) out += mag.to_string();
        else if (mag.is_one()) out += var;
        else out += mag.to_string() + "*" + var;
    }
    return out;
}

std::pair<QPolynomial, QPolynomial> divide(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if ((!a.is_zero() && a.low_degree() < 0) || b.low_degree() < 0)
        throw DomainError("divide() expects ordinary polynomials");
    int db = b.high_degree();
    QPolynomial rem = a;
    if (rem.is_zero() || rem.high_degree() < db) return {QPolynomial(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.high_degree() - db + 1));
    const Rational& lb = b.leading_coeff();
    while (!rem.is_zero() && rem.high_degree() >= db) {
        int shift = rem.high_degree() - db;
        Rational f = rem.leading_coeff() / lb;
        quot[static_cast<std::size_t>(shift)] = f;
        rem -= b.shifted(shift).scaled(f);
    }
    return {QPolynomial::from_coefficients(0, std::move(quot)), rem};
}

QPolynomial laurent_gcd(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial x = a.is_zero() ? a : a.shifted(-a.low_degree());
    QPolynomial y = b.is_zero() ? b : b.shifted(-b.low_degree());
    while (!y.is_zero()) {
        QPolynomial r = divide(x, y).second;
        if (!r.is_zero()) r = r.shifted(-r.low_degree());
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(Rational(1) / x.leading_coeff());
}

}  // namespace qborel
