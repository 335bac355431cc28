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

#include "qborel/ratfunc.hpp"

#include "qborel/errors.hpp"

namespace qborel {

RatFunc::RatFunc(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPolynomial(1);
        return;
    }
    if (den_.is_one()) return;
    int shift = den_.low_degree();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    if (!den_.is_monomial()) {
        QPolynomial nshift = num_.shifted(-num_.low_degree());
        QPolynomial g = laurent_gcd(nshift, den_);
        if (!g.is_one()) {
            int nlow = num_.low_degree();
            num_ = divide(nshift, g).first.shifted(nlow);
            den_ = divide(den_, g).first;
        }
    }
    Rational lead = den_.leading_coeff();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = QPolynomial(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    num_ *= o.num_;
    if (o.den_.is_one() && den_.is_one()) return *this;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("division by zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc result(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Rational RatFunc::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero()) throw EvaluationPole("pole at q = " + x.to_string());
    if (x.is_zero() && !num_.is_zero() && num_.low_degree() < 0)
        throw EvaluationPole("pole at q = 0");
    return num_.evaluate(x) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qborel
