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

#ifndef QBOREL_RATFUNC_HPP
#define QBOREL_RATFUNC_HPP

#include <ostream>
#include <string>

#include "qborel/qpoly.hpp"

namespace qborel {

/// Element of Q(q), the field of rational functions in q.
///
/// Canonical form: the denominator is an ordinary monic polynomial with
/// non-zero constant term, coprime to the numerator. Any power of q is moved
/// into the numerator, which may therefore be a Laurent polynomial. Equality
/// is structural.
class RatFunc {
   public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    template <std::integral I>
    RatFunc(I c) : RatFunc(Rational(c)) {}
    RatFunc(QPolynomial p) : num_(std::move(p)), den_(1) {}
    RatFunc(QPolynomial num, QPolynomial den);

    static RatFunc q() { return RatFunc(QPolynomial::q()); }
    static RatFunc q_pow(int k) { return RatFunc(QPolynomial::monomial(1, k)); }

    const QPolynomial& numerator() const { return num_; }
    const QPolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// True for a rational constant (no q dependence).
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    /// The constant value; only meaningful when is_constant().
    Rational constant_value() const { return num_.coeff(0); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    /// Value at q = x. Throws EvaluationPole if the reduced denominator
    /// vanishes there.
    Rational evaluate(const Rational& x) const;

    /// "1 + q + q^2" for polynomials, "(num)/(den)" otherwise.
    std::string to_string() const;

   private:
    void normalize();

    QPolynomial num_;
    QPolynomial den_{1};
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace qborel

#endif  // QBOREL_RATFUNC_HPP
