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

#ifndef QBOREL_QPOLY_HPP
#define QBOREL_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qborel/rational.hpp"

namespace qborel {

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest to the highest exponent. The outermost
/// coefficients are never zero; the zero polynomial has no coefficients.
class QPolynomial {
   public:
    QPolynomial() = default;
    QPolynomial(const Rational& c) { if (!c.is_zero()) { coeffs_.push_back(c); } }
    template <std::integral I>
    QPolynomial(I c) : QPolynomial(Rational(c)) {}

    static QPolynomial monomial(const Rational& c, int exponent);
    static QPolynomial q() { return monomial(1, 1); }
    /// Builds from coefficients of q^low, q^(low+1), ...
    static QPolynomial from_coefficients(int low, std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
    int low_degree() const { return low_; }
    int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t term_count() const;
    Rational coeff(int exponent) const;
    const Rational& leading_coeff() const { return coeffs_.back(); }
    const Rational& trailing_coeff() const { return coeffs_.front(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Multiplies by q^k.
    QPolynomial shifted(int k) const;
    QPolynomial scaled(const Rational& c) const;
    /// Substitutes q -> q^k for k >= 1.
    QPolynomial substitute_power(int k) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Value at a rational point. Requires x != 0 if negative exponents occur.
    Rational evaluate(const Rational& x) const;

    /// Canonical text form, ascending exponents: "1 + q + q^2", "q^-1", "-1/2*q".
    std::string to_string() const;

   private:
    void trim();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Division with remainder of ordinary polynomials (both must have
/// low_degree() >= 0 and b non-zero).
std::pair<QPolynomial, QPolynomial> divide(const QPolynomial& a, const QPolynomial& b);

/// Monic gcd of a and b regarded as Laurent polynomials: the result has
/// low_degree() == 0 and leading coefficient 1 (powers of q are units).
QPolynomial laurent_gcd(const QPolynomial& a, const QPolynomial& b);

}  // namespace qborel

#endif  // QBOREL_QPOLY_HPP
