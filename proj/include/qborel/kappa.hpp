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

#ifndef QBOREL_KAPPA_HPP
#define QBOREL_KAPPA_HPP

#include <string>

#include "qborel/calculus.hpp"

namespace qborel {

/// coeff * sqrt(pi)^power, exact.
class SqrtPiScalar {
   public:
    SqrtPiScalar() = default;
    SqrtPiScalar(Rational coeff, int power);

    const Rational& coeff() const { return coeff_; }
    int power() const { return power_; }
    bool is_zero() const { return coeff_.is_zero(); }

    /// Sums need equal powers of sqrt(pi) unless one side is zero.
    SqrtPiScalar& operator+=(const SqrtPiScalar& o);
    SqrtPiScalar& operator-=(const SqrtPiScalar& o);
    SqrtPiScalar& operator*=(const Rational& r);
    friend SqrtPiScalar operator+(SqrtPiScalar a, const SqrtPiScalar& b) { return a += b; }
    friend SqrtPiScalar operator-(SqrtPiScalar a, const SqrtPiScalar& b) { return a -= b; }
    friend SqrtPiScalar operator*(SqrtPiScalar a, const Rational& r) { return a *= r; }
    friend SqrtPiScalar operator*(const SqrtPiScalar& a, const SqrtPiScalar& b);
    friend bool operator==(const SqrtPiScalar&, const SqrtPiScalar&) = default;

    std::string to_string() const;

   private:
    Rational coeff_;
    int power_ = 0;
};

std::string show_sqrt_pi(const SqrtPiScalar& s);

/// poly * exp(-(x_0^2 + ... + x_{n-1}^2)) with poly a commuting polynomial
/// in the letters of U(b_{n+}): x_1..x_{n-1} and the column letter x_0.
/// For n = 1 the letters of U(b_{2+}) are used with x_0 alone.
struct GaussianPoly {
    int n = 2;
    CommPoly<Rational> poly;

    GaussianPoly(int n_, CommPoly<Rational> p);
    static AlgebraId letters(int n);
    static GaussianPoly monomial(int n, const Monomial& m, const Rational& c = Rational(1));
};

/// int_R x^k exp(-(x + a)^2) dx, as a rational multiple of sqrt(pi).
Rational shifted_moment(int k, int a);

/// The integral over R^n, one sqrt(pi) per variable.
SqrtPiScalar gaussian_integral(const GaussianPoly& f);

/// The integral of poly(x_0 + a, x_1, ...) exp(-(x_0 + a)^2 - ...), computed
/// through the shifted moments without substituting back.
SqrtPiScalar shifted_gaussian_integral(const GaussianPoly& f, int a);

/// d(poly * weight)/dx_mu divided by the weight, as a Gaussian polynomial.
GaussianPoly weighted_derivative(const GaussianPoly& f, int mu);

/// Integrals of the derivatives and of the unit x_0 translate.
Report invariance_check(const GaussianPoly& f);
/// invariance_check over every monomial with exponents <= max_exp.
Report invariance_suite(int n, int max_exp);

/// d:f: = sum_mu dx_mu :d f/d x_mu: in the calculus of kappa(n).
GammaElement<Rational> d_kappa(const CommPoly<Rational>& f, const Calculus<Rational>& c);
GammaElement<Rational> d_kappa(const CommPoly<Rational>& f, int n);

/// Coregular actions of p_i, g and log g on monomials with exponents <= D
/// against the closed forms and against the components of d.
Report kappa_pairing_duality_check(int n, int D);

/// Pull back along x_0 -> H, x_i -> X for each i: the preimage of M is the
/// ideal of nat_bp and d is carried to d.
Report kappa_pullback_check(int n, int D = 4);

}  // namespace qborel

#endif  // QBOREL_KAPPA_HPP
