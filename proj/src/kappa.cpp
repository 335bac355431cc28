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

#include "qborel/kappa.hpp"

#include <algorithm>
#include <functional>

namespace qborel {

SqrtPiScalar::SqrtPiScalar(Rational coeff, int power) : coeff_(std::move(coeff)), power_(power) {
    if (power < 0) throw DomainError("negative power of sqrt(pi)");
    if (coeff_.is_zero()) power_ = 0;
}

SqrtPiScalar& SqrtPiScalar::operator+=(const SqrtPiScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (power_ != o.power_) throw DomainError("sum of different powers of sqrt(pi)");
    coeff_ += o.coeff_;
    if (coeff_.is_zero()) power_ = 0;
    return *this;
}

SqrtPiScalar& SqrtPiScalar::operator-=(const SqrtPiScalar& o) {
    return *this += SqrtPiScalar(-o.coeff_, o.power_);
}

SqrtPiScalar& SqrtPiScalar::operator*=(const Rational& r) {
    coeff_ *= r;
    if (coeff_.is_zero()) power_ = 0;
    return *this;
}

SqrtPiScalar operator*(const SqrtPiScalar& a, const SqrtPiScalar& b) {
    return SqrtPiScalar(a.coeff_ * b.coeff_, a.power_ + b.power_);
}

std::string SqrtPiScalar::to_string() const {
    if (is_zero()) return "0";
    if (power_ == 0) return coeff_.to_string();
    std::string root = power_ == 1 ? "sqrt(pi)" : "sqrt(pi)^" + std::to_string(power_);
    if (coeff_ == Rational(1)) return root;
    if (coeff_ == Rational(-1)) return "-" + root;
    return coeff_.to_string() + " * " + root;
}

std::string show_sqrt_pi(const SqrtPiScalar& s) {
    return s.to_string();
}

GaussianPoly::GaussianPoly(int n_, CommPoly<Rational> p) : n(n_), poly(std::move(p)) {
    if (!(poly.algebra() == letters(n))) throw AlgebraMismatch("Gaussian polynomial in the wrong letters");
    if (n == 1)
        for (const auto& [m, c] : poly.terms())
            if (m.xdeg() != 0) throw DomainError("a one-variable Gaussian polynomial uses x0 only");
}

AlgebraId GaussianPoly::letters(int n) {
    if (n < 1) throw InvalidDescriptor("a Gaussian polynomial needs at least one variable");
    return AlgebraId::un(std::max(n, 2));
}

GaussianPoly GaussianPoly::monomial(int n, const Monomial& m, const Rational& c) {
    return GaussianPoly(n, CommPoly<Rational>::term(letters(n), m, c));
}

namespace {

/// int x^k exp(-x^2) dx / sqrt(pi) = (k-1)!! / 2^{k/2} for even k, 0 for odd k.
Rational moment(int k) {
    if (k % 2) return Rational(0);
    Rational r(1);
    for (int j = k - 1; j > 0; j -= 2) r *= Rational(j, 2);
    return r;
}

/// Product of the moments of the X-type letters.
Rational x_moments(const Monomial& m, int n) {
    Rational r(1);
    for (int i = 0; i < n - 1; ++i) r *= moment(m.x[static_cast<std::size_t>(i)]);
    return r;
}

}  // namespace

Rational shifted_moment(int k, int a) {
    if (k < 0) throw DomainError("negative moment");
    Rational r(0);
    const Rational minus_a(-a);
    for (int j = 0; j <= k; ++j) r += binomial(k, j) * minus_a.pow(k - j) * moment(j);
    return r;
}

SqrtPiScalar gaussian_integral(const GaussianPoly& f) {
    Rational total(0);
    for (const auto& [m, c] : f.poly.terms()) total += c * x_moments(m, f.n) * moment(m.col);
    return SqrtPiScalar(total, f.n);
}

SqrtPiScalar shifted_gaussian_integral(const GaussianPoly& f, int a) {
    Rational total(0);
    for (const auto& [m, c] : f.poly.terms()) {
        const Rational xs = x_moments(m, f.n);
        if (xs.is_zero()) continue;
        const Rational shift(a);
        for (int j = 0; j <= m.col; ++j) total += c * xs * binomial(m.col, j) * shift.pow(m.col - j) * shifted_moment(j, a);
    }
    return SqrtPiScalar(total, f.n);
}

GaussianPoly weighted_derivative(const GaussianPoly& f, int mu) {
    if (mu < 0 || mu >= f.n) throw IndexOutOfRange("derivative index out of range");
    const AlgebraId id = f.poly.algebra();
    CommPoly<Rational> x(id);
    if (mu == 0) {
        x = CommPoly<Rational>::xg(id, 0, 1);
        return GaussianPoly(f.n, ops::col_derivative(f.poly) - x * f.poly * Rational(2));
    }
    Monomial m;
    m.x[static_cast<std::size_t>(mu - 1)] = 1;
    x = CommPoly<Rational>::term(id, m);
    return GaussianPoly(f.n, ops::x_derivative(f.poly, mu - 1) - x * f.poly * Rational(2));
}

Report invariance_check(const GaussianPoly& f) {
    Report rep;
    rep.suite = "invariance";
    rep.anchor = "translation invariance of the integral on Gaussian-weighted polynomials";
    const std::string input = render(f.poly);
    RelationResult deriv{"derivative", "int d(f w)/dx_mu = 0 for every mu", 0, {}, {}};
    for (int mu = 0; mu < f.n; ++mu)
        deriv.expect(input + ", mu=" + std::to_string(mu), SqrtPiScalar(), gaussian_integral(weighted_derivative(f, mu)),
                     &show_sqrt_pi);
    rep.relations.push_back(std::move(deriv));
    RelationResult shift{"translate-x0", "int T_{1,x0}(f w) = int f w", 0, {}, {}};
    shift.expect(input, gaussian_integral(f), shifted_gaussian_integral(f, 1), &show_sqrt_pi);
    rep.relations.push_back(std::move(shift));
    RelationResult diff{"difference-x0", "int (T_{1,x0} - 1)(f w) = 0", 0, {}, {}};
    diff.expect(input, SqrtPiScalar(), shifted_gaussian_integral(f, 1) - gaussian_integral(f), &show_sqrt_pi);
    rep.relations.push_back(std::move(diff));
    return rep;
}

namespace {

/// Every monomial of U(b_{n+}) whose exponents are all <= max_exp.
std::vector<Monomial> box_monomials(int n, int max_exp) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(int)> rec = [&](int letter) {
        if (letter == n) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= max_exp; ++e) {
            if (letter == n - 1) m.col = e;
            else m.x[static_cast<std::size_t>(letter)] = static_cast<std::int16_t>(e);
            rec(letter + 1);
        }
        if (letter == n - 1) m.col = 0;
        else m.x[static_cast<std::size_t>(letter)] = 0;
    };
    rec(0);
    return out;
}

std::string show_element(const Element<Rational>& e) {
    return render(e);
}

void append_merged(Report& into, const Report& r) {
    for (const auto& rel : r.relations) {
        auto it = std::find_if(into.relations.begin(), into.relations.end(), [&](const auto& o) { return o.id == rel.id; });
        if (it == into.relations.end()) {
            into.relations.push_back(rel);
            continue;
        }
        it->checked += rel.checked;
        it->failures.insert(it->failures.end(), rel.failures.begin(), rel.failures.end());
    }
}

}  // namespace

Report invariance_suite(int n, int max_exp) {
    if (n < 2) throw InvalidDescriptor("kappa(n) needs n >= 2");
    Report rep;
    rep.suite = "invariance n=" + std::to_string(n);
    rep.anchor = "translation invariance of the integral on Gaussian-weighted polynomials";
    for (const Monomial& m : box_monomials(n, max_exp)) append_merged(rep, invariance_check(GaussianPoly::monomial(n, m)));
    return rep;
}

GammaElement<Rational> d_kappa(const CommPoly<Rational>& f, const Calculus<Rational>& c) {
    if (c.kind != CalculusKind::Kappa) throw InvalidDescriptor("d_kappa needs a kappa calculus");
    return d_from_closed_forms(c, normal_order(f, c.ordering));
}

GammaElement<Rational> d_kappa(const CommPoly<Rational>& f, int n) {
    return d_kappa(f, build_kappa_calculus(n));
}

Report kappa_pairing_duality_check(int n, int D) {
    const Calculus<Rational> c = build_kappa_calculus(n, {-1, std::max(8, D + 2)});
    const AlgebraId id = c.base;
    const AlgebraId cn = c.tangent_side;
    Report rep;
    rep.suite = "kappa(" + std::to_string(n) + ") pairing";
    rep.anchor = "coregular actions of the translation generators";
    RelationResult pi{"p_i-action", "p_i |> :f: = :df/dx_i:", 0, {}, {}};
    RelationResult g{"g-action", "g |> :f: = :T_{1,x0} f:", 0, {}, {}};
    RelationResult lg{"log-g-action", "log g |> :f: = :df/dx0:", 0, {}, {}};
    RelationResult dc{"d-components", "d:f: = sum_mu dx_mu (p_mu |> :f:)", 0, {}, {}};
    const Element<Rational> log_g = c.listed_tangent[0];
    for (const Monomial& m : box_monomials(n, D)) {
        const Element<Rational> a = Element<Rational>::term(id, m);
        const CommPoly<Rational> f = symbol(a, c.ordering);
        const std::string in = render(a);
        const GammaElement<Rational> da = d(c, a);
        for (int i = 1; i < n; ++i) {
            const Element<Rational> act = coregular_action(gen_x<Rational>(cn, i - 1), a);
            pi.expect(in + ", i=" + std::to_string(i), normal_order(ops::x_derivative(f, i - 1), c.ordering), act,
                      &show_element);
            dc.expect(in + ", mu=" + std::to_string(i), act, da[i], &show_element);
        }
        g.expect(in, normal_order(ops::shift_col(f, 1), c.ordering), coregular_action(gen_col<Rational>(cn, 1), a),
                 &show_element);
        const Element<Rational> act0 = coregular_action(log_g, a);
        lg.expect(in, normal_order(ops::col_derivative(f), c.ordering), act0, &show_element);
        dc.expect(in + ", mu=0", act0, da[0], &show_element);
    }
    rep.relations = {pi, g, lg, dc};
    return rep;
}

Report kappa_pullback_check(int n, int D) {
    const Calculus<Rational> nat = build_nat_bp();
    const Calculus<Rational> kap = build_kappa_calculus(n);
    const AlgebraId u = nat.base, un = kap.base;
    Report rep;
    rep.suite = "kappa(" + std::to_string(n) + ") pullback";
    rep.anchor = "x0 -> H, x_i -> X";
    RelationResult pre{"preimage", "iota^{-1}(M) is the ideal of nat_bp", 0, {}, {}};
    RelationResult dd{"d-compatible", "d(iota a) = iota_* d(a)", 0, {}, {}};
    for (int i = 1; i < n; ++i) {
        auto iota = [&](const Element<Rational>& a) {
            Element<Rational> out(un);
            for (const auto& [m, coef] : a.terms()) {
                Monomial r;
                r.x[static_cast<std::size_t>(i - 1)] = m.x[0];
                r.col = m.col;
                out.add(r, coef);
            }
            return out;
        };
        const std::string tag = "i=" + std::to_string(i);
        for (const auto& b : nat.M->basis()) {
            const Vector<Rational> v = kap.reducer.coords(iota(b));
            bool zero = true;
            for (int j = 0; j < v.size(); ++j) zero = zero && v[j].is_zero();
            pre.expect_true(tag + ", " + render(b) + " maps into M", zero);
        }
        RowEchelon<Rational> images(kap.dim());
        for (const auto& rep_j : nat.eta_reps) images.insert(kap.reducer.coords(iota(rep_j)));
        pre.expect_true(tag + ", quotient map injective", images.rank() == nat.dim(), "rank " + std::to_string(images.rank()));
        for (const Monomial& m : monomials_up_to(u, D)) {
            const Element<Rational> a = Element<Rational>::term(u, m);
            const GammaElement<Rational> dn = d(nat, a);
            GammaElement<Rational> pushed = zero_form(kap);
            pushed[0] = iota(dn[0]);
            pushed[i] = iota(dn[1]);
            dd.expect(tag + ", " + render(a), pushed, d(kap, iota(a)), &render_gamma<Rational>);
        }
    }
    rep.relations = {pre, dd};
    return rep;
}

}  // namespace qborel
