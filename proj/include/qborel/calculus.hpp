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

#ifndef QBOREL_CALCULUS_HPP
#define QBOREL_CALCULUS_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qborel/derivations.hpp"
#include "qborel/report.hpp"
#include "qborel/submod.hpp"
#include "qborel/upoly.hpp"

namespace qborel {

/// Writes classes of ker(eps)/M in a chosen basis. Each X-graded block of M
/// is an ideal of the column ring, generated by one polynomial G_b, so a
/// class is determined by the remainders of its block components mod G_b.
template <class S>
class Reducer {
   public:
    Reducer() = default;

    Reducer(const GradedSubspace<S>& m, std::vector<Element<S>> reps)
        : id_(m.algebra()), trunc_(m.truncation()), reps_(std::move(reps)) {
        if (m.layout() != Layout::XGraded) throw DomainError("reduction needs an X-graded subspace");
        for (const Monomial& key : x_vectors(id_, trunc_.max_xdeg)) {
            UPoly<S> g;
            auto it = m.blocks().find(key);
            if (it != m.blocks().end())
                for (const auto& row : it->second.rows()) {
                    std::vector<S> c(row.data(), row.data() + row.size());
                    UPoly<S> p(trunc_.lo, std::move(c));
                    if (id_.laurent_column()) p = p.shifted(-p.low());
                    g = g.is_zero() ? p.monic() : upoly_gcd(g, p);
                }
            gens_[key] = g;
        }
        top_full_ = true;
        for (const auto& [key, g] : gens_)
            if (key.xdeg() == trunc_.max_xdeg && !(g.degree() == 0 && g.low() == 0)) top_full_ = false;
        for (const auto& [key, g] : gens_) {
            if (g.is_zero()) continue;
            for (int j = 0; j < g.degree(); ++j) index_[{key, j}] = width_++;
        }
        dim_ = static_cast<int>(reps_.size());
        aug_ = RowEchelon<S>(width_ + dim_);
        for (int i = 0; i < dim_; ++i) {
            Vector<S> v = Vector<S>::Constant(width_ + dim_, S(0));
            v.head(width_) = remainder(reps_[static_cast<std::size_t>(i)]);
            v[width_ + i] = S(1);
            aug_.insert(std::move(v));
        }
        for (int p : aug_.pivots())
            if (p >= width_) throw ReductionFailure("representatives are linearly dependent modulo M");
    }

    int dim() const { return dim_; }
    const AlgebraId& algebra() const { return id_; }
    const std::vector<Element<S>>& reps() const { return reps_; }
    const std::map<Monomial, UPoly<S>>& block_generators() const { return gens_; }

    /// Remainders of every block component, flattened.
    Vector<S> remainder(const Element<S>& v) const {
        Vector<S> out = Vector<S>::Constant(width_, S(0));
        std::map<Monomial, std::map<int, S>> parts;
        for (const auto& [m, c] : v.terms()) {
            Monomial key = m;
            key.col = 0;
            parts[key][m.col] += c;
        }
        for (const auto& [key, cols] : parts) {
            if (key.xdeg() > trunc_.max_xdeg) {
                if (top_full_) continue;
                throw ReductionFailure("component beyond X-degree " + std::to_string(trunc_.max_xdeg) +
                                       " where M is not known to be everything");
            }
            const UPoly<S>& g = gens_.at(key);
            if (g.is_zero()) throw ReductionFailure("component in a block where M is empty");
            const int lo = cols.begin()->first, hi = cols.rbegin()->first;
            std::vector<S> c(static_cast<std::size_t>(hi - lo + 1), S(0));
            for (const auto& [e, s] : cols) c[static_cast<std::size_t>(e - lo)] = s;
            UPoly<S> r = UPoly<S>(lo, std::move(c)).mod(g);
            if (r.is_zero()) continue;
            for (int j = r.low(); j <= r.high(); ++j) out[index_.at({key, j})] += r.coeff(j);
        }
        return out;
    }

    /// Coordinates of the class of v (an element of ker(eps)) in the basis
    /// given by the representatives.
    Vector<S> coords(const Element<S>& v) const {
        Vector<S> w = Vector<S>::Constant(width_ + dim_, S(0));
        w.head(width_) = remainder(v);
        aug_.reduce(w);
        for (int j = 0; j < width_; ++j)
            if (!w[j].is_zero()) throw ReductionFailure("class of " + render(v) + " is outside the span of the basis");
        return -w.tail(dim_);
    }

    /// Coordinates of m - eps(m), cached.
    const Vector<S>& monomial_class(const Monomial& m) const {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(m, coords(project_ker_counit(Element<S>::term(id_, m)))).first->second;
    }

    /// A monomial basis of ker(eps)/M read off the block generators.
    std::vector<Element<S>> standard_basis() const {
        std::vector<Element<S>> out;
        for (const auto& [key, g] : gens_) {
            if (g.is_zero()) throw ReductionFailure("quotient is infinite-dimensional in this truncation");
            for (int j = 0; j < g.degree(); ++j) {
                Monomial m = key;
                m.col = j;
                Element<S> e = project_ker_counit(Element<S>::term(id_, m));
                if (!e.is_zero()) out.push_back(e);
            }
        }
        return out;
    }

   private:
    AlgebraId id_;
    Truncation trunc_;
    std::vector<Element<S>> reps_;
    std::map<Monomial, UPoly<S>> gens_;
    bool top_full_ = false;
    std::map<std::pair<Monomial, int>, int> index_;
    int width_ = 0;
    int dim_ = 0;
    RowEchelon<S> aug_;
    mutable std::map<Monomial, Vector<S>> cache_;
};

enum class CalculusKind { QN, QSet, ClassicalCBp, DualClassical, NatBp, Kappa };

struct CalculusOptions {
    /// Index of an eta representative to scale by 2 (negative control).
    int corrupt_eta = -1;
    /// Order at which log g is truncated for tangent vectors that need it.
    int log_order = 8;
};

/// A finite-dimensional calculus ker(eps)/M (x) A with a basis eta_i of
/// ker(eps)/M and the dual basis of the tangent space.
template <class S>
struct Calculus {
    CalculusKind kind = CalculusKind::QN;
    int n = 2;
    std::set<int> set;
    std::string name;
    AlgebraId base;
    AlgebraId tangent_side;
    /// Normal ordering used by the closed-form derivations.
    Ordering ordering = Ordering::Storage;
    std::vector<Element<S>> eta_reps;
    /// Tangent vectors as listed; tangent_basis is the exact dual basis.
    std::vector<Element<S>> listed_tangent;
    std::vector<Element<S>> tangent_basis;
    /// gram(i, j) = <listed_tangent[i], eta_reps[j]>.
    Matrix<S> gram;
    bool listed_is_dual = true;
    std::shared_ptr<const GradedSubspace<S>> M;
    Reducer<S> reducer;

    int dim() const { return static_cast<int>(eta_reps.size()); }
};

/// Inverse of a square matrix by Gauss-Jordan elimination, if invertible.
template <class S>
std::optional<Matrix<S>> exact_inverse(const Matrix<S>& a) {
    const int d = static_cast<int>(a.rows());
    RowEchelon<S> r(2 * d);
    for (int i = 0; i < d; ++i) {
        Vector<S> v = Vector<S>::Constant(2 * d, S(0));
        for (int j = 0; j < d; ++j) v[j] = a(i, j);
        v[d + i] = S(1);
        r.insert(std::move(v));
    }
    if (r.rank() < d || r.pivots()[static_cast<std::size_t>(d - 1)] >= d) return std::nullopt;
    Matrix<S> inv(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inv(i, j) = r.rows()[static_cast<std::size_t>(i)][d + j];
    return inv;
}

template <class S>
bool is_identity(const Matrix<S>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == S(i == j ? 1 : 0))) return false;
    return true;
}

/// Closes M, builds the reducer, and replaces the listed tangent vectors by
/// the exact dual basis of the eta representatives.
template <class S>
void finish_calculus(Calculus<S>& c, const std::vector<Element<S>>& m_gens, OperatorFamily family, const Truncation& t,
                     const CalculusOptions& opt) {
    c.M = std::make_shared<const GradedSubspace<S>>(closure(m_gens, family, c.base, t));
    if (opt.corrupt_eta >= 0) {
        if (opt.corrupt_eta >= c.dim()) throw IndexOutOfRange("corrupted eta index out of range");
        c.eta_reps[static_cast<std::size_t>(opt.corrupt_eta)] *= S(2);
    }
    c.reducer = Reducer<S>(*c.M, c.eta_reps);
    const int d = c.dim();
    if (static_cast<int>(c.listed_tangent.size()) != d) throw InvalidDescriptor("tangent basis and eta basis differ in size");
    c.gram = Matrix<S>(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            c.gram(i, j) = evaluate(c.listed_tangent[static_cast<std::size_t>(i)], c.eta_reps[static_cast<std::size_t>(j)]);
    c.listed_is_dual = is_identity(c.gram);
    auto inv = exact_inverse(c.gram);
    if (!inv) throw InvalidDescriptor("pairing between tangent vectors and eta basis is degenerate");
    c.tangent_basis.clear();
    for (int i = 0; i < d; ++i) {
        Element<S> phi(c.tangent_side);
        for (int k = 0; k < d; ++k) phi += c.listed_tangent[static_cast<std::size_t>(k)] * (*inv)(i, k);
        c.tangent_basis.push_back(phi);
    }
}

// ---------------------------------------------------------------------------
// One-forms

/// sum_i eta_i (x) a_i in ker(eps)/M (x) A.
template <class S>
class GammaElement {
   public:
    GammaElement() = default;
    GammaElement(AlgebraId id, int dim) : id_(id), comps_(static_cast<std::size_t>(dim), Element<S>(id)) {}

    static GammaElement eta(AlgebraId id, int dim, int i, const Element<S>& a) {
        GammaElement g(id, dim);
        g[i] = a;
        return g;
    }
    static GammaElement eta(AlgebraId id, int dim, int i) { return eta(id, dim, i, Element<S>::constant(id, S(1))); }

    int dim() const { return static_cast<int>(comps_.size()); }
    const AlgebraId& algebra() const { return id_; }
    const Element<S>& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    Element<S>& operator[](int i) { return comps_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    GammaElement& operator+=(const GammaElement& o) {
        require_same(o);
        for (int i = 0; i < dim(); ++i) (*this)[i] += o[i];
        return *this;
    }
    GammaElement& operator-=(const GammaElement& o) {
        require_same(o);
        for (int i = 0; i < dim(); ++i) (*this)[i] -= o[i];
        return *this;
    }
    GammaElement& operator*=(const S& s) {
        for (auto& c : comps_) c *= s;
        return *this;
    }
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(GammaElement a, const S& s) { return a *= s; }
    friend GammaElement operator*(const S& s, GammaElement a) { return a *= s; }
    /// Right module structure: (eta_i (x) b) a = eta_i (x) b a.
    friend GammaElement operator*(const GammaElement& g, const Element<S>& a) {
        GammaElement r(g.id_, g.dim());
        for (int i = 0; i < g.dim(); ++i) r[i] = g[i] * a;
        return r;
    }
    friend bool operator==(const GammaElement& a, const GammaElement& b) {
        return a.id_ == b.id_ && a.comps_ == b.comps_;
    }

    std::string render() const {
        std::string out;
        for (int i = 0; i < dim(); ++i)
            for (const auto& [m, c] : (*this)[i].terms()) {
                const std::string legs = "eta" + std::to_string(i) + " (x) " + render_monomial(id_, m);
                std::string term;
                if (c == S(1)) term = legs;
                else if (c == S(-1)) term = "-" + legs;
                else {
                    const std::string cs = ScalarTraits<S>::to_string(c);
                    term = (ScalarTraits<S>::is_atomic(c) ? cs : "(" + cs + ")") + " * " + legs;
                }
                if (out.empty()) out = term;
                else if (term[0] == '-') out += " - " + term.substr(1);
                else out += " + " + term;
            }
        return out.empty() ? "0" : out;
    }

   private:
    void require_same(const GammaElement& o) const {
        if (!(id_ == o.id_) || dim() != o.dim()) throw AlgebraMismatch("one-forms of different calculi");
    }

    AlgebraId id_;
    std::vector<Element<S>> comps_;
};

template <class S>
std::string render_gamma(const GammaElement<S>& g) {
    return g.render();
}

template <class S>
GammaElement<S> zero_form(const Calculus<S>& c) {
    return GammaElement<S>(c.base, c.dim());
}

template <class S>
GammaElement<S> eta(const Calculus<S>& c, int i) {
    if (i < 0 || i >= c.dim()) throw IndexOutOfRange("eta index out of range");
    return GammaElement<S>::eta(c.base, c.dim(), i);
}

/// da = pi(a_(1) - eps(a_(1))) (x) a_(2).
template <class S>
GammaElement<S> d(const Calculus<S>& c, const Element<S>& a) {
    if (!(a.algebra() == c.base)) throw AlgebraMismatch("d of an element of " + a.algebra().name() + " in a calculus on " + c.base.name());
    GammaElement<S> out = zero_form(c);
    for (const auto& [k, coef] : coproduct(a).terms()) {
        if (k[0].is_unit()) continue;
        const Vector<S>& v = c.reducer.monomial_class(k[0]);
        for (int i = 0; i < c.dim(); ++i)
            if (!v[i].is_zero()) out[i].add(k[1], coef * v[i]);
    }
    return out;
}

/// Left module structure a (eta_i (x) b) = sum pi(a_(1) rep_i) (x) a_(2) b.
template <class S>
GammaElement<S> left_act(const Calculus<S>& c, const Element<S>& a, const GammaElement<S>& g) {
    GammaElement<S> out = zero_form(c);
    const auto delta = coproduct(a);
    for (int i = 0; i < c.dim(); ++i) {
        if (g[i].is_zero()) continue;
        for (const auto& [k, coef] : delta.terms()) {
            Vector<S> v = c.reducer.coords(Element<S>::term(c.base, k[0]) * c.eta_reps[static_cast<std::size_t>(i)]);
            Element<S> right = Element<S>::term(c.base, k[1], coef) * g[i];
            for (int j = 0; j < c.dim(); ++j)
                if (!v[j].is_zero()) out[j] += right * v[j];
        }
    }
    return out;
}

/// [a, w]_lambda = a w - lambda w a.
template <class S>
GammaElement<S> commutator(const Calculus<S>& c, const Element<S>& a, const GammaElement<S>& w, const S& lambda = S(1)) {
    return left_act(c, a, w) - (w * a) * lambda;
}

// ---------------------------------------------------------------------------
// Builders

Calculus<RatFunc> build_q(int n, const CalculusOptions& opt = {});
Calculus<RatFunc> build_q_set(const std::set<int>& set, const CalculusOptions& opt = {});
Calculus<Rational> build_classical_cbp(int n, const CalculusOptions& opt = {});
Calculus<Rational> build_dual_classical(int n, const CalculusOptions& opt = {});
Calculus<Rational> build_nat_bp(const CalculusOptions& opt = {});
Calculus<Rational> build_kappa_calculus(int n, const CalculusOptions& opt = {});

/// log g truncated after the given order: sum_{k=1}^{order} (-1)^{k+1} (g - 1)^k / k.
Element<Rational> truncated_log_g(const AlgebraId& id, int order);

// ---------------------------------------------------------------------------
// Derivations

/// The closed-form derivation partial_i applied to a commuting polynomial,
/// before normal ordering.
template <class S>
CommPoly<S> derivation_symbol(const Calculus<S>& c, int i, const CommPoly<S>& f) {
    if (i < 0 || i >= c.dim()) throw IndexOutOfRange("derivation index out of range");
    const int n = c.n;
    switch (c.kind) {
        case CalculusKind::QN:
            if constexpr (ScalarTraits<S>::has_q) {
                if (i == 0) return ops::q_scale(f, n - 1, n - 1) - f;
                return ops::q_scale(ops::divided_q_derivative_x(f, i), n - 1 - i, n - 1 - i);
            }
            break;
        case CalculusKind::ClassicalCBp:
            if (i == 0) return ops::euler(f);
            return ops::divided_x_derivative(f, i);
        case CalculusKind::DualClassical:
            if (i == 0) return ops::shift_col(f, 1 - n) - f;
            return ops::shift_col(ops::divided_x_derivative(f, i), 1 - n + i);
        case CalculusKind::NatBp:
            return i == 0 ? ops::col_derivative(f) : ops::x_derivative(f);
        case CalculusKind::Kappa:
            return i == 0 ? ops::col_derivative(f) : ops::x_derivative(f, i - 1);
        case CalculusKind::QSet: break;
    }
    throw InvalidDescriptor("no closed-form derivations for " + c.name);
}

/// :partial_i f: in the calculus's normal ordering.
template <class S>
Element<S> derivation_closed_form(const Calculus<S>& c, int i, const CommPoly<S>& f) {
    return normal_order(derivation_symbol(c, i, f), c.ordering);
}

/// sum_i eta_i (x) partial_i(a), with a read through the normal ordering.
template <class S>
GammaElement<S> d_from_closed_forms(const Calculus<S>& c, const Element<S>& a) {
    CommPoly<S> f = symbol(a, c.ordering);
    GammaElement<S> out = zero_form(c);
    for (int i = 0; i < c.dim(); ++i) out[i] = derivation_closed_form(c, i, f);
    return out;
}

// ---------------------------------------------------------------------------
// Verification

/// Relation id whose named coefficient gets doubled (negative control).
struct Tweak {
    std::string relation;
};

/// Basis monomials with xdeg + |col| <= D (col >= 0 for polynomial columns).
inline std::vector<Monomial> monomials_up_to(const AlgebraId& id, int D) {
    std::vector<Monomial> out;
    for (Monomial m : x_vectors(id, D)) {
        const int r = D - m.xdeg();
        for (int c = id.laurent_column() ? -r : 0; c <= r; ++c) {
            m.col = c;
            out.push_back(m);
        }
    }
    return out;
}

Report verify_relations(const Calculus<RatFunc>& c, int D = 4, const Tweak& tweak = {});
Report verify_relations(const Calculus<Rational>& c, int D = 4, const Tweak& tweak = {});

/// The four relations and the expansion of d in the two-dimensional case.
Report verify_two_dim_corollary(const Calculus<RatFunc>& c, int D = 5, const Tweak& tweak = {});

/// q -> 1 limit of the q(n) derivations against the classical C(B+) ones.
Report compare_q_limit(int n, int D = 5);

template <class S>
struct Decomposition {
    std::vector<Calculus<S>> summands;
    /// Row block k holds the coordinates, in summand k, of the standard
    /// basis of ker(eps)/M(I).
    Matrix<S> map;
    int total_dim = 0;
    int summand_dim_sum = 0;
    /// M(I) lies in every summand's M, so the map is well defined.
    bool well_defined = false;
    bool is_direct_sum = false;
};

/// ker(eps)/M(I) against the sum of ker(eps)/M^n, n in I, over k(q).
Decomposition<RatFunc> decompose(const std::set<int>& set);
/// The same comparison at q = 1 in C(B+).
Decomposition<Rational> decompose_classical(const std::set<int>& set);

/// Exhaustive case split over the extra generator a H + b X + c XH of a
/// codimension-2 ideal of ker(eps) in U(b+) containing H^2 and X^2.
Report nat_bp_uniqueness();

}  // namespace qborel

#endif  // QBOREL_CALCULUS_HPP
