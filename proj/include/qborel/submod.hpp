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

#ifndef QBOREL_SUBMOD_HPP
#define QBOREL_SUBMOD_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qborel/duality.hpp"

namespace qborel {

/// Finite window of the monomial basis: X-type degree at most max_xdeg and
/// column exponent in [lo, hi]. For polynomial columns (H, x0) lo is 0.
struct Truncation {
    int max_xdeg = 4;
    int lo = -4;
    int hi = 4;

    /// The default window for a set with sum s: max_xdeg = s + 2, column
    /// exponents within s + 2 of zero.
    static Truncation for_sum(const AlgebraId& id, int s) {
        return {s + 2, id.laurent_column() ? -s - 2 : 0, s + 2};
    }

    bool contains(const Monomial& m) const { return m.xdeg() <= max_xdeg && m.col >= lo && m.col <= hi; }
    template <class S>
    bool contains(const Element<S>& e) const {
        return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return contains(t.first); });
    }
    bool covers(const Truncation& o) const { return max_xdeg >= o.max_xdeg && lo <= o.lo && hi >= o.hi; }

    /// One more X-degree and two more column exponents on each open side.
    Truncation padded(const AlgebraId& id) const {
        return {max_xdeg + 1, (id.laurent_column() || lo > 0) ? lo - 2 : lo, hi + 2};
    }

    std::string to_string() const {
        return "xdeg<=" + std::to_string(max_xdeg) + ", col in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Every exponent vector of the X-type letters of id with total degree <= d.
inline std::vector<Monomial> x_vectors(const AlgebraId& id, int d) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(int, int)> rec = [&](int letter, int left) {
        if (letter == id.x_count()) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.x[static_cast<std::size_t>(letter)] = static_cast<std::int16_t>(e);
            rec(letter + 1, left - e);
        }
        m.x[static_cast<std::size_t>(letter)] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every basis monomial inside a truncation, in map order.
inline std::vector<Monomial> truncation_monomials(const AlgebraId& id, const Truncation& t) {
    std::vector<Monomial> out;
    for (Monomial m : x_vectors(id, t.max_xdeg))
        for (int c = t.lo; c <= t.hi; ++c) {
            m.col = c;
            out.push_back(m);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Row space in reduced row-echelon form. Pivots are the leftmost non-zero
/// entries, so the stored rows are a canonical basis of the span.
template <class S>
class RowEchelon {
   public:
    explicit RowEchelon(int width = 0) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vector<S>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Subtracts the span components at pivot columns; zero iff v is in the span.
    void reduce(Vector<S>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int p = pivots_[i];
            if (v[p].is_zero()) continue;
            const S c = v[p];
            for (int j = p; j < width_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
        }
    }

    bool contains(Vector<S> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }

    /// Adds v to the span; returns whether the rank grew.
    bool insert(Vector<S> v) {
        if (v.size() != width_) throw DomainError("row width mismatch");
        reduce(v);
        const int p = first_nonzero(v);
        if (p < 0) return false;
        const S inv = S(1) / v[p];
        for (int j = p; j < width_; ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        for (auto& row : rows_) {
            if (row[p].is_zero()) continue;
            const S c = row[p];
            for (int j = p; j < width_; ++j)
                if (!v[j].is_zero()) row[j] -= c * v[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    Matrix<S> matrix() const {
        Matrix<S> m(rank(), width_);
        for (int i = 0; i < rank(); ++i) m.row(i) = rows_[static_cast<std::size_t>(i)].transpose();
        return m;
    }

    friend bool operator==(const RowEchelon& a, const RowEchelon& b) {
        if (a.width_ != b.width_ || a.pivots_ != b.pivots_) return false;
        for (std::size_t i = 0; i < a.rows_.size(); ++i)
            for (int j = 0; j < a.width_; ++j)
                if (!(a.rows_[i][j] == b.rows_[i][j])) return false;
        return true;
    }

    static int first_nonzero(const Vector<S>& v) {
        for (int j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return j;
        return -1;
    }

   private:
    int width_;
    std::vector<Vector<S>> rows_;
    std::vector<int> pivots_;
};

/// How a subspace is cut into independent blocks.
enum class Layout {
    /// One block per X-type exponent vector; columns are column exponents.
    XGraded,
    /// One block per total degree xdeg + col (single X letter only).
    TotalDegree,
    /// A single block over the whole truncation.
    Ungraded
};

/// Subspace of a truncated algebra, stored blockwise in reduced echelon form.
template <class S>
class GradedSubspace {
   public:
    using Key = Monomial;

    GradedSubspace(AlgebraId id, Truncation t, Layout layout = Layout::XGraded)
        : id_(id), trunc_(t), layout_(layout) {
        if (t.lo > t.hi || t.max_xdeg < 0) throw TruncationError("empty truncation window");
        if (!id.laurent_column() && t.lo < 0) throw TruncationError(id.col_name() + " has no negative powers");
        if (layout == Layout::TotalDegree && id.x_count() != 1)
            throw DomainError("total-degree layout needs a single X letter");
        monomials_ = truncation_monomials(id, t);
        if (layout == Layout::Ungraded)
            for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = static_cast<int>(i);
    }

    const AlgebraId& algebra() const { return id_; }
    const Truncation& truncation() const { return trunc_; }
    Layout layout() const { return layout_; }
    const std::map<Key, RowEchelon<S>>& blocks() const { return blocks_; }

    Key key_of(const Monomial& m) const {
        switch (layout_) {
            case Layout::XGraded: {
                Key k = m;
                k.col = 0;
                return k;
            }
            case Layout::TotalDegree: return Monomial::xg(0, m.xdeg() + m.col);
            case Layout::Ungraded: return Key{};
        }
        return Key{};
    }
    int column_of(const Monomial& m) const {
        switch (layout_) {
            case Layout::XGraded: return m.col - trunc_.lo;
            case Layout::TotalDegree: return m.xdeg();
            case Layout::Ungraded: return index_.at(m);
        }
        return 0;
    }
    int width() const {
        switch (layout_) {
            case Layout::XGraded: return trunc_.hi - trunc_.lo + 1;
            case Layout::TotalDegree: return trunc_.max_xdeg + 1;
            case Layout::Ungraded: return static_cast<int>(monomials_.size());
        }
        return 0;
    }
    Monomial monomial_at(const Key& k, int column) const {
        switch (layout_) {
            case Layout::XGraded: {
                Monomial m = k;
                m.col = trunc_.lo + column;
                return m;
            }
            case Layout::TotalDegree: return Monomial::xg(column, k.col - column);
            case Layout::Ungraded: return monomials_[static_cast<std::size_t>(column)];
        }
        return {};
    }

    /// Splits an element into its block components.
    std::map<Key, Element<S>> components(const Element<S>& e) const {
        std::map<Key, Element<S>> out;
        for (const auto& [m, c] : e.terms()) out.try_emplace(key_of(m), Element<S>(id_)).first->second.add(m, c);
        return out;
    }
    bool is_homogeneous(const Element<S>& e) const { return components(e).size() <= 1; }

    /// Adds a homogeneous element; returns whether the dimension grew.
    bool insert(const Element<S>& e) {
        require_algebra(e);
        if (!trunc_.contains(e)) throw TruncationError("element " + render(e) + " leaves " + trunc_.to_string());
        auto parts = components(e);
        if (parts.size() > 1) throw DomainError("element " + render(e) + " is not homogeneous for this layout");
        if (parts.empty()) return false;
        const auto& [k, part] = *parts.begin();
        auto it = blocks_.try_emplace(k, RowEchelon<S>(width())).first;
        return it->second.insert(to_vector(part));
    }

    /// Inserts each block component separately.
    bool insert_components(const Element<S>& e) {
        bool grew = false;
        for (const auto& [k, part] : components(e)) grew = insert(part) || grew;
        return grew;
    }

    bool contains(const Element<S>& e) const {
        require_algebra(e);
        if (!trunc_.contains(e)) return false;
        for (const auto& [k, part] : components(e)) {
            auto it = blocks_.find(k);
            if (it == blocks_.end()) return false;
            if (!it->second.contains(to_vector(part))) return false;
        }
        return true;
    }

    int dim() const {
        int d = 0;
        for (const auto& [k, b] : blocks_) d += b.rank();
        return d;
    }
    int ambient_dim() const { return static_cast<int>(monomials_.size()); }
    int codim() const { return ambient_dim() - dim(); }

    std::vector<Element<S>> basis() const {
        std::vector<Element<S>> out;
        for (const auto& [k, b] : blocks_)
            for (const auto& row : b.rows()) out.push_back(to_element(k, row));
        return out;
    }

    Vector<S> to_vector(const Element<S>& homogeneous) const {
        Vector<S> v = Vector<S>::Constant(width(), S(0));
        for (const auto& [m, c] : homogeneous.terms()) v[column_of(m)] = c;
        return v;
    }
    Element<S> to_element(const Key& k, const Vector<S>& v) const {
        Element<S> e(id_);
        for (int j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) e.add(monomial_at(k, j), v[j]);
        return e;
    }

    /// The part of this space spanned by monomials of a smaller truncation.
    GradedSubspace restrict_to(const Truncation& t) const {
        if (!trunc_.covers(t)) throw TruncationError("restriction target is not inside " + trunc_.to_string());
        GradedSubspace out(id_, t, layout_);
        for (const auto& [k, b] : blocks_) {
            std::vector<int> outside, inside;
            for (int j = 0; j < width(); ++j) {
                Monomial m = monomial_at(k, j);
                (t.contains(m) ? inside : outside).push_back(j);
            }
            if (inside.empty()) continue;
            std::vector<int> order = outside;
            order.insert(order.end(), inside.begin(), inside.end());
            RowEchelon<S> perm(width());
            for (const auto& row : b.rows()) {
                Vector<S> v(width());
                for (int j = 0; j < width(); ++j) v[j] = row[order[static_cast<std::size_t>(j)]];
                perm.insert(std::move(v));
            }
            const int split = static_cast<int>(outside.size());
            for (int i = 0; i < perm.rank(); ++i) {
                if (perm.pivots()[static_cast<std::size_t>(i)] < split) continue;
                const auto& row = perm.rows()[static_cast<std::size_t>(i)];
                Element<S> e(id_);
                for (int j = split; j < width(); ++j)
                    if (!row[j].is_zero()) e.add(monomial_at(k, order[static_cast<std::size_t>(j)]), row[j]);
                out.insert(e);
            }
        }
        return out;
    }

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        if (!(a.id_ == b.id_) || !(a.trunc_ == b.trunc_) || a.layout_ != b.layout_) return false;
        auto nonempty = [](const GradedSubspace& s) {
            std::map<Key, const RowEchelon<S>*> r;
            for (const auto& [k, blk] : s.blocks_)
                if (blk.rank() > 0) r[k] = &blk;
            return r;
        };
        auto na = nonempty(a), nb = nonempty(b);
        if (na.size() != nb.size()) return false;
        for (const auto& [k, blk] : na) {
            auto it = nb.find(k);
            if (it == nb.end() || !(*blk == *it->second)) return false;
        }
        return true;
    }

   private:
    void require_algebra(const Element<S>& e) const {
        if (!(e.algebra() == id_)) throw AlgebraMismatch("element of " + e.algebra().name() + " in a subspace of " + id_.name());
    }

    AlgebraId id_;
    Truncation trunc_;
    Layout layout_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> index_;
    std::map<Key, RowEchelon<S>> blocks_;
};

/// Blockwise intersection by the Zassenhaus construction: the rows of
/// [A A; B 0] whose left half vanishes span the intersection.
template <class S>
GradedSubspace<S> intersect(const GradedSubspace<S>& a, const GradedSubspace<S>& b) {
    if (!(a.algebra() == b.algebra()) || !(a.truncation() == b.truncation()) || a.layout() != b.layout())
        throw TruncationError("intersection of subspaces with different algebras, truncations or layouts");
    GradedSubspace<S> out(a.algebra(), a.truncation(), a.layout());
    const int w = a.width();
    for (const auto& [k, ba] : a.blocks()) {
        auto it = b.blocks().find(k);
        if (it == b.blocks().end()) continue;
        RowEchelon<S> z(2 * w);
        for (const auto& row : ba.rows()) {
            Vector<S> v(2 * w);
            v << row, row;
            z.insert(std::move(v));
        }
        for (const auto& row : it->second.rows()) {
            Vector<S> v = Vector<S>::Constant(2 * w, S(0));
            v.head(w) = row;
            z.insert(std::move(v));
        }
        for (int i = 0; i < z.rank(); ++i) {
            if (z.pivots()[static_cast<std::size_t>(i)] < w) continue;
            out.insert(out.to_element(k, z.rows()[static_cast<std::size_t>(i)].tail(w)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closure under operator families

template <class S>
using LinearOperator = std::function<std::vector<Element<S>>(const Element<S>&)>;

enum class OperatorFamily {
    /// C_q(B+) or C(B+) as a crossed module over itself: left multiplication
    /// by X, g, g^-1 and every right leg of Ad_L.
    CrossedModule,
    /// U_q(b+) or U(b+) as a crossed module: adjoint action by the
    /// generators and every right leg of the coproduct.
    TangentCrossedModule,
    /// As TangentCrossedModule, with coproduct legs projected to ker(eps).
    TangentKerCounit,
    /// Left multiplication by every generator.
    LeftIdeal,
    /// The formal derivative in X (subcomodules of C(B+)).
    XDerivative
};

/// Whether closures in a family are automatically graded by the X-type
/// exponent vector, so an inhomogeneous generator can be split into parts.
inline bool family_is_graded(OperatorFamily f) {
    return f == OperatorFamily::CrossedModule || f == OperatorFamily::TangentCrossedModule ||
           f == OperatorFamily::TangentKerCounit;
}

template <class S>
std::vector<LinearOperator<S>> operator_family(OperatorFamily f, const AlgebraId& id) {
    std::vector<LinearOperator<S>> ops;
    auto left_mult = [&](Element<S> h) {
        ops.push_back([h](const Element<S>& v) { return std::vector<Element<S>>{h * v}; });
    };
    auto legs = [&](bool project) {
        ops.push_back([project](const Element<S>& v) {
            std::vector<Element<S>> out;
            for (auto& [m, r] : right_legs(coproduct(v))) out.push_back(project ? project_ker_counit(r) : r);
            return out;
        });
    };
    switch (f) {
        case OperatorFamily::CrossedModule:
            if (id.family != Family::Uq && id.family != Family::C)
                throw AlgebraMismatch("crossed-module closure lives on C_q(B+) or C(B+)");
            left_mult(gen_x<S>(id));
            left_mult(gen_col<S>(id, 1));
            left_mult(gen_col<S>(id, -1));
            ops.push_back([](const Element<S>& v) {
                std::vector<Element<S>> out;
                for (auto& [m, r] : right_legs(adjoint_coaction_closed(v))) out.push_back(r);
                return out;
            });
            return ops;
        case OperatorFamily::TangentCrossedModule:
        case OperatorFamily::TangentKerCounit: {
            std::vector<Generator> gens;
            if (id.family == Family::Uq) gens = {Generator::X, Generator::G, Generator::GInv};
            else if (id.family == Family::U) gens = {Generator::X, Generator::H};
            else throw AlgebraMismatch("tangent closure lives on U_q(b+) or U(b+)");
            for (Generator g : gens)
                ops.push_back([g, fam = id.family](const Element<S>& v) {
                    return std::vector<Element<S>>{fam == Family::Uq ? adjoint_action_uq(g, v)
                                                                     : adjoint_action_classical(g, v)};
                });
            legs(f == OperatorFamily::TangentKerCounit);
            return ops;
        }
        case OperatorFamily::LeftIdeal:
            for (int i = 0; i < id.x_count(); ++i) left_mult(gen_x<S>(id, i));
            left_mult(gen_col<S>(id, 1));
            if (id.laurent_column()) left_mult(gen_col<S>(id, -1));
            return ops;
        case OperatorFamily::XDerivative:
            if (id.x_count() != 1) throw AlgebraMismatch("X-derivative needs a single X letter");
            ops.push_back([id](const Element<S>& v) {
                Element<S> out(id);
                for (const auto& [m, c] : v.terms())
                    if (m.x[0] > 0) out.add(Monomial::xg(m.x[0] - 1, m.col), c * S(m.x[0]));
                return std::vector<Element<S>>{out};
            });
            return ops;
    }
    return ops;
}

struct ClosureStats {
    /// Operator outputs dropped because they left the truncation.
    long discarded = 0;
    /// Set when recomputing in a padded truncation and restricting back
    /// gives a different space.
    bool boundary_warning = false;
    int padded_dim = 0;
};

/// Least subspace of the truncation containing gens and closed under the
/// operators, where outputs that leave the truncation are dropped. The
/// worklist applies every operator to every newly added vector.
template <class S>
GradedSubspace<S> closure(const std::vector<Element<S>>& gens, const std::vector<LinearOperator<S>>& ops,
                          const AlgebraId& id, const Truncation& t, Layout layout = Layout::XGraded,
                          bool split_components = false, long* discarded = nullptr) {
    GradedSubspace<S> space(id, t, layout);
    std::deque<Element<S>> work;
    auto offer = [&](const Element<S>& v) {
        if (v.is_zero()) return;
        if (split_components) {
            for (auto& [k, part] : space.components(v))
                if (space.insert(part)) work.push_back(part);
        } else if (space.insert(v)) {
            work.push_back(v);
        }
    };
    for (const auto& g : gens) {
        if (!(g.algebra() == id)) throw AlgebraMismatch("generator in " + g.algebra().name() + ", closure in " + id.name());
        if (!t.contains(g)) throw TruncationError("generator " + render(g) + " leaves " + t.to_string());
        offer(g);
    }
    long dropped = 0;
    while (!work.empty()) {
        Element<S> v = std::move(work.front());
        work.pop_front();
        for (const auto& op : ops)
            for (const auto& out : op(v)) {
                if (!t.contains(out)) {
                    ++dropped;
                    continue;
                }
                offer(out);
            }
    }
    if (discarded) *discarded += dropped;
    return space;
}

/// Closure under a named family. With stats, the closure is also computed
/// in the padded truncation and compared after restriction.
template <class S>
GradedSubspace<S> closure(const std::vector<Element<S>>& gens, OperatorFamily family, const AlgebraId& id,
                          const Truncation& t, ClosureStats* stats = nullptr, Layout layout = Layout::XGraded) {
    auto ops = operator_family<S>(family, id);
    const bool split = family_is_graded(family) && layout == Layout::XGraded;
    long dropped = 0;
    GradedSubspace<S> space = closure(gens, ops, id, t, layout, split, &dropped);
    if (stats) {
        stats->discarded += dropped;
        GradedSubspace<S> wide = closure(gens, ops, id, t.padded(id), layout, split);
        stats->padded_dim = wide.dim();
        if (!(wide.restrict_to(t) == space)) stats->boundary_warning = true;
    }
    return space;
}

// ---------------------------------------------------------------------------
// Classification data and canonical generators

/// A pair (P, I): P a polynomial in g with P(0) = 1, I a finite set of
/// positive integers. P lives in U_q(b+) (as C_q(B+)) or in C(B+).
template <class S>
class ClassificationPair {
   public:
    ClassificationPair(Element<S> p, std::set<int> set, bool ker_counit = false) : p_(std::move(p)), set_(std::move(set)) {
        const AlgebraId& id = p_.algebra();
        if (id.family != Family::Uq && id.family != Family::C)
            throw InvalidDescriptor("P must be a polynomial in g of C_q(B+) or C(B+)");
        for (const auto& [m, c] : p_.terms())
            if (m.xdeg() != 0 || m.col < 0) throw InvalidDescriptor("P must be a polynomial in g");
        if (!(p_.coeff(Monomial{}) == S(1))) throw InvalidDescriptor("P(0) must be 1");
        for (int n : set_)
            if (n < 1) throw InvalidDescriptor("I must contain positive integers");
        if (ker_counit && !counit_compatible())
            throw InvalidDescriptor(id.is_q() ? "ker(eps) needs (1-g) | P or 1 in I" : "ker(eps) needs (1-g) | P or I non-empty");
    }

    const Element<S>& P() const { return p_; }
    const std::set<int>& I() const { return set_; }
    const AlgebraId& algebra() const { return p_.algebra(); }
    int sum() const { return std::accumulate(set_.begin(), set_.end(), 0); }

    /// Whether the crossed submodule lies in ker(eps).
    bool counit_compatible() const {
        const bool divides = counit(p_).is_zero();
        if (algebra().is_q()) return divides || set_.count(1) > 0;
        return divides || !set_.empty();
    }

   private:
    Element<S> p_;
    std::set<int> set_;
};

/// A pair (l, I) classifying crossed submodules of U(b+).
struct DualClassificationPair {
    int l = 0;
    std::set<int> I;

    DualClassificationPair(int l_, std::set<int> set, bool ker_counit = false) : l(l_), I(std::move(set)) {
        if (l < 0) throw InvalidDescriptor("l must be non-negative");
        for (int n : I)
            if (n < 1) throw InvalidDescriptor("I must contain positive integers");
        if (ker_counit && l == 0 && I.empty()) throw InvalidDescriptor("ker(eps) variant needs l > 0 or I non-empty");
    }
    int sum() const { return std::accumulate(I.begin(), I.end(), 0); }
};

namespace detail {

/// 1 - q^{1-n} g (1 - g at q = 1).
template <class S>
Element<S> root_factor(const AlgebraId& id, int n) {
    return Element<S>::constant(id, S(1)) - Element<S>::xg(id, 0, 1, q_factor<S>(id, 1 - n));
}

}  // namespace detail

/// Generators X^k P prod_{n in I, n > k} (1 - q^{1-n} g) for k in {0} and I;
/// left multiplication by X fills the degrees in between.
template <class S>
std::vector<Element<S>> canonical_crossed_submodule(const ClassificationPair<S>& pair) {
    const AlgebraId& id = pair.algebra();
    std::set<int> degrees = pair.I();
    degrees.insert(0);
    std::vector<Element<S>> out;
    for (int k : degrees) {
        Element<S> row = Element<S>::xg(id, k, 0) * pair.P();
        for (int n : pair.I())
            if (n > k) row = row * detail::root_factor<S>(id, n);
        out.push_back(row);
    }
    return out;
}

/// For each n in I: g^{1-n} - 1 and q^{k(k-1)}/[k]_q! X^k g^{1-n} for k = 1..n-1.
inline std::vector<Element<RatFunc>> canonical_tangent_space_q(const std::set<int>& set) {
    const AlgebraId id = AlgebraId::uq();
    std::vector<Element<RatFunc>> out;
    for (int n : set) {
        if (n < 2) throw InvalidDescriptor("tangent spaces are indexed by integers n >= 2");
        out.push_back(Element<RatFunc>::xg(id, 0, 1 - n) - Element<RatFunc>::constant(id, RatFunc(1)));
        for (int k = 1; k < n; ++k)
            out.push_back(Element<RatFunc>::xg(id, k, 1 - n, RatFunc::q_pow(k * (k - 1)) / qfact(k)));
    }
    return out;
}

/// Generators of the crossed submodule of U(b+) for (l, I): with
/// n_1 < ... < n_m the corners X^{n_i - 1} H^{l+m-i}, and for l > 0 the
/// tail X^k H^{l-1} for max(I) <= k <= max_xdeg.
inline std::vector<Element<Rational>> canonical_ideal_classical(const DualClassificationPair& pair, int max_xdeg) {
    const AlgebraId id = AlgebraId::u();
    std::vector<Element<Rational>> out;
    const int m = static_cast<int>(pair.I.size());
    int i = 1;
    for (int n : pair.I) out.push_back(Element<Rational>::xg(id, n - 1, pair.l + m - i++));
    if (pair.l > 0) {
        const int start = pair.I.empty() ? 0 : *pair.I.rbegin();
        for (int k = start; k <= max_xdeg; ++k) out.push_back(Element<Rational>::xg(id, k, pair.l - 1));
    }
    return out;
}

/// The canonical generators of (1, I) with each factor 1 - q^{1-n} g
/// replaced by H + n - 1: X^k prod_{n in I, n > k} (H + n - 1).
inline std::vector<Element<Rational>> classical_limit_ideal(const std::set<int>& set) {
    const AlgebraId id = AlgebraId::u();
    std::set<int> degrees = set;
    degrees.insert(0);
    std::vector<Element<Rational>> out;
    for (int k : degrees) {
        Element<Rational> row = Element<Rational>::xg(id, k, 0);
        for (int n : set)
            if (n > k) row = row * (gen_col<Rational>(id, 1) + Element<Rational>::constant(id, Rational(n - 1)));
        out.push_back(row);
    }
    return out;
}

/// True iff <x, m> = 0 for every x in L and every basis vector m of M.
template <class S>
bool annihilator_check(const GradedSubspace<S>& m, const std::vector<Element<S>>& l, const PairingId& id) {
    const bool m_right = m.algebra() == id.right();
    if (!m_right && !(m.algebra() == id.left())) throw AlgebraMismatch("subspace does not sit in either pairing slot");
    const AlgebraId other = m_right ? id.left() : id.right();
    for (const auto& x : l)
        if (!(x.algebra() == other)) throw AlgebraMismatch("annihilator element in the wrong pairing slot");
    for (const auto& b : m.basis())
        for (const auto& x : l)
            if (!(m_right ? pair(id, x, b) : pair(id, b, x)).is_zero()) return false;
    return true;
}

/// A subspace of C(B+) is a subcomodule iff it is graded by xdeg + col and
/// stable under d/dX (within the truncation).
template <class S>
bool subcomodule_check_CBp(const GradedSubspace<S>& s) {
    if (s.algebra().family != Family::C) throw AlgebraMismatch("subcomodule check is for C(B+)");
    GradedSubspace<S> graded(s.algebra(), s.truncation(), Layout::TotalDegree);
    for (const auto& b : s.basis()) graded.insert_components(b);
    if (graded.dim() != s.dim()) return false;
    auto deriv = operator_family<S>(OperatorFamily::XDerivative, s.algebra()).front();
    for (const auto& b : s.basis())
        for (const auto& d : deriv(b))
            if (!s.contains(d)) return false;
    return true;
}

}  // namespace qborel

#endif  // QBOREL_SUBMOD_HPP
