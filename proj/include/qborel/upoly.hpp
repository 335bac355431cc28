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

#ifndef QBOREL_UPOLY_HPP
#define QBOREL_UPOLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "qborel/errors.hpp"

namespace qborel {

/// Dense univariate Laurent polynomial sum_i c_i t^(low + i) over a field S.
/// Used for the column variable (g, H or x0) of one block of a subspace.
template <class S>
class UPoly {
   public:
    UPoly() = default;
    UPoly(int low, std::vector<S> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const S& s) { return UPoly(0, {s}); }
    static UPoly monomial(int e, const S& s = S(1)) { return UPoly(e, {s}); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    int degree() const { return high(); }
    S coeff(int e) const {
        if (is_zero() || e < low_ || e > high()) return S(0);
        return c_[static_cast<std::size_t>(e - low_)];
    }
    const S& leading() const { return c_.back(); }
    bool is_constant() const { return is_zero() || (low_ == 0 && c_.size() == 1); }

    UPoly shifted(int k) const {
        UPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }
    UPoly scaled(const S& s) const {
        if (s.is_zero()) return {};
        UPoly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    UPoly monic() const { return is_zero() ? *this : scaled(S(1) / leading()); }

    UPoly& operator+=(const UPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
        std::vector<S> c(static_cast<std::size_t>(hi - lo + 1), S(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
        *this = UPoly(lo, std::move(c));
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += o.scaled(S(-1)); }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.low_ + b.low_, std::move(c));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    /// Remainder modulo an ordinary polynomial m with m(0) != 0 when this
    /// has negative exponents (t is then invertible modulo m).
    UPoly mod(const UPoly& m) const {
        if (m.is_zero() || m.low() < 0) throw DomainError("modulus must be a non-zero ordinary polynomial");
        if (is_zero()) return {};
        if (m.degree() == 0) return {};
        UPoly pos = low_ < 0 ? shifted(-low_) : *this;
        UPoly r = pos.mod_ordinary(m);
        if (low_ < 0) {
            if (m.low() != 0) throw DomainError("t is not invertible modulo a multiple of t");
            UPoly inv = inverse_of_t(m);
            for (int i = 0; i < -low_; ++i) r = (r * inv).mod_ordinary(m);
        }
        return r;
    }

    /// Evaluates at t = x (x must be non-zero if negative exponents occur).
    S evaluate(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        S p(1);
        if (low_ >= 0) {
            for (int i = 0; i < low_; ++i) p *= x;
        } else {
            S inv = S(1) / x;
            for (int i = 0; i < -low_; ++i) p *= inv;
        }
        return acc * p;
    }

   private:
    void trim() {
        std::size_t first = 0;
        while (first < c_.size() && c_[first].is_zero()) ++first;
        if (first == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        if (first) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
            low_ += static_cast<int>(first);
        }
        while (c_.back().is_zero()) c_.pop_back();
    }

    UPoly mod_ordinary(const UPoly& m) const {
        UPoly r = *this;
        const int dm = m.degree();
        const S lead_inv = S(1) / m.leading();
        while (!r.is_zero() && r.high() >= dm) {
            S f = r.leading() * lead_inv;
            r -= m.shifted(r.high() - dm).scaled(f);
        }
        return r;
    }

    // t^{-1} mod m: from m = m0 + t u(t), t^{-1} = -u(t)/m0.
    static UPoly inverse_of_t(const UPoly& m) {
        S m0 = m.coeff(0);
        std::vector<S> u;
        for (int e = 1; e <= m.degree(); ++e) u.push_back(m.coeff(e));
        return UPoly(0, std::move(u)).scaled(S(-1) / m0);
    }

    int low_ = 0;
    std::vector<S> c_;
};

/// Monic gcd of ordinary polynomials.
template <class S>
UPoly<S> upoly_gcd(UPoly<S> a, UPoly<S> b) {
    auto strip = [](UPoly<S> p) { return p.is_zero() ? p : p.shifted(-std::min(p.low(), 0)); };
    a = strip(a);
    b = strip(b);
    while (!b.is_zero()) {
        UPoly<S> r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace qborel

#endif  // QBOREL_UPOLY_HPP
