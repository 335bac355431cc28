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

#ifndef QBOREL_SCALAR_HPP
#define QBOREL_SCALAR_HPP

#include <Eigen/Core>
#include <string>

#include "qborel/errors.hpp"
#include "qborel/qcombinatorics.hpp"
#include "qborel/rational.hpp"
#include "qborel/ratfunc.hpp"

namespace qborel {

/// Per-scalar hooks used by the generic algebra code. Rational scalars are
/// only valid for the q = 1 families.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool has_q = false;
    static Rational q_pow(int k) {
        if (k != 0) throw AlgebraMismatch("powers of q need rational-function scalars");
        return Rational(1);
    }
    static Rational qbinom(int n, int m) { return binomial(n, m); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational at_q1(const Rational& r) { return r; }
    static std::string to_string(const Rational& r) { return r.to_string(); }
    /// Renders without surrounding parentheses in a product.
    static bool is_atomic(const Rational&) { return true; }
};

template <>
struct ScalarTraits<RatFunc> {
    static constexpr bool has_q = true;
    static RatFunc q_pow(int k) { return RatFunc::q_pow(k); }
    static RatFunc qbinom(int n, int m) { return ::qborel::qbinom(n, m); }
    static RatFunc from_rational(const Rational& r) { return RatFunc(r); }
    static Rational at_q1(const RatFunc& r) { return eval_q1(r); }
    static std::string to_string(const RatFunc& r) { return r.to_string(); }
    static bool is_atomic(const RatFunc& r) { return r.is_polynomial() && r.numerator().term_count() <= 1; }
};

template <class S>
inline bool is_zero(const S& s) {
    return s.is_zero();
}

}  // namespace qborel

namespace Eigen {

template <>
struct NumTraits<qborel::Rational> : GenericNumTraits<qborel::Rational> {
    using Real = qborel::Rational;
    using NonInteger = qborel::Rational;
    using Nested = qborel::Rational;
    using Literal = qborel::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qborel::RatFunc> : GenericNumTraits<qborel::RatFunc> {
    using Real = qborel::RatFunc;
    using NonInteger = qborel::RatFunc;
    using Nested = qborel::RatFunc;
    using Literal = qborel::RatFunc;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 16,
        MulCost = 32
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qborel {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

}  // namespace qborel

#endif  // QBOREL_SCALAR_HPP
