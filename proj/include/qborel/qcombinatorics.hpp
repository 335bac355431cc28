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

#ifndef QBOREL_QCOMBINATORICS_HPP
#define QBOREL_QCOMBINATORICS_HPP

#include "qborel/ratfunc.hpp"

namespace qborel {

/// [n]_q = 1 + q + ... + q^(n-1).
RatFunc qint(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
RatFunc qfact(int n);

/// Gaussian binomial [n choose m]_q. Throws DomainError unless 0 <= m <= n.
RatFunc qbinom(int n, int m);

/// Value at q = 1 of the reduced fraction. Throws EvaluationPole.
Rational eval_q1(const RatFunc& r);

/// Checks sum_i [n choose i]_q q^(i(i+1)/2) x^i == prod_{j=1..n} (1 + q^j x)
/// coefficientwise in x.
bool verify_qbinom_identity(int n);

}  // namespace qborel

#endif  // QBOREL_QCOMBINATORICS_HPP
