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

#include <random>

#include "doctest.h"
#include "qborel/submod.hpp"

using namespace qborel;

namespace {

using E = Element<RatFunc>;
using ER = Element<Rational>;

const AlgebraId kUq = AlgebraId::uq();
RatFunc q(int k = 1) { return RatFunc::q_pow(k); }
E uq(int n, int m, RatFunc c = 1) { return E::xg(kUq, n, m, c); }

const std::vector<std::set<int>> kSmallSets = {{1}, {2}, {3}, {4}, {5}, {6}, {1, 2}, {1, 3},
                                               {1, 4}, {1, 5}, {2, 3}, {2, 4}, {1, 2, 3}};

int sum(const std::set<int>& s) { return std::accumulate(s.begin(), s.end(), 0); }

// Independent description of M(1, I): the X^k-component of an element is a
// Laurent polynomial in g vanishing at g = q^{n-1} for every n in I with n > k.
bool in_m_by_evaluation(const E& v, const std::set<int>& set) {
    std::map<int, E> by_degree;
    for (const auto& [m, c] : v.terms()) by_degree.try_emplace(m.x[0], E(kUq)).first->second.add(m, c);
    for (const auto& [k, part] : by_degree)
        for (int n : set) {
            if (n <= k) continue;
            RatFunc val(0);
            for (const auto& [m, c] : part.terms()) val += c * q(m.col * (n - 1));
            if (!val.is_zero()) return false;
        }
    return true;
}

GradedSubspace<RatFunc> crossed_q(const std::set<int>& set, const Truncation& t, ClosureStats* st = nullptr) {
    ClassificationPair<RatFunc> pair(E::constant(kUq, 1), set);
    return closure(canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, kUq, t, st);
}

}  // namespace

TEST_SUITE("submod") {
    TEST_CASE("row echelon basics") {
        RowEchelon<Rational> r(3);
        Vector<Rational> a(3), b(3), c(3);
        a << 0, 2, 4;
        b << 1, 1, 1;
        c << 1, 2, 3;
        CHECK(r.insert(a));
        CHECK(r.insert(b));
        CHECK_FALSE(r.insert(c));
        CHECK(r.rank() == 2);
        CHECK(r.pivots() == std::vector<int>{0, 1});
        CHECK(r.rows()[0][2] == Rational(-1));
        CHECK(r.rows()[1][2] == Rational(2));
    }

    TEST_CASE("closure examples") {
        Truncation t{6, -3, 6};
        auto m = closure<RatFunc>({uq(2, 0), uq(0, 0) - uq(0, 1, q(-1))}, OperatorFamily::CrossedModule, kUq, t);
        CHECK(m.codim() == 2);

        ClosureStats st;
        const AlgebraId u = AlgebraId::u();
        Truncation tu{6, 0, 6};
        auto nat = closure<Rational>({ER::xg(u, 0, 2), ER::xg(u, 1, 1), ER::xg(u, 2, 0)}, OperatorFamily::LeftIdeal, u, tu, &st);
        CHECK(nat.codim() == 3);
        CHECK_FALSE(st.boundary_warning);

        auto zero = closure<RatFunc>({E(kUq)}, OperatorFamily::CrossedModule, kUq, t);
        CHECK(zero.dim() == 0);
        CHECK_THROWS_AS(closure<RatFunc>({uq(9, 0)}, OperatorFamily::CrossedModule, kUq, t), TruncationError);
    }

    TEST_CASE("canonical crossed submodule generators") {
        ClassificationPair<RatFunc> p2(E::constant(kUq, 1), {2});
        auto g2 = canonical_crossed_submodule(p2);
        REQUIRE(g2.size() == 2);
        CHECK(g2[0] == uq(0, 0) - uq(0, 1, q(-1)));
        CHECK(g2[1] == uq(2, 0));

        ClassificationPair<RatFunc> p21(E::constant(kUq, 1), {1, 2});
        auto g21 = canonical_crossed_submodule(p21);
        REQUIRE(g21.size() == 3);
        CHECK(g21[0] == (uq(0, 0) - uq(0, 1)) * (uq(0, 0) - uq(0, 1, q(-1))));
        CHECK(g21[1] == uq(1, 0) - uq(1, 1, q(-1)));
        CHECK(g21[2] == uq(2, 0));

        CHECK_THROWS_AS(ClassificationPair<RatFunc>(uq(0, 0, 2), {1}), InvalidDescriptor);
        CHECK_THROWS_AS(ClassificationPair<RatFunc>(E::constant(kUq, 1), {2}, true), InvalidDescriptor);
        CHECK_NOTHROW(ClassificationPair<RatFunc>(uq(0, 0) - uq(0, 1), {2}, true));
        CHECK_THROWS_AS(ClassificationPair<RatFunc>(uq(0, 0) + uq(1, 0), {}), InvalidDescriptor);
    }

    TEST_CASE("ker eps is the crossed submodule for (1, {1})") {
        Truncation t = Truncation::for_sum(kUq, 1);
        auto m = crossed_q({1}, t);
        CHECK(m.codim() == 1);
        for (const auto& b : m.basis()) CHECK(counit(b).is_zero());
    }

    TEST_CASE("codimension equals the sum of I for every small set") {
        for (const auto& set : kSmallSets) {
            CAPTURE(sum(set));
            Truncation t = Truncation::for_sum(kUq, sum(set));
            ClosureStats st;
            auto m = crossed_q(set, t, &st);
            CHECK(m.codim() == sum(set));
            CHECK_FALSE(st.boundary_warning);
            for (const auto& b : m.basis()) CHECK(in_m_by_evaluation(b, set));
        }
    }

    TEST_CASE("ker eps variants have codimension sum - 1 inside ker eps") {
        for (const auto& set : kSmallSets) {
            if (!set.count(1)) continue;
            Truncation t = Truncation::for_sum(kUq, sum(set));
            auto m = crossed_q(set, t);
            for (const auto& b : m.basis()) CHECK(counit(b).is_zero());
            CHECK(m.codim() - 1 == sum(set) - 1);
        }
    }

    TEST_CASE("closure is idempotent and truncation independent") {
        for (const std::set<int>& set : {std::set<int>{2}, std::set<int>{1, 3}, std::set<int>{2, 3}}) {
            Truncation t = Truncation::for_sum(kUq, sum(set));
            auto m = crossed_q(set, t);
            auto again = closure(m.basis(), OperatorFamily::CrossedModule, kUq, t);
            CHECK(again == m);
            Truncation big{t.max_xdeg + 2, t.lo - 3, t.hi + 3};
            CHECK(crossed_q(set, big).codim() == m.codim());
        }
    }

    TEST_CASE("intersections of maximal crossed submodules") {
        Truncation t = Truncation::for_sum(kUq, 5);
        auto m2 = crossed_q({2}, t), m3 = crossed_q({3}, t), m23 = crossed_q({2, 3}, t);
        auto cap = intersect(m2, m3);
        CHECK(cap.codim() == 5);
        CHECK(cap == m23);
        CHECK(intersect(m2, m2) == m2);
        GradedSubspace<RatFunc> full(kUq, t);
        for (const auto& mon : truncation_monomials(kUq, t)) full.insert(E::term(kUq, mon));
        CHECK(full.codim() == 0);
        CHECK(intersect(full, m3) == m3);
        CHECK_THROWS_AS(intersect(m2, crossed_q({2}, Truncation::for_sum(kUq, 2))), TruncationError);
    }

    TEST_CASE("maximal crossed submodules: an outside element generates everything") {
        std::mt19937 rng(5);
        for (int n : {2, 3}) {
            Truncation t = Truncation::for_sum(kUq, n);
            auto m = crossed_q({n}, t);
            auto mons = truncation_monomials(kUq, Truncation{n, -n, n});
            std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
            std::uniform_int_distribution<int> coef(-3, 3);
            int tried = 0;
            while (tried < 20) {
                E r(kUq);
                for (int j = 0; j < 3; ++j) r.add(mons[pick(rng)], RatFunc(coef(rng)));
                if (r.is_zero() || m.contains(r)) continue;
                ++tried;
                auto gens = m.basis();
                gens.push_back(r);
                ClosureStats st;
                auto bigger = closure(gens, OperatorFamily::CrossedModule, kUq, t, &st);
                CHECK(bigger.dim() > m.dim());
                CHECK(bigger.codim() == 0);
                CHECK_FALSE(st.boundary_warning);
            }
        }
    }

    TEST_CASE("tangent spaces") {
        CHECK(canonical_tangent_space_q({}).empty());
        auto l2 = canonical_tangent_space_q({2});
        REQUIRE(l2.size() == 2);
        CHECK(l2[0] == uq(0, -1) - uq(0, 0));
        CHECK(l2[1] == uq(1, -1));
        for (const std::set<int>& set : {std::set<int>{2}, std::set<int>{3}, std::set<int>{2, 3}, std::set<int>{2, 4}}) {
            Truncation t = Truncation::for_sum(kUq, sum(set));
            ClosureStats st;
            auto l = closure(canonical_tangent_space_q(set), OperatorFamily::TangentKerCounit, kUq, t, &st);
            CHECK(l.dim() == sum(set));
            CHECK_FALSE(st.boundary_warning);
        }
    }

    TEST_CASE("annihilators") {
        const auto pq = PairingId::q_selfdual();
        for (const std::set<int>& set : {std::set<int>{2}, std::set<int>{3}, std::set<int>{2, 3}}) {
            std::set<int> with1 = set;
            with1.insert(1);
            Truncation t = Truncation::for_sum(kUq, sum(with1));
            CHECK(annihilator_check(crossed_q(with1, t), canonical_tangent_space_q(set), pq));
        }
        Truncation t = Truncation::for_sum(kUq, 4);
        CHECK_FALSE(annihilator_check(crossed_q({1, 3}, t), canonical_tangent_space_q({2}), pq));
        CHECK(annihilator_check(crossed_q({1, 3}, t), {}, pq));
    }

    TEST_CASE("q = 1 degeneracy of the (1, {2}) generators") {
        const AlgebraId c = AlgebraId::c();
        ClassificationPair<Rational> pc(ER::constant(c, 1), {2});
        CHECK(pc.counit_compatible());
        auto mc = closure(canonical_crossed_submodule(pc), OperatorFamily::CrossedModule, c, Truncation::for_sum(c, 2));
        CHECK(mc.codim() == 2);
        for (const auto& b : mc.basis()) CHECK(counit(b).is_zero());

        ClassificationPair<RatFunc> pq(E::constant(kUq, 1), {2});
        CHECK_FALSE(pq.counit_compatible());
        auto mq = crossed_q({2}, Truncation::for_sum(kUq, 2));
        bool all_in_ker = true;
        for (const auto& b : mq.basis()) all_in_ker = all_in_ker && counit(b).is_zero();
        CHECK_FALSE(all_in_ker);
    }

    TEST_CASE("crossed submodules of U(b+)") {
        const AlgebraId u = AlgebraId::u();
        auto dim_of = [&](const DualClassificationPair& p, const Truncation& t) {
            return closure(canonical_ideal_classical(p, t.max_xdeg), OperatorFamily::TangentCrossedModule, u, t).dim();
        };
        Truncation t{8, 0, 8};
        CHECK(dim_of({0, {2}}, t) == 2);
        CHECK(dim_of({0, {1}}, t) == 1);
        for (const auto& set : kSmallSets) CHECK(dim_of({0, set}, t) == sum(set));
        Truncation t2{10, 0, 10};
        CHECK(dim_of({1, {}}, t2) > dim_of({1, {}}, t));
        CHECK(dim_of({1, {}}, t) == t.max_xdeg + 1);
        CHECK(dim_of({1, {2}}, t) == 2 * 2 + (t.max_xdeg + 1 - 2));
        CHECK_THROWS_AS(DualClassificationPair(0, {}, true), InvalidDescriptor);
    }

    TEST_CASE("classical limit ideals") {
        const AlgebraId u = AlgebraId::u();
        auto h = gen_col<Rational>(u), x = gen_x<Rational>(u);
        auto one = ER::constant(u, 1);
        auto l2 = classical_limit_ideal({1, 2});
        REQUIRE(l2.size() == 3);
        CHECK(l2[0] == h * (h + one));
        CHECK(l2[1] == x * (h + one));
        CHECK(l2[2] == x * x);
        auto l1 = classical_limit_ideal({1});
        CHECK(l1 == std::vector<ER>{h, x});

        for (const auto& set : kSmallSets) {
            Truncation t = Truncation::for_sum(u, sum(set));
            ClosureStats st;
            auto m = closure(classical_limit_ideal(set), OperatorFamily::LeftIdeal, u, t, &st);
            CHECK(m.codim() == sum(set));
            CHECK_FALSE(st.boundary_warning);
        }
        Truncation t = Truncation::for_sum(u, 5);
        auto i2 = closure(classical_limit_ideal({2}), OperatorFamily::LeftIdeal, u, t);
        auto i3 = closure(classical_limit_ideal({3}), OperatorFamily::LeftIdeal, u, t);
        auto i23 = closure(classical_limit_ideal({2, 3}), OperatorFamily::LeftIdeal, u, t);
        CHECK(intersect(i2, i3) == i23);
    }

    TEST_CASE("subcomodules of C(B+)") {
        const AlgebraId c = AlgebraId::c();
        Truncation t{3, -3, 3};
        GradedSubspace<Rational> a(c, t);
        a.insert(ER::xg(c, 1, -1));
        a.insert(ER::xg(c, 0, -1));
        CHECK(subcomodule_check_CBp(a));
        GradedSubspace<Rational> b(c, t);
        b.insert(ER::xg(c, 1, 0));
        CHECK_FALSE(subcomodule_check_CBp(b));
        GradedSubspace<Rational> mixed(c, t, Layout::Ungraded);
        mixed.insert(ER::xg(c, 0, 0) + ER::xg(c, 0, 1));
        CHECK_FALSE(subcomodule_check_CBp(mixed));
        CHECK(subcomodule_check_CBp(GradedSubspace<Rational>(c, t)));
    }

    TEST_CASE("restriction to a smaller window") {
        Truncation t = Truncation::for_sum(kUq, 2);
        auto m = crossed_q({2}, t);
        auto wide = crossed_q({2}, t.padded(kUq));
        CHECK(wide.restrict_to(t) == m);
    }
}
