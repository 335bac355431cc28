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

#include "qborel/suites.hpp"

#include <functional>
#include <future>
#include <map>
#include <numeric>

#include "qborel/kappa.hpp"
#include "qborel/qcombinatorics.hpp"

namespace qborel {

namespace {

using E = Element<RatFunc>;
using ER = Element<Rational>;

const std::vector<std::set<int>> kSmallSets = {{1}, {2}, {3}, {4}, {5}, {6}, {1, 2}, {1, 3},
                                               {1, 4}, {1, 5}, {2, 3}, {2, 4}, {1, 2, 3}};

int sum(const std::set<int>& s) { return std::accumulate(s.begin(), s.end(), 0); }

std::string set_text(const std::set<int>& s) {
    std::string out = "{";
    for (int n : s) out += (out.size() > 1 ? "," : "") + std::to_string(n);
    return out + "}";
}

RelationResult relation(std::string id, std::string anchor) {
    RelationResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    return r;
}

void absorb(Report& into, const Report& part, const std::string& prefix) {
    for (RelationResult rel : part.relations) {
        rel.id = prefix + "/" + rel.id;
        into.relations.push_back(std::move(rel));
    }
}

std::vector<int> ns_or(const SuiteParams& p, std::vector<int> fallback) {
    return p.n ? std::vector<int>{*p.n} : fallback;
}

Report hopf_axioms(const SuiteParams& p) {
    const int D = p.degree.value_or(6);
    const AlgebraId id = AlgebraId::uq();
    const auto eps = [&](const Monomial& m) { return E::constant(id, counit_monomial<RatFunc>(id, m)); };
    const auto s = [&](const Monomial& m) { return antipode_monomial<RatFunc>(id, m); };
    std::vector<E> mons;
    for (int n = 0; n <= D; ++n)
        for (int m = -3; m <= 3; ++m) mons.push_back(E::xg(id, n, m));

    RelationResult coassoc = relation("coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta");
    RelationResult counit_rel = relation("counit", "(eps (x) id) Delta = id = (id (x) eps) Delta");
    RelationResult antipode_rel = relation("antipode", "S(a_1) a_2 = eps(a) 1 = a_1 S(a_2)");
    RelationResult mult = relation("coproduct-multiplicative", "Delta(ab) = Delta(a) Delta(b)");
    for (const E& a : mons) {
        const std::string in = render(a);
        const auto d = coproduct(a);
        coassoc.expect_true(in, coproduct_on_left(d) == coproduct_on_right(d));
        counit_rel.expect_true(in, multiply_legs(map_leg(d, 0, eps)) == a);
        counit_rel.expect_true(in, multiply_legs(map_leg(d, 1, eps)) == a);
        const E unit = E::constant(id, counit(a));
        antipode_rel.expect_true(in, multiply_legs(map_leg(d, 0, s)) == unit);
        antipode_rel.expect_true(in, multiply_legs(map_leg(d, 1, s)) == unit);
    }
    std::vector<Tensor<RatFunc, 2>> deltas;
    for (const E& a : mons) deltas.push_back(coproduct(a));
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
            mult.expect_true(render(mons[i]) + " ; " + render(mons[j]),
                             coproduct(mons[i] * mons[j]) == deltas[i] * deltas[j]);

    Report r;
    r.anchor = "Hopf axioms on X^n g^m, 0 <= n <= " + std::to_string(D) + ", |m| <= 3";
    r.relations = {coassoc, counit_rel, antipode_rel, mult};
    return r;
}

Report appendix(const SuiteParams& p) {
    const int D = p.degree.value_or(5);
    const AlgebraId id = AlgebraId::uq();
    RelationResult adl = relation("adl-closed-form", "closed form of Ad_L(X^n P) = v_1 S(v_3) (x) v_2");
    const std::vector<std::pair<std::string, E>> ps = {{"1", E::xg(id, 0, 0)},
                                                       {"g", E::xg(id, 0, 1)},
                                                       {"g^-1", E::xg(id, 0, -1)},
                                                       {"1 + g", E::xg(id, 0, 0) + E::xg(id, 0, 1)}};
    for (int n = 0; n <= D; ++n)
        for (const auto& [name, poly] : ps) {
            const E v = E::xg(id, n, 0) * poly;
            adl.expect_true("n=" + std::to_string(n) + ", P=" + name,
                            adjoint_coaction_closed(n, poly) == adjoint_coaction_direct(v));
        }
    RelationResult qb = relation("qbinomial-product", "sum_i [n i]_q q^(i(i+1)/2) x^i = prod_j (1 + q^j x)");
    for (int n = 0; n <= 10; ++n) qb.expect_true("n=" + std::to_string(n), verify_qbinom_identity(n));
    Report r;
    r.anchor = "adjoint coaction closed form and the q-binomial product";
    r.relations = {adl, qb};
    return r;
}

GradedSubspace<RatFunc> crossed_q(const std::set<int>& set, const Truncation& t, RelationResult& warnings) {
    ClosureStats st;
    ClassificationPair<RatFunc> pair(E::constant(AlgebraId::uq(), 1), set);
    auto m = closure(canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, AlgebraId::uq(), t, &st);
    warnings.expect_true("M(1," + set_text(set) + ") in " + t.to_string(), !st.boundary_warning, "boundary warning");
    return m;
}

// The X^k-component of an element of M(1, I) vanishes at g = q^{n-1} for
// every n in I with n > k.
bool in_m_by_evaluation(const E& v, const std::set<int>& set) {
    std::map<int, RatFunc> values;
    for (int n : set)
        for (const auto& [m, c] : v.terms())
            if (n > m.x[0]) values[n * 100 + m.x[0]] += c * RatFunc::q_pow(m.col * (n - 1));
    for (const auto& [key, val] : values)
        if (!val.is_zero()) return false;
    return true;
}

Report classification(const SuiteParams&) {
    const AlgebraId id = AlgebraId::uq();
    RelationResult warnings = relation("truncation-warnings", "no closure touches the truncation boundary");
    RelationResult codim = relation("codim", "codim M(1, I) = sum I");
    RelationResult oracle = relation("evaluation-oracle", "M(1, I) vanishes at g = q^(n-1) below degree n");
    RelationResult ker = relation("ker-counit-codim", "1 in I: M in ker(eps) with codim sum I - 1 there");
    RelationResult cap = relation("intersection", "M(1, I) = intersection of M(1, {n}), n in I");
    RelationResult tangent = relation("tangent-dim", "dim L(I) = sum I");
    RelationResult annihilator = relation("annihilator", "<L(I), M(1, I u {1})> = 0");

    for (const auto& set : kSmallSets) {
        const std::string in = "I=" + set_text(set);
        const Truncation t = Truncation::for_sum(id, sum(set));
        const auto m = crossed_q(set, t, warnings);
        codim.expect_true(in, m.codim() == sum(set), "codim " + std::to_string(m.codim()));
        bool evaluates = true;
        for (const auto& b : m.basis()) evaluates = evaluates && in_m_by_evaluation(b, set);
        oracle.expect_true(in, evaluates);
        if (set.count(1)) {
            bool in_ker = true;
            for (const auto& b : m.basis()) in_ker = in_ker && counit(b).is_zero();
            ker.expect_true(in, in_ker && m.codim() - 1 == sum(set) - 1);
        }
        if (set.size() >= 2) {
            std::optional<GradedSubspace<RatFunc>> acc;
            for (int n : set) {
                auto single = crossed_q({n}, t, warnings);
                acc = acc ? intersect(*acc, single) : single;
            }
            cap.expect_true(in, *acc == m);
        }
        if (!set.count(1)) {
            ClosureStats st;
            auto l = closure(canonical_tangent_space_q(set), OperatorFamily::TangentKerCounit, id, t, &st);
            warnings.expect_true("L(" + set_text(set) + ")", !st.boundary_warning, "boundary warning");
            tangent.expect_true(in, l.dim() == sum(set), "dim " + std::to_string(l.dim()));
        }
    }
    for (const std::set<int>& set : {std::set<int>{2}, std::set<int>{3}, std::set<int>{2, 3}}) {
        std::set<int> with1 = set;
        with1.insert(1);
        const auto m = crossed_q(with1, Truncation::for_sum(id, sum(with1)), warnings);
        annihilator.expect_true("I=" + set_text(set),
                                annihilator_check(m, canonical_tangent_space_q(set), PairingId::q_selfdual()));
    }
    Report r;
    r.anchor = "crossed submodules of C_q(B+) for every I with sum I <= 6";
    r.relations = {codim, oracle, ker, cap, tangent, annihilator, warnings};
    return r;
}

Report thm_qcalc_relations(const SuiteParams& p) {
    const int n = p.n.value_or(3);
    Report r;
    r.anchor = "relations of q(" + std::to_string(n) + ")";
    absorb(r, verify_relations(build_q(n), p.degree.value_or(4)), "q(" + std::to_string(n) + ")");
    return r;
}

Report thm_qcalc(const SuiteParams& p) {
    Report r;
    r.anchor = "the calculi q(n): dual basis, relations, derivations, decomposition";
    for (int n : ns_or(p, {2, 3, 4, 5}))
        absorb(r, verify_relations(build_q(n), p.degree.value_or(4)), "q(" + std::to_string(n) + ")");
    const std::set<int> set = p.set.empty() ? std::set<int>{2, 3} : p.set;
    const auto dec = decompose(set);
    RelationResult rel = relation("decomposition", "ker(eps)/M(I) = sum over n in I of ker(eps)/M^n");
    std::string dims;
    bool each = dec.summands.size() == set.size();
    auto it = set.begin();
    for (std::size_t k = 0; k < dec.summands.size() && each; ++k, ++it) {
        dims += (k ? "+" : "") + std::to_string(dec.summands[k].dim());
        each = dec.summands[k].dim() == *it;
    }
    const std::string got = dims + "=" + std::to_string(dec.total_dim) + (dec.is_direct_sum ? "" : ", not direct");
    rel.expect_true("I=" + set_text(set), each && dec.total_dim == sum(set) && dec.well_defined && dec.is_direct_sum, got);
    r.relations.push_back(rel);
    return r;
}

Report two_dim_corollary(const SuiteParams& p) {
    Report r;
    r.anchor = "the two-dimensional calculus on C_q(B+)";
    absorb(r, verify_two_dim_corollary(build_q(2), p.degree.value_or(5)), "q(2)");
    return r;
}

Report classical(const SuiteParams& p) {
    Report r;
    r.anchor = "q -> 1: the calculi classical_CBp(n) and the degeneracy of the classification";
    for (int n : ns_or(p, {2, 3, 4})) {
        const std::string tag = std::to_string(n);
        absorb(r, compare_q_limit(n, p.degree.value_or(5)), "q-limit(" + tag + ")");
        absorb(r, verify_relations(build_classical_cbp(n), std::min(p.degree.value_or(4), 4)), "classical_CBp(" + tag + ")");
    }
    RelationResult degeneracy = relation("q1-degeneracy", "at q = 1 every (1, I) with I non-empty lies in ker(eps)");
    RelationResult generic = relation("generic-q-contrast", "at generic q, (1, I) with 1 not in I leaves ker(eps)");
    const AlgebraId c = AlgebraId::c();
    for (const auto& set : kSmallSets) {
        ClassificationPair<Rational> pc(ER::constant(c, 1), set);
        ClosureStats st;
        auto mc = closure(canonical_crossed_submodule(pc), OperatorFamily::CrossedModule, c, Truncation::for_sum(c, sum(set)), &st);
        bool in_ker = pc.counit_compatible() && !st.boundary_warning;
        for (const auto& b : mc.basis()) in_ker = in_ker && counit(b).is_zero();
        degeneracy.expect_true("I=" + set_text(set), in_ker && mc.codim() == sum(set), "codim " + std::to_string(mc.codim()));
        if (!set.count(1)) {
            ClassificationPair<RatFunc> pq(E::constant(AlgebraId::uq(), 1), set);
            generic.expect_true("I=" + set_text(set), !pq.counit_compatible());
        }
    }
    RelationResult failure = relation("direct-sum-failure", "at q = 1 the sum over n in I of ker(eps)/M^n is not direct");
    const auto dc = decompose_classical({2, 3});
    failure.expect_true("I={2,3}", dc.well_defined && !dc.is_direct_sum && dc.total_dim == 5);
    r.relations.push_back(degeneracy);
    r.relations.push_back(generic);
    r.relations.push_back(failure);
    return r;
}

Report dual_classical(const SuiteParams& p) {
    Report r;
    r.anchor = "left ideals of U(b+) by factor replacement, dual_classical(n) and nat_bp";
    const AlgebraId u = AlgebraId::u();
    RelationResult warnings = relation("truncation-warnings", "no closure touches the truncation boundary");
    RelationResult codim = relation("factor-replacement-codim", "codim of the ideal with H + n - 1 factors = sum I");
    RelationResult cap = relation("factor-replacement-intersection", "the ideal for I is the intersection over n in I");
    auto ideal = [&](const std::set<int>& set, const Truncation& t) {
        ClosureStats st;
        auto m = closure(classical_limit_ideal(set), OperatorFamily::LeftIdeal, u, t, &st);
        warnings.expect_true("I=" + set_text(set) + " in " + t.to_string(), !st.boundary_warning, "boundary warning");
        return m;
    };
    for (const auto& set : kSmallSets) {
        const Truncation t = Truncation::for_sum(u, sum(set));
        const auto m = ideal(set, t);
        codim.expect_true("I=" + set_text(set), m.codim() == sum(set), "codim " + std::to_string(m.codim()));
        if (set.size() >= 2) {
            std::optional<GradedSubspace<Rational>> acc;
            for (int n : set) {
                auto single = ideal({n}, t);
                acc = acc ? intersect(*acc, single) : single;
            }
            cap.expect_true("I=" + set_text(set), *acc == m);
        }
    }
    r.relations = {codim, cap, warnings};
    const int D = p.degree.value_or(4);
    for (int n : ns_or(p, {2, 3, 4}))
        absorb(r, verify_relations(build_dual_classical(n), D), "dual_classical(" + std::to_string(n) + ")");
    absorb(r, nat_bp_uniqueness(), "nat_bp-uniqueness");
    absorb(r, verify_relations(build_nat_bp(), D), "nat_bp");
    return r;
}

Report kappa(const SuiteParams& p) {
    Report r;
    r.anchor = "kappa-Minkowski calculus, pullback to nat_bp and translation invariance";
    const int D = p.degree.value_or(4);
    for (int n : ns_or(p, {2, 3, 4})) {
        const std::string tag = "(" + std::to_string(n) + ")";
        absorb(r, verify_relations(build_kappa_calculus(n), D), "kappa" + tag);
        absorb(r, kappa_pullback_check(n, D), "pullback" + tag);
        absorb(r, invariance_suite(n, D), "invariance" + tag);
        absorb(r, kappa_pairing_duality_check(n, std::min(D, 3)), "pairing" + tag);
    }
    return r;
}

template <class S>
void corrupt_and_tweak(Report& r, const std::string& name, const std::function<Calculus<S>(const CalculusOptions&)>& build,
                       int D) {
    RelationResult corrupt = relation("corrupt-eta", "doubling one eta representative breaks the suite");
    RelationResult tweak = relation("tweak-relation", "doubling one coefficient of a relation breaks it");
    const Calculus<S> c = build({});
    const Report clean = verify_relations(c, D);
    corrupt.expect_true(name + " clean", clean.pass(), "clean suite fails");
    for (int i = 0; i < c.dim(); ++i) {
        CalculusOptions opt;
        opt.corrupt_eta = i;
        corrupt.expect_true(name + " eta_" + std::to_string(i), !verify_relations(build(opt), D).pass(), "still passes");
    }
    for (const auto& rel : clean.relations)
        tweak.expect_true(name + " " + rel.id, !verify_relations(c, D, Tweak{rel.id}).pass(), "still passes");
    absorb(r, Report{"", "", {corrupt, tweak}}, name);
}

Report negative_controls(const SuiteParams& p) {
    Report r;
    r.anchor = "corrupted eta representatives and tweaked relation coefficients must fail";
    const int D = p.degree.value_or(3);
    for (int n : ns_or(p, {2, 3, 4, 5})) {
        corrupt_and_tweak<RatFunc>(r, "q(" + std::to_string(n) + ")", [n](const auto& o) { return build_q(n, o); }, D);
        if (n > 4) continue;
        corrupt_and_tweak<Rational>(r, "classical_CBp(" + std::to_string(n) + ")",
                                    [n](const auto& o) { return build_classical_cbp(n, o); }, D);
        corrupt_and_tweak<Rational>(r, "dual_classical(" + std::to_string(n) + ")",
                                    [n](const auto& o) { return build_dual_classical(n, o); }, D);
        corrupt_and_tweak<Rational>(r, "kappa(" + std::to_string(n) + ")",
                                    [n](const auto& o) { return build_kappa_calculus(n, o); }, D);
    }
    corrupt_and_tweak<Rational>(r, "nat_bp", [](const auto& o) { return build_nat_bp(o); }, D);

    RelationResult two = relation("tweak-relation", "doubling one coefficient of a relation breaks it");
    const auto c2 = build_q(2);
    for (const auto& rel : verify_two_dim_corollary(c2, D).relations)
        two.expect_true("q(2) " + rel.id, !verify_two_dim_corollary(c2, D, Tweak{rel.id}).pass(), "still passes");
    absorb(r, Report{"", "", {two}}, "two-dim");
    return r;
}

struct Entry {
    const char* name;
    const char* description;
    Report (*run)(const SuiteParams&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"hopf-axioms", "Hopf axioms of U_q(b+) on X^n g^m (--degree, default 6)", hopf_axioms},
        {"appendix", "adjoint coaction closed form and the q-binomial product", appendix},
        {"classification", "crossed submodules, tangent spaces and annihilators for sum I <= 6", classification},
        {"thm-qcalc-relations", "relations of q(n) (--n, default 3; --degree, default 4)", thm_qcalc_relations},
        {"thm-qcalc", "q(n) for n = 2..5 and the decomposition for I = {2,3}", thm_qcalc},
        {"two-dim-corollary", "relations and the expansion of d in q(2) (--degree, default 5)", two_dim_corollary},
        {"classical", "q -> 1 limit, degeneracy and the failure of the direct sum", classical},
        {"dual-classical", "factor replacement, dual_classical(n) and nat_bp", dual_classical},
        {"kappa", "kappa-Minkowski relations, pullback and translation invariance", kappa},
        {"negative-controls", "corrupted representatives and tweaked relations must fail", negative_controls},
    };
    return entries;
}

const Entry& find(const std::string& name) {
    for (const auto& e : registry())
        if (name == e.name) return e;
    throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
}

std::string suite_description(const std::string& name) { return find(name).description; }

Report run_suite(const std::string& name, const SuiteParams& params) {
    Report r = find(name).run(params);
    r.suite = name;
    return r;
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const SuiteParams& params) {
    for (const auto& n : names) find(n);
    std::vector<std::future<Report>> jobs;
    for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n, &params] { return run_suite(n, params); }));
    std::vector<Report> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace qborel
