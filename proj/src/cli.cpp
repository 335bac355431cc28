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

#include "qborel/cli.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "qborel/kappa.hpp"
#include "qborel/parse.hpp"
#include "qborel/suites.hpp"

namespace qborel {

namespace {

using AnyCalculus = std::variant<Calculus<RatFunc>, Calculus<Rational>>;

struct Options {
    std::string algebra = "Uq";
    std::string family = "q";
    std::string suite;
    int n = 0;
    int degree = -1;
    int index = 0;
    std::vector<int> set;
    std::vector<std::string> exprs;
    bool json = false;
    bool verify = false;
    bool integral = false;
};

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::optional<int> opt_n(const Options& o) { return o.n > 0 ? std::optional<int>(o.n) : std::nullopt; }

AlgebraId dual_algebra(const AlgebraId& id) {
    switch (id.family) {
        case Family::Uq: return id;
        case Family::U: return AlgebraId::c();
        case Family::C: return AlgebraId::u();
        case Family::Un: return AlgebraId::cn(id.n);
        case Family::Cn: return AlgebraId::un(id.n);
    }
    return id;
}

AnyCalculus build_family(const Options& o) {
    const int n = o.n > 0 ? o.n : 2;
    if (o.family == "q") return o.set.empty() ? build_q(n) : build_q_set(as_set(o.set));
    if (o.family == "classical") return build_classical_cbp(n);
    if (o.family == "dual-classical") return build_dual_classical(n);
    if (o.family == "nat_bp") return build_nat_bp();
    if (o.family == "kappa") return build_kappa_calculus(n);
    throw InvalidDescriptor("unknown family '" + o.family + "' (q, classical, dual-classical, nat_bp, kappa)");
}

template <class F>
auto with_scalar(const AlgebraId& id, F&& f) {
    if (id.is_q()) return f.template operator()<RatFunc>();
    return f.template operator()<Rational>();
}

void emit(std::ostream& out, bool json, const std::string& command, const std::string& result) {
    if (json)
        out << nlohmann::json{{"command", command}, {"result", result}}.dump(2) << "\n";
    else
        out << result << "\n";
}

int emit_report(std::ostream& out, bool json, const Report& r) {
    out << (json ? to_json(r) : to_text(r));
    if (json) out << "\n";
    return r.pass() ? kExitPass : kExitFailure;
}

const std::string& single_expr(const Options& o) {
    if (o.exprs.size() != 1) throw InvalidDescriptor("expected exactly one expression");
    return o.exprs.front();
}

int cmd_mul(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    return with_scalar(id, [&]<class S>() {
        if (o.exprs.empty()) throw InvalidDescriptor("expected at least one expression");
        Element<S> acc = Element<S>::constant(id, S(1));
        for (const auto& e : o.exprs) acc = acc * parse_element<S>(e, id);
        emit(out, o.json, "mul", render(acc));
        return kExitPass;
    });
}

int cmd_coproduct(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    return with_scalar(id, [&]<class S>() {
        emit(out, o.json, "coproduct", render(coproduct(parse_element<S>(single_expr(o), id))));
        return kExitPass;
    });
}

int cmd_antipode(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    return with_scalar(id, [&]<class S>() {
        emit(out, o.json, "antipode", render(antipode(parse_element<S>(single_expr(o), id))));
        return kExitPass;
    });
}

int cmd_pair(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    if (o.exprs.size() != 2) throw InvalidDescriptor("pair expects two expressions");
    return with_scalar(id, [&]<class S>() {
        const Element<S> x = parse_element<S>(o.exprs[0], id);
        const Element<S> a = parse_element<S>(o.exprs[1], dual_algebra(id));
        emit(out, o.json, "pair", ScalarTraits<S>::to_string(evaluate(x, a)));
        return kExitPass;
    });
}

int cmd_adl(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    if (!(id.is_q() || id.family == Family::C)) throw AlgebraMismatch("adl acts on Uq or C");
    return with_scalar(id, [&]<class S>() {
        emit(out, o.json, "adl", render(adjoint_coaction_direct(parse_element<S>(single_expr(o), id))));
        return kExitPass;
    });
}

int cmd_d(const Options& o, std::ostream& out) {
    return std::visit(
        [&]<class S>(const Calculus<S>& c) {
            emit(out, o.json, "d", render_gamma(d(c, parse_element<S>(single_expr(o), c.base))));
            return kExitPass;
        },
        build_family(o));
}

int cmd_derive(const Options& o, std::ostream& out) {
    return std::visit(
        [&]<class S>(const Calculus<S>& c) {
            if (o.index < 0 || o.index >= c.dim()) throw IndexOutOfRange("derivation index out of range");
            const Element<S> a = parse_element<S>(single_expr(o), c.base);
            const Element<S> closed = derivation_closed_form(c, o.index, symbol(a, c.ordering));
            const Element<S> oracle = derivation_oracle(c.tangent_basis[static_cast<std::size_t>(o.index)], a);
            const bool agree = closed == oracle;
            if (o.json) {
                out << nlohmann::json{{"command", "derive"},
                                      {"closed_form", render(closed)},
                                      {"oracle", render(oracle)},
                                      {"agree", agree}}
                           .dump(2)
                    << "\n";
            } else {
                out << "closed form: " << render(closed) << "\n";
                out << "oracle:      " << render(oracle) << "\n";
                out << (agree ? "agree" : "DISAGREE") << "\n";
            }
            return agree ? kExitPass : kExitFailure;
        },
        build_family(o));
}

int cmd_classify(const Options& o, std::ostream& out) {
    const AlgebraId id = parse_algebra(o.algebra, o.n);
    const std::set<int> set = as_set(o.set);
    if (set.empty()) throw InvalidDescriptor("classify needs --set");
    for (int n : set)
        if (n < 1) throw InvalidDescriptor("--set takes positive integers");
    const int sum = std::accumulate(set.begin(), set.end(), 0);
    return with_scalar(id, [&]<class S>() {
        const Truncation t = Truncation::for_sum(id, sum);
        ClosureStats st;
        GradedSubspace<S> m(id, t);
        if (id.family == Family::U) {
            if constexpr (std::is_same_v<S, Rational>)
                m = closure(classical_limit_ideal(set), OperatorFamily::LeftIdeal, id, t, &st);
        } else if (id.is_q() || id.family == Family::C) {
            ClassificationPair<S> pair(Element<S>::constant(id, S(1)), set);
            m = closure(canonical_crossed_submodule(pair), OperatorFamily::CrossedModule, id, t, &st);
        } else {
            throw AlgebraMismatch("classify works in Uq, C and U");
        }
        bool in_ker = true;
        for (const auto& b : m.basis()) in_ker = in_ker && counit(b).is_zero();
        const bool pass = m.codim() == sum && !st.boundary_warning;
        if (o.json) {
            out << nlohmann::json{{"command", "classify"},       {"algebra", id.name()},
                                  {"truncation", t.to_string()}, {"dim", m.dim()},
                                  {"codim", m.codim()},          {"expected_codim", sum},
                                  {"in_ker_counit", in_ker},     {"boundary_warning", st.boundary_warning},
                                  {"pass", pass}}
                       .dump(2)
                << "\n";
        } else {
            out << "algebra: " << id.name() << "\n";
            out << "truncation: " << t.to_string() << "\n";
            out << "dim: " << m.dim() << "\n";
            out << "codim: " << m.codim() << " (sum I = " << sum << ")\n";
            out << "in ker(eps): " << (in_ker ? "yes" : "no") << "\n";
            out << "boundary warning: " << (st.boundary_warning ? "yes" : "no") << "\n";
            out << (pass ? "PASS" : "FAIL") << "\n";
        }
        return pass ? kExitPass : kExitFailure;
    });
}

SuiteParams suite_params(const Options& o) {
    SuiteParams p;
    p.n = opt_n(o);
    if (o.degree >= 0) p.degree = o.degree;
    p.set = as_set(o.set);
    return p;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (!o.suite.empty()) {
        if (o.suite != "all") return emit_report(out, o.json, run_suite(o.suite, suite_params(o)));
        Report all;
        all.suite = "all";
        all.anchor = "every registered suite";
        for (const auto& r : run_suites(suite_names(), suite_params(o))) {
            for (auto rel : r.relations) {
                rel.id = r.suite + "/" + rel.id;
                all.relations.push_back(std::move(rel));
            }
        }
        return emit_report(out, o.json, all);
    }
    const int D = o.degree >= 0 ? o.degree : 4;
    return std::visit([&](const auto& c) { return emit_report(out, o.json, verify_relations(c, D)); }, build_family(o));
}

int cmd_kappa(const Options& o, std::ostream& out) {
    const int n = o.n > 0 ? o.n : 2;
    if (o.verify) {
        SuiteParams p;
        p.n = n;
        if (o.degree >= 0) p.degree = o.degree;
        return emit_report(out, o.json, run_suite("kappa", p));
    }
    const std::string& src = single_expr(o);
    if (o.integral) {
        const AlgebraId id = GaussianPoly::letters(n);
        const auto f = symbol(parse_element<Rational>(src, id), Ordering::Storage);
        emit(out, o.json, "kappa", gaussian_integral(GaussianPoly(n, f)).to_string());
        return kExitPass;
    }
    const auto c = build_kappa_calculus(n);
    emit(out, o.json, "kappa", render_gamma(d(c, parse_element<Rational>(src, c.base))));
    return kExitPass;
}

}  // namespace

AlgebraId parse_algebra(const std::string& name, int n) {
    if (name == "Uq" || name == "Uq_bplus") return AlgebraId::uq();
    if (name == "U" || name == "U_bplus") return AlgebraId::u();
    if (name == "C" || name == "C_bplus") return AlgebraId::c();
    if (name == "Un" || name == "U_bnplus") return AlgebraId::un(n > 0 ? n : 2);
    if (name == "Cn" || name == "C_bnplus") return AlgebraId::cn(n > 0 ? n : 2);
    throw InvalidDescriptor("unknown algebra '" + name + "' (Uq, U, C, Un, Cn)");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with differential calculi on q-deformed and classical Borel algebras", "qborel"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "Uq, U, C, Un or Cn")->capture_default_str();
        sub->add_option("--n", o.n, "rank for Un and Cn");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "q, classical, dual-classical, nat_bp or kappa")->capture_default_str();
        sub->add_option("--n", o.n, "calculus parameter n (default 2)");
        sub->add_option("--set", o.set, "comma list I for the q family")->delimiter(',');
    };
    auto add_exprs = [&](CLI::App* sub, const char* what) { sub->add_option("expr", o.exprs, what); };

    std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
    auto command = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", o.json, "machine-readable output");
        commands.emplace_back(sub, fn);
        return sub;
    };

    {
        auto* s = command("mul", "normal-ordered product of the expressions", cmd_mul);
        add_algebra(s);
        add_exprs(s, "factors");
    }
    {
        auto* s = command("coproduct", "coproduct of an element", cmd_coproduct);
        add_algebra(s);
        add_exprs(s, "element");
    }
    {
        auto* s = command("antipode", "antipode of an element", cmd_antipode);
        add_algebra(s);
        add_exprs(s, "element");
    }
    {
        auto* s = command("pair", "pairing of x in the algebra with a in its dual partner", cmd_pair);
        add_algebra(s);
        add_exprs(s, "x a");
    }
    {
        auto* s = command("adl", "adjoint coaction v_1 S(v_3) (x) v_2 on Uq or C", cmd_adl);
        add_algebra(s);
        add_exprs(s, "element");
    }
    {
        auto* s = command("d", "exterior derivative in a calculus", cmd_d);
        add_family(s);
        add_exprs(s, "element");
    }
    {
        auto* s = command("derive", "closed-form partial derivative against the pairing oracle", cmd_derive);
        add_family(s);
        s->add_option("--index", o.index, "derivation index i")->capture_default_str();
        add_exprs(s, "element");
    }
    {
        auto* s = command("classify", "closure of the canonical generators for a set I", cmd_classify);
        add_algebra(s);
        s->add_option("--set", o.set, "comma list I")->delimiter(',')->required();
    }
    {
        auto* s = command("verify", "run a verification suite or the relations of a calculus", cmd_verify);
        add_family(s);
        s->add_option("--suite", o.suite, "suite id, or all");
        s->add_option("--degree", o.degree, "degree bound");
    }
    {
        auto* s = command("kappa", "kappa-Minkowski space: d, Gaussian integrals, verification", cmd_kappa);
        s->add_option("--n", o.n, "dimension n (default 2)");
        s->add_option("--degree", o.degree, "degree bound for --verify");
        s->add_flag("--verify", o.verify, "run the kappa suite for n");
        s->add_flag("--integral", o.integral, "Gaussian integral of the symbol of the element");
        add_exprs(s, "element");
    }
    app.footer("Suites: " + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        for (const auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(o, out);
    } catch (const ReductionFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qborel
