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

#include "qborel/parse.hpp"

#include <cctype>

namespace qborel {

bool Expr::contains_q() const {
    if (kind == Kind::Q) return true;
    for (const auto& a : args)
        if (a.contains_q()) return true;
    return false;
}

bool Expr::contains_generator() const {
    if (kind == Kind::Generator) return true;
    for (const auto& a : args)
        if (a.contains_generator()) return true;
    return false;
}

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::Number: return value.to_string();
        case Kind::Q: return "q";
        case Kind::Generator: return name;
        case Kind::Neg: return "(- " + args[0].to_string() + ")";
        case Kind::Add: return "(+ " + args[0].to_string() + " " + args[1].to_string() + ")";
        case Kind::Sub: return "(- " + args[0].to_string() + " " + args[1].to_string() + ")";
        case Kind::Mul: return "(* " + args[0].to_string() + " " + args[1].to_string() + ")";
        case Kind::Div: return "(/ " + args[0].to_string() + " " + args[1].to_string() + ")";
        case Kind::Pow: {
            const Expr& b = args[0];
            const bool atom = b.kind == Kind::Number || b.kind == Kind::Q || b.kind == Kind::Generator;
            if (atom) return b.to_string() + "^" + std::to_string(exponent);
            return "(^ " + b.to_string() + " " + std::to_string(exponent) + ")";
        }
    }
    return "?";
}

namespace {

struct Token {
    enum class Type { Number, Ident, Op, End };
    Type type = Type::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Type::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            std::string id(src.substr(start, i - start));
            const bool plain = id == "X" || id == "g" || id == "H" || id == "q";
            const bool indexed = id.size() == 2 && (id[0] == 'x' || (id[0] == 'p' && id[1] != '0'));
            if (!plain && !indexed) throw ParseError(start, "unknown symbol '" + id + "'");
            out.push_back({Token::Type::Ident, id, start});
            continue;
        }
        if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Type::Op, std::string(1, c), start});
            ++i;
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Type::End, "", src.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Expr parse_all() {
        if (peek().type == Token::Type::End) throw ParseError(0, "empty expression");
        Expr e = expr();
        if (peek().type != Token::Type::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
        return e;
    }

   private:
    const Token& peek() const { return toks_[i_]; }
    bool is_op(const char* s) const { return peek().type == Token::Type::Op && peek().text == s; }
    Token take() { return toks_[i_++]; }

    static Expr binary(Expr::Kind k, Expr a, Expr b, std::size_t pos) {
        Expr e;
        e.kind = k;
        e.pos = pos;
        e.args = {std::move(a), std::move(b)};
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        while (is_op("+") || is_op("-")) {
            const Token op = take();
            Expr rhs = term();
            lhs = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), std::move(rhs), op.pos);
        }
        return lhs;
    }

    bool starts_primary() const {
        return peek().type == Token::Type::Number || peek().type == Token::Type::Ident || is_op("(");
    }

    Expr term() {
        Expr lhs = unary();
        bool seen_generator = lhs.contains_generator();
        while (is_op("*") || is_op("/") || starts_primary()) {
            Expr::Kind kind = Expr::Kind::Mul;
            std::size_t pos = peek().pos;
            if (is_op("*") || is_op("/")) {
                kind = take().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
                pos = peek().pos;
            }
            Expr rhs = unary();
            if (seen_generator && rhs.contains_q() && !rhs.contains_generator())
                throw ParseError(pos, "q may only appear in a coefficient, before the generators");
            seen_generator = seen_generator || rhs.contains_generator();
            lhs = binary(kind, std::move(lhs), std::move(rhs), pos);
        }
        return lhs;
    }

    Expr unary() {
        if (is_op("-")) {
            const Token op = take();
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.pos = op.pos;
            e.args = {unary()};
            return e;
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!is_op("^")) return base;
        take();
        const std::size_t pos = peek().pos;
        bool paren = false;
        if (is_op("(")) {
            take();
            paren = true;
        }
        bool negative = false;
        if (is_op("-")) {
            take();
            negative = true;
        }
        if (peek().type != Token::Type::Number) throw ParseError(pos, "exponent must be an integer");
        const Token num = take();
        if (paren) {
            if (!is_op(")")) throw ParseError(pos, "exponent must be an integer");
            take();
        }
        if (num.text.size() > 6) throw ParseError(num.pos, "exponent too large");
        Expr e;
        e.kind = Expr::Kind::Pow;
        e.pos = base.pos;
        e.exponent = (negative ? -1 : 1) * std::stoi(num.text);
        e.args = {std::move(base)};
        if (is_op("^")) throw ParseError(peek().pos, "nested exponents need parentheses");
        return e;
    }

    Expr primary() {
        const Token t = peek();
        if (t.type == Token::Type::Number) {
            take();
            Expr e;
            e.kind = Expr::Kind::Number;
            e.value = Rational::parse(t.text);
            e.pos = t.pos;
            return e;
        }
        if (t.type == Token::Type::Ident) {
            take();
            Expr e;
            e.kind = t.text == "q" ? Expr::Kind::Q : Expr::Kind::Generator;
            e.name = t.text;
            e.pos = t.pos;
            return e;
        }
        if (is_op("(")) {
            take();
            Expr e = expr();
            if (!is_op(")")) throw ParseError(peek().pos, "expected ')'");
            take();
            return e;
        }
        if (t.type == Token::Type::End) throw ParseError(t.pos, "unexpected end of input");
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

Expr parse(std::string_view src) {
    return Parser(src).parse_all();
}

namespace {

void check_letters(const Expr& e, const AlgebraId& id) {
    if (e.kind == Expr::Kind::Generator) {
        bool known = e.name == id.col_name();
        for (int i = 0; i < id.x_count() && !known; ++i) known = e.name == id.x_name(i);
        if (!known) throw ParseError(e.pos, "'" + e.name + "' is not a generator of " + id.name());
    }
    for (const auto& a : e.args) check_letters(a, id);
}

}  // namespace

Expr parse(std::string_view src, const AlgebraId& id) {
    Expr e = parse(src);
    check_letters(e, id);
    return e;
}

}  // namespace qborel
