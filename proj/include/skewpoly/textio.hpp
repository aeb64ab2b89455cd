/*
   Copyright 2026 The skewpoly authors

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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewpoly/scalar.hpp"

namespace skewpoly {

/// Canonical text form of a scalar; parse_scalar round-trips it exactly.
/// Grammar examples: "3", "-1/5", "w^2+1", "1/2+2/3*i-j", "y^2+y".
std::string scalar_to_string(const Scalar& a);
Scalar parse_scalar(const DomainPtr& dom, const std::string& text);

namespace detail {

// Shared expression front end: integers, names, + - * / ^, parentheses, unary
// minus, implicit multiplication ("2i", "(w+1)x"). Exponents are integer
// literals. The algebra adapter supplies the value type and operations.

enum class TokKind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s);

template <class Alg>
class ExprParser {
public:
    using Value = typename Alg::Value;

    ExprParser(const Alg& alg, const std::string& text)
        : alg_(alg), text_(text), toks_(tokenize(text)) {}

    Value parse() {
        Value v = expr();
        expect(TokKind::End, "end of input");
        return v;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(peek().pos) + " in \"" +
                         text_ + "\": expected " + what);
    }

    void expect(TokKind k, const char* what) {
        if (peek().kind != k) fail(what);
        ++i_;
    }

    static bool starts_factor(TokKind k) {
        return k == TokKind::Number || k == TokKind::Name || k == TokKind::LParen;
    }

    Value expr() {
        Value v = peek().kind == TokKind::Minus ? (take(), alg_.neg(term())) : term();
        for (;;) {
            if (peek().kind == TokKind::Plus) {
                take();
                v = alg_.add(v, term());
            } else if (peek().kind == TokKind::Minus) {
                take();
                v = alg_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        for (;;) {
            if (peek().kind == TokKind::Star) {
                take();
                v = alg_.mul(v, factor());
            } else if (peek().kind == TokKind::Slash) {
                take();
                v = alg_.div(v, factor());
            } else if (starts_factor(peek().kind)) {
                v = alg_.mul(v, factor());
            } else {
                return v;
            }
        }
    }

    Value factor() {
        if (peek().kind == TokKind::Minus) {
            take();
            return alg_.neg(factor());
        }
        Value v = atom();
        if (peek().kind == TokKind::Caret) {
            take();
            if (peek().kind != TokKind::Number) fail("integer exponent");
            v = alg_.pow(v, std::stoull(take().text));
        }
        return v;
    }

    Value atom() {
        switch (peek().kind) {
            case TokKind::Number: return alg_.number(take().text);
            case TokKind::Name: return alg_.name(take().text);
            case TokKind::LParen: {
                take();
                Value v = expr();
                expect(TokKind::RParen, "')'");
                return v;
            }
            default: fail("a number, name, or '('");
        }
    }

    const Alg& alg_;
    std::string text_;
    std::vector<Token> toks_;
    size_t i_ = 0;
};

/// Signed-sum printer helper: joins term strings with +/- based on the sign
/// flags, yielding "a-b+c" style output ("0" for no terms).
std::string join_signed_terms(const std::vector<std::pair<bool, std::string>>& terms);

/// Appends one product term "c*mono" to a signed-term list, extracting a
/// leading minus sign from the coefficient and parenthesizing compound
/// coefficients so the output re-parses exactly.
void append_coeff_term(const Scalar& c, const std::string& mono,
                       std::vector<std::pair<bool, std::string>>& terms);

/// Rational magnitude/coefficient fragments used by the printers.
std::string mpq_to_string(const mpq_class& q);

} // namespace detail

} // namespace skewpoly
