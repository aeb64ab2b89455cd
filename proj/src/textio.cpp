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

#include "skewpoly/textio.hpp"

#include <cctype>

namespace skewpoly {

namespace detail {

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({TokKind::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({TokKind::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '/': k = TokKind::Slash; break;
            case '^': k = TokKind::Caret; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i) + " in \"" + s + "\"");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({TokKind::End, "", s.size()});
    return out;
}

std::string join_signed_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, body] = terms[i];
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        out += body;
    }
    return out;
}

std::string mpq_to_string(const mpq_class& q) { return q.get_str(); }

void append_coeff_term(const Scalar& c, const std::string& mono,
                       std::vector<std::pair<bool, std::string>>& terms) {
    std::string s = scalar_to_string(c);
    bool negative = !s.empty() && s[0] == '-';
    // stringify the negation rather than dropping the sign character: for a
    // compound coefficient the leading '-' covers only the first addend
    std::string body = negative ? scalar_to_string(neg(c)) : s;
    if (body.find_first_of("+-*/") != std::string::npos) body = "(" + body + ")";
    if (mono.empty()) {
        terms.emplace_back(negative, body);
    } else if (body == "1") {
        terms.emplace_back(negative, mono);
    } else {
        terms.emplace_back(negative, body + "*" + mono);
    }
}

} // namespace detail

namespace {

// magnitude printer for one power-term c * name^i with c in the base field
// (term assumed nonzero); used by the polynomial-like domains
std::string power_term(const std::string& coeff, bool coeff_is_one, const std::string& name, uint32_t i) {
    if (i == 0) return coeff;
    std::string var = i == 1 ? name : name + "^" + std::to_string(i);
    if (coeff_is_one) return var;
    return coeff + "*" + var;
}

std::string uint_poly_string(const std::vector<uint64_t>& coeffs, const std::string& name) {
    std::vector<std::pair<bool, std::string>> terms;
    for (size_t idx = coeffs.size(); idx-- > 0;) {
        uint64_t c = coeffs[idx];
        if (c == 0) continue;
        terms.emplace_back(false, power_term(std::to_string(c), c == 1, name, static_cast<uint32_t>(idx)));
    }
    return detail::join_signed_terms(terms);
}

std::string mpq_poly_string(const std::vector<mpq_class>& coeffs, const std::string& name) {
    std::vector<std::pair<bool, std::string>> terms;
    for (size_t idx = coeffs.size(); idx-- > 0;) {
        const mpq_class& c = coeffs[idx];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        terms.emplace_back(c < 0, power_term(mag.get_str(), mag == 1, name, static_cast<uint32_t>(idx)));
    }
    return detail::join_signed_terms(terms);
}

struct ScalarAlg {
    using Value = Scalar;
    DomainPtr dom;

    Value number(const std::string& digits) const { return dom->from_mpq(mpq_class(digits)); }
    Value name(const std::string& id) const {
        if (dom->kind() == DomainKind::Quaternions) {
            if (id == "i") return dom->quat(0, 1, 0, 0);
            if (id == "j") return dom->quat(0, 0, 1, 0);
            if (id == "k") return dom->quat(0, 0, 0, 1);
        } else if (id == dom->gen_name()) {
            return dom->gen();
        }
        throw ParseError("unknown name \"" + id + "\" in domain " + dom->describe());
    }
    Value add(const Value& a, const Value& b) const { return skewpoly::add(a, b); }
    Value sub(const Value& a, const Value& b) const { return skewpoly::sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return skewpoly::mul(a, b); }
    Value div(const Value& a, const Value& b) const { return skewpoly::mul(a, inv(b)); }
    Value neg(const Value& a) const { return skewpoly::neg(a); }
    Value pow(const Value& a, uint64_t e) const { return pow_u(a, e); }
};

} // namespace

std::string scalar_to_string(const Scalar& a) {
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: return std::to_string(a.u[0]);
        case DomainKind::GaloisField: return uint_poly_string(a.u, a.dom->gen_name());
        case DomainKind::Rationals: return a.r[0].get_str();
        case DomainKind::Quaternions: {
            static const char* names[4] = {"", "i", "j", "k"};
            std::vector<std::pair<bool, std::string>> terms;
            for (int idx = 0; idx < 4; ++idx) {
                const mpq_class& c = a.r[idx];
                if (c == 0) continue;
                mpq_class mag = abs(c);
                if (idx == 0) {
                    terms.emplace_back(c < 0, mag.get_str());
                } else if (mag == 1) {
                    terms.emplace_back(c < 0, names[idx]);
                } else {
                    terms.emplace_back(c < 0, mag.get_str() + "*" + names[idx]);
                }
            }
            return detail::join_signed_terms(terms);
        }
        case DomainKind::PolyPrime: return uint_poly_string(a.u, a.dom->gen_name());
        case DomainKind::PolyRational: return mpq_poly_string(a.r, a.dom->gen_name());
    }
    return "?";
}

Scalar parse_scalar(const DomainPtr& dom, const std::string& text) {
    ScalarAlg alg{dom};
    return detail::ExprParser<ScalarAlg>(alg, text).parse();
}

} // namespace skewpoly
