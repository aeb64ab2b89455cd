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

#include "skewpoly/pid.hpp"

#include <algorithm>

#include "skewpoly/detail/modvec.hpp"

namespace skewpoly {

namespace {

void require_poly(const Scalar& a, const char* op) {
    if (!a.dom || !a.dom->is_poly()) {
        throw InvalidConstruction(std::string(op) + " requires a univariate polynomial domain");
    }
}

std::vector<mpq_class> qtrim(std::vector<mpq_class> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Scalar from_qvec(const DomainPtr& dom, std::vector<mpq_class> v) {
    Scalar s;
    s.dom = dom;
    s.r = qtrim(std::move(v));
    return s;
}

Scalar from_uvec(const DomainPtr& dom, detail::Vec v) {
    Scalar s;
    s.dom = dom;
    detail::vtrim(v);
    s.u = std::move(v);
    return s;
}

} // namespace

std::pair<Scalar, Scalar> pid_divmod(const Scalar& a, const Scalar& b) {
    require_poly(a, "pid_divmod");
    require_same_domain(a, b, "pid_divmod");
    if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
    if (a.dom->kind() == DomainKind::PolyPrime) {
        auto [q, r] = detail::vdivmod(a.u, b.u, a.dom->char_p());
        return {from_uvec(a.dom, std::move(q)), from_uvec(a.dom, std::move(r))};
    }
    std::vector<mpq_class> r = a.r, q;
    const auto& d = b.r;
    int db = static_cast<int>(d.size()) - 1;
    auto deg = [](const std::vector<mpq_class>& v) { return static_cast<int>(v.size()) - 1; };
    if (deg(r) >= db) q.assign(static_cast<size_t>(deg(r) - db) + 1, mpq_class(0));
    while (deg(r) >= db) {
        size_t shift = static_cast<size_t>(deg(r) - db);
        mpq_class c = r.back() / d.back();
        c.canonicalize();
        q[shift] = c;
        for (size_t i = 0; i < d.size(); ++i) {
            r[shift + i] -= c * d[i];
            r[shift + i].canonicalize();
        }
        r = qtrim(std::move(r));
    }
    return {from_qvec(a.dom, std::move(q)), from_qvec(a.dom, std::move(r))};
}

bool pid_divides(const Scalar& a, const Scalar& b) {
    if (is_zero(a)) return is_zero(b);
    if (is_zero(b)) return true;
    return is_zero(pid_divmod(b, a).second);
}

Scalar pid_monic(const Scalar& a) {
    require_poly(a, "pid_monic");
    if (is_zero(a)) return a;
    Scalar lead = poly_lead(a);
    Scalar li = inv(lead);
    // scale every coefficient by the leading inverse
    int d = poly_degree(a);
    std::vector<Scalar> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(mul(poly_coeff(a, static_cast<uint32_t>(i)), li));
    return poly_build(a.dom, coeffs);
}

Scalar pid_gcd(const Scalar& a, const Scalar& b) {
    require_poly(a, "pid_gcd");
    require_same_domain(a, b, "pid_gcd");
    Scalar x = a, y = b;
    while (!is_zero(y)) {
        Scalar r = pid_divmod(x, y).second;
        x = y;
        y = r;
    }
    return pid_monic(x);
}

PidExt pid_ext_gcd(const Scalar& a, const Scalar& b) {
    require_poly(a, "pid_ext_gcd");
    require_same_domain(a, b, "pid_ext_gcd");
    const DomainPtr& dom = a.dom;
    Scalar r0 = a, r1 = b;
    Scalar s0 = dom->one(), s1 = dom->zero();
    Scalar t0 = dom->zero(), t1 = dom->one();
    while (!is_zero(r1)) {
        auto [q, r] = pid_divmod(r0, r1);
        Scalar ns = sub(s0, mul(q, s1));
        Scalar nt = sub(t0, mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (!is_zero(r0)) {
        Scalar c = poly_build(dom, {inv(poly_lead(r0))});
        r0 = mul(r0, c);
        s0 = mul(s0, c);
        t0 = mul(t0, c);
    }
    return {r0, s0, t0};
}

bool pid_irreducible(const Scalar& a) {
    require_poly(a, "pid_irreducible");
    if (a.dom->kind() != DomainKind::PolyPrime) {
        throw UnsupportedRing("irreducibility testing is implemented over F_p[y] only");
    }
    if (poly_degree(a) < 1) return false;
    return detail::virreducible(detail::vmonic(a.u, a.dom->char_p()), a.dom->char_p());
}

PidFactorization pid_factor(const Scalar& a) {
    require_poly(a, "pid_factor");
    if (a.dom->kind() != DomainKind::PolyPrime) {
        throw UnsupportedRing("factorization is implemented over F_p[y] only");
    }
    if (is_zero(a)) throw DivisionByZero("factoring zero");
    PidFactorization out;
    const DomainPtr& dom = a.dom;
    out.unit = poly_build(dom, {poly_lead(a)});
    Scalar rem = pid_monic(a);
    MaximalIdealStream stream(dom);
    while (poly_degree(rem) > 0) {
        Scalar cand = stream.next();
        if (2 * poly_degree(cand) > poly_degree(rem)) {
            // remainder itself is irreducible
            out.factors.emplace_back(rem, 1);
            break;
        }
        int mult = 0;
        while (pid_divides(cand, rem)) {
            rem = pid_divmod(rem, cand).first;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(cand, mult);
    }
    return out;
}

MaximalIdealStream::MaximalIdealStream(DomainPtr dom) : dom_(std::move(dom)) {
    if (dom_->kind() != DomainKind::PolyPrime) {
        throw UnsupportedRing("maximal ideal enumeration is implemented over F_p[y] only");
    }
    span_ = dom_->char_p();
}

Scalar MaximalIdealStream::next() {
    const uint64_t p = dom_->char_p();
    for (;;) {
        if (idx_ == span_) {
            ++deg_;
            idx_ = 0;
            span_ *= p;
        }
        detail::Vec v(deg_ + 1, 0);
        uint64_t t = idx_++;
        for (uint32_t i = 0; i < deg_; ++i) {
            v[i] = t % p;
            t /= p;
        }
        v[deg_] = 1;
        if (detail::virreducible(v, p)) {
            Scalar s;
            s.dom = dom_;
            s.u = std::move(v);
            return s;
        }
    }
}

} // namespace skewpoly
