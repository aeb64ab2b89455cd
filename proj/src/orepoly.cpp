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

#include "skewpoly/orepoly.hpp"

#include "skewpoly/textio.hpp"

namespace skewpoly {

OreRingPtr OreRing::make(DomainPtr dom, EndoSpec sigma, DerSpec delta, std::string var) {
    if (!sigma.domain()->equals(*dom)) throw DomainMismatch("twist endomorphism must act on the coefficient domain");
    if (!delta.domain()->equals(*dom)) throw DomainMismatch("derivation must act on the coefficient domain");
    if (var.empty()) throw InvalidConstruction("variable needs a name");
    if (dom->gen_name() == var) throw InvalidConstruction("variable name collides with the coefficient generator");
    auto r = std::shared_ptr<OreRing>(new OreRing());
    r->dom_ = std::move(dom);
    r->sigma_ = std::move(sigma);
    r->delta_ = std::move(delta);
    r->var_ = std::move(var);
    return r;
}

bool OreRing::equals(const OreRing& o) const {
    return dom_->equals(*o.dom_) && var_ == o.var_ && sigma_.same_map(o.sigma_) &&
           delta_.same_map(o.delta_);
}

std::string OreRing::describe() const {
    return dom_->describe() + "[" + var_ + ";" + sigma_.describe() + "," + delta_.describe() + "]";
}

namespace {
void require_same_ring(const OrePoly& f, const OrePoly& g, const char* op) {
    if (!f.ring() || !g.ring() || !(f.ring() == g.ring() || f.ring()->equals(*g.ring()))) {
        throw DomainMismatch(std::string(op) + ": operands from different rings");
    }
}
} // namespace

OrePoly ore_normalize(OreRingPtr ring, std::vector<Scalar> c) {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
    OrePoly f(std::move(ring));
    f.c_ = std::move(c);
    return f;
}

OrePoly OrePoly::from_coeffs(OreRingPtr ring, std::vector<Scalar> ascending) {
    for (const auto& c : ascending) {
        if (!c.dom->equals(*ring->domain())) throw DomainMismatch("coefficient outside the ring domain");
    }
    return ore_normalize(std::move(ring), std::move(ascending));
}

OrePoly OrePoly::monomial(OreRingPtr ring, const Scalar& c, uint32_t k) {
    std::vector<Scalar> v(k + 1, ring->domain()->zero());
    v[k] = c;
    return from_coeffs(std::move(ring), std::move(v));
}

Scalar OrePoly::coeff(uint32_t i) const {
    return i < c_.size() ? c_[i] : ring_->domain()->zero();
}

Scalar OrePoly::lead() const {
    if (is_zero()) throw DivisionByZero("leading coefficient of the zero polynomial");
    return c_.back();
}

bool OrePoly::operator==(const OrePoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!equal(c_[i], o.c_[i])) return false;
    }
    return true;
}

OrePoly ore_add(const OrePoly& f, const OrePoly& g) {
    require_same_ring(f, g, "ore_add");
    std::vector<Scalar> c(std::max(f.coeffs().size(), g.coeffs().size()), f.ring()->domain()->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = add(f.coeff(static_cast<uint32_t>(i)), g.coeff(static_cast<uint32_t>(i)));
    }
    return ore_normalize(f.ring(), std::move(c));
}

OrePoly ore_neg(const OrePoly& f) {
    std::vector<Scalar> c = f.coeffs();
    for (auto& x : c) x = neg(x);
    return ore_normalize(f.ring(), std::move(c));
}

OrePoly ore_sub(const OrePoly& f, const OrePoly& g) { return ore_add(f, ore_neg(g)); }

OrePoly ore_scalar_mul(const Scalar& c, const OrePoly& f) {
    std::vector<Scalar> v = f.coeffs();
    for (auto& x : v) x = mul(c, x);
    return ore_normalize(f.ring(), std::move(v));
}

namespace {
// x * h, one application of the commutation rule per coefficient
OrePoly var_times(const OrePoly& h) {
    const auto& ring = h.ring();
    std::vector<Scalar> c(h.coeffs().size() + 1, ring->domain()->zero());
    for (size_t j = 0; j < h.coeffs().size(); ++j) {
        const Scalar& a = h.coeffs()[j];
        c[j + 1] = add(c[j + 1], ring->sigma().apply(a));
        c[j] = add(c[j], ring->delta().apply(a));
    }
    return ore_normalize(ring, std::move(c));
}
} // namespace

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
    require_same_ring(f, g, "ore_mul");
    OrePoly acc(f.ring());
    OrePoly shifted = g; // x^i * g, built up incrementally
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (!is_zero(f.coeffs()[i])) {
            acc = ore_add(acc, ore_scalar_mul(f.coeffs()[i], shifted));
        }
        if (i + 1 < f.coeffs().size()) shifted = var_times(shifted);
    }
    return acc;
}

OrePoly ore_monic(const OrePoly& f) {
    if (f.is_zero()) return f;
    return ore_scalar_mul(inv(f.lead()), f);
}

OrePoly ore_pow(const OrePoly& f, uint32_t e) {
    OrePoly acc = OrePoly::monomial(f.ring(), f.ring()->domain()->one(), 0);
    for (uint32_t i = 0; i < e; ++i) acc = ore_mul(acc, f);
    return acc;
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g) {
    require_same_ring(f, g, "right_divmod");
    if (g.is_zero()) throw DivisionByZero("right division by zero");
    const auto& ring = f.ring();
    OrePoly q(ring), r = f;
    std::vector<Scalar> qc;
    if (r.degree() >= g.degree()) {
        qc.assign(static_cast<size_t>(r.degree() - g.degree()) + 1, ring->domain()->zero());
    }
    while (r.degree() >= g.degree()) {
        uint32_t d = static_cast<uint32_t>(r.degree() - g.degree());
        // (c x^d) * g has leading coefficient c * sigma^d(lc(g))
        Scalar tw = ring->sigma().power(d).apply(g.lead());
        Scalar c = mul(r.lead(), inv(tw));
        qc[d] = add(qc[d], c);
        r = ore_sub(r, ore_mul(OrePoly::monomial(ring, c, d), g));
    }
    return {ore_normalize(ring, std::move(qc)), r};
}

std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g) {
    require_same_ring(f, g, "left_divmod");
    if (g.is_zero()) throw DivisionByZero("left division by zero");
    if (!f.ring()->sigma().is_automorphism()) {
        throw UnsupportedRing("left division needs an invertible twist");
    }
    const auto& ring = f.ring();
    EndoSpec sig_inv = ring->sigma().inverse();
    OrePoly r = f;
    std::vector<Scalar> qc;
    if (r.degree() >= g.degree()) {
        qc.assign(static_cast<size_t>(r.degree() - g.degree()) + 1, ring->domain()->zero());
    }
    while (r.degree() >= g.degree()) {
        uint32_t d = static_cast<uint32_t>(r.degree() - g.degree());
        // g * (c x^d) has leading coefficient lc(g) * sigma^(deg g)(c)
        Scalar c = sig_inv.power(static_cast<uint64_t>(g.degree())).apply(mul(inv(g.lead()), r.lead()));
        qc[d] = add(qc[d], c);
        r = ore_sub(r, ore_mul(g, OrePoly::monomial(ring, c, d)));
    }
    return {ore_normalize(ring, std::move(qc)), r};
}

std::vector<OrePoly> all_monic(const OreRingPtr& ring, uint32_t deg) {
    const DomainPtr& dom = ring->domain();
    if (!dom->is_finite()) throw UnsupportedRing("exhaustive enumeration needs a finite coefficient field");
    uint64_t q = dom->size();
    uint64_t count = 1;
    for (uint32_t i = 0; i < deg; ++i) count *= q;
    std::vector<OrePoly> out;
    out.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Scalar> c(deg + 1, dom->zero());
        uint64_t t = idx;
        for (uint32_t i = 0; i < deg; ++i) {
            c[i] = dom->element_at(t % q);
            t /= q;
        }
        c[deg] = dom->one();
        out.push_back(OrePoly::from_coeffs(ring, std::move(c)));
    }
    return out;
}

bool ore_irreducible(const OrePoly& f) {
    const auto& ring = f.ring();
    if (!ring->domain()->is_finite()) {
        throw UnsupportedRing("irreducibility search needs a finite coefficient field");
    }
    if (f.degree() < 1) throw InvalidConstruction("irreducibility is defined for degree >= 1");
    if (!is_one(f.lead())) throw InvalidConstruction("irreducibility expects a monic polynomial");
    for (uint32_t e = 1; e < static_cast<uint32_t>(f.degree()); ++e) {
        for (const OrePoly& g : all_monic(ring, e)) {
            if (right_divmod(f, g).second.is_zero()) return false;
        }
    }
    return true;
}

std::optional<OrePoly> minimal_invariant_poly(const OreRingPtr& ring, uint32_t degcap) {
    const DomainPtr& dom = ring->domain();
    if (!dom->is_finite()) {
        throw UnsupportedRing("invariant-polynomial search needs a finite coefficient field");
    }
    OrePoly x = OrePoly::monomial(ring, dom->one(), 1);
    std::vector<Scalar> gens = dom->generators();
    for (uint32_t d = 1; d <= degcap; ++d) {
        for (const OrePoly& q : all_monic(ring, d)) {
            bool ok = right_divmod(ore_mul(q, x), q).second.is_zero() &&
                      left_divmod(ore_mul(x, q), q).second.is_zero();
            for (size_t i = 0; ok && i < gens.size(); ++i) {
                OrePoly cq = ore_scalar_mul(gens[i], q); // a * q
                OrePoly qc = ore_mul(q, OrePoly::monomial(ring, gens[i], 0)); // q * a
                ok = right_divmod(qc, q).second.is_zero() && left_divmod(cq, q).second.is_zero();
            }
            if (ok) return q;
        }
    }
    return std::nullopt;
}

namespace {

struct OrePolyAlg {
    using Value = OrePoly;
    OreRingPtr ring;

    Value constant(const Scalar& s) const { return OrePoly::monomial(ring, s, 0); }
    Value number(const std::string& digits) const {
        return constant(ring->domain()->from_mpq(mpq_class(digits)));
    }
    Value name(const std::string& id) const {
        if (id == ring->var()) return OrePoly::monomial(ring, ring->domain()->one(), 1);
        return constant(parse_scalar(ring->domain(), id));
    }
    Value add(const Value& a, const Value& b) const { return ore_add(a, b); }
    Value sub(const Value& a, const Value& b) const { return ore_sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return ore_mul(a, b); }
    Value div(const Value& a, const Value& b) const {
        if (b.degree() != 0) throw ParseError("division is only defined by invertible scalars");
        return ore_scalar_mul(inv(b.coeff(0)), a);
    }
    Value neg(const Value& a) const { return ore_neg(a); }
    Value pow(const Value& a, uint64_t e) const { return ore_pow(a, static_cast<uint32_t>(e)); }
};

} // namespace

std::string ore_poly_to_string(const OrePoly& f) {
    std::vector<std::pair<bool, std::string>> terms;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        const Scalar& c = f.coeffs()[i];
        if (is_zero(c)) continue;
        std::string mono;
        if (i >= 1) {
            mono = f.ring()->var();
            if (i > 1) mono += "^" + std::to_string(i);
        }
        detail::append_coeff_term(c, mono, terms);
    }
    return detail::join_signed_terms(terms);
}

OrePoly parse_ore_poly(const OreRingPtr& ring, const std::string& text) {
    OrePolyAlg alg{ring};
    return detail::ExprParser<OrePolyAlg>(alg, text).parse();
}

} // namespace skewpoly
