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

#include "skewpoly/skewring.hpp"

#include <algorithm>

#include "skewpoly/textio.hpp"

namespace skewpoly {

RingPtr RingDescriptor::make(DomainPtr dom, std::vector<std::string> vars,
                             std::vector<EndoSpec> sigma, std::vector<DerSpec> delta,
                             std::map<std::pair<uint32_t, uint32_t>, Scalar> commutators,
                             TermOrderSpec order) {
    if (vars.empty()) throw InvalidConstruction("a skew ring needs at least one variable");
    if (sigma.size() != vars.size() || delta.size() != vars.size()) {
        throw InvalidConstruction("one twist and one derivation required per variable");
    }
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw InvalidConstruction("variable needs a name");
        if (vars[i] == dom->gen_name()) {
            throw InvalidConstruction("variable name collides with the coefficient generator");
        }
        for (size_t j = i + 1; j < vars.size(); ++j) {
            if (vars[i] == vars[j]) throw InvalidConstruction("duplicate variable name " + vars[i]);
        }
        if (!sigma[i].domain()->equals(*dom)) throw DomainMismatch("twist acts outside the coefficient domain");
        if (!delta[i].domain()->equals(*dom)) throw DomainMismatch("derivation acts outside the coefficient domain");
    }
    for (const auto& [ij, d] : commutators) {
        if (ij.first >= ij.second || ij.second >= vars.size()) {
            throw InvalidConstruction("commutator index pair must satisfy i < j < arity");
        }
        if (!d.dom->equals(*dom)) throw DomainMismatch("commutator constant outside the coefficient domain");
    }
    if (!order.prio.empty()) {
        if (order.prio.size() != vars.size()) throw InvalidConstruction("order priority arity mismatch");
        std::vector<bool> seen(vars.size(), false);
        for (uint32_t v : order.prio) {
            if (v >= vars.size() || seen[v]) throw InvalidConstruction("order priority is not a permutation");
            seen[v] = true;
        }
    }
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->dom_ = std::move(dom);
    r->vars_ = std::move(vars);
    r->sigma_ = std::move(sigma);
    r->delta_ = std::move(delta);
    for (auto& [ij, d] : commutators) {
        if (!is_zero(d)) r->comm_.emplace(ij, d);
    }
    r->order_ = std::move(order);
    return r;
}

RingPtr RingDescriptor::make_uniform(DomainPtr dom, std::vector<std::string> vars,
                                     const EndoSpec& sigma, const DerSpec& delta,
                                     std::map<std::pair<uint32_t, uint32_t>, Scalar> commutators,
                                     TermOrderSpec order) {
    std::vector<EndoSpec> sigmas(vars.size(), sigma);
    std::vector<DerSpec> deltas(vars.size(), delta);
    return make(std::move(dom), std::move(vars), std::move(sigmas), std::move(deltas),
                std::move(commutators), std::move(order));
}

Scalar RingDescriptor::commutator(uint32_t i, uint32_t j) const {
    if (i >= j) throw InvalidConstruction("commutator(i,j) requires i < j");
    auto it = comm_.find({i, j});
    return it == comm_.end() ? dom_->zero() : it->second;
}

int RingDescriptor::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

RingPtr RingDescriptor::with_order(TermOrderSpec order) const {
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor(*this));
    r->order_ = std::move(order);
    return r;
}

bool RingDescriptor::equals(const RingDescriptor& o) const {
    if (!dom_->equals(*o.dom_) || vars_ != o.vars_ || order_ != o.order_) return false;
    for (size_t k = 0; k < vars_.size(); ++k) {
        if (!sigma_[k].same_map(o.sigma_[k]) || !delta_[k].same_map(o.delta_[k])) return false;
    }
    if (comm_.size() != o.comm_.size()) return false;
    for (const auto& [ij, d] : comm_) {
        auto it = o.comm_.find(ij);
        if (it == o.comm_.end() || !equal(d, it->second)) return false;
    }
    return true;
}

std::string RingDescriptor::describe() const {
    std::string s = dom_->describe() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += ";";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += sigma_[i].describe();
    }
    s += ";";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += delta_[i].describe();
    }
    return s + "] " + order_.describe();
}

SkewPoly::SkewPoly(RingPtr ring) : ring_(std::move(ring)), terms_(TermLess{ring_->order()}) {}

SkewPoly SkewPoly::constant(RingPtr ring, const Scalar& c) {
    MultiIndex z = mi_zero(ring->arity());
    return monomial(std::move(ring), z, c);
}

SkewPoly SkewPoly::monomial(RingPtr ring, const MultiIndex& u, const Scalar& c) {
    if (u.arity() != ring->arity()) throw InvalidConstruction("monomial arity mismatch");
    if (!c.dom->equals(*ring->domain())) throw DomainMismatch("coefficient outside the ring domain");
    SkewPoly f(std::move(ring));
    if (!skewpoly::is_zero(c)) f.terms_.emplace(u, c);
    return f;
}

SkewPoly SkewPoly::variable(RingPtr ring, uint32_t k) {
    if (k >= ring->arity()) throw InvalidConstruction("variable index out of range");
    const Scalar one = ring->domain()->one();
    MultiIndex u = mi_unit(ring->arity(), k);
    return monomial(std::move(ring), u, one);
}

Scalar SkewPoly::coeff(const MultiIndex& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? ring_->domain()->zero() : it->second;
}

int64_t SkewPoly::total_degree() const {
    int64_t d = -1;
    for (const auto& [u, c] : terms_) d = std::max<int64_t>(d, static_cast<int64_t>(u.total()));
    return d;
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [u, c] : terms_) {
        if (u != it->first || !equal(c, it->second)) return false;
        ++it;
    }
    return true;
}

void SkewPoly::add_term(const MultiIndex& u, const Scalar& c) {
    if (skewpoly::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(u, c);
    if (!inserted) {
        it->second = add(it->second, c);
        if (skewpoly::is_zero(it->second)) terms_.erase(it);
    }
}

namespace {
void require_same_ring(const SkewPoly& f, const SkewPoly& g, const char* op) {
    if (!f.ring() || !g.ring() || !(f.ring() == g.ring() || f.ring()->equals(*g.ring()))) {
        throw DomainMismatch(std::string(op) + ": operands from different rings");
    }
}
} // namespace

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g, "skew_add");
    SkewPoly h = f;
    for (const auto& [u, c] : g.terms()) h.add_term(u, c);
    return h;
}

SkewPoly skew_neg(const SkewPoly& f) {
    SkewPoly h(f.ring());
    for (const auto& [u, c] : f.terms()) h.add_term(u, neg(c));
    return h;
}

SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, skew_neg(g)); }

SkewPoly skew_scalar_mul(const Scalar& c, const SkewPoly& f) {
    SkewPoly h(f.ring());
    for (const auto& [u, a] : f.terms()) h.add_term(u, mul(c, a));
    return h;
}

namespace {

SkewPoly mono_var_left(const RingPtr& ring, uint32_t k, const MultiIndex& u);

// x_k * h in normal form
SkewPoly var_left(const RingPtr& ring, uint32_t k, const SkewPoly& h) {
    SkewPoly out(h.ring());
    const EndoSpec& sig = ring->sigma(k);
    const DerSpec& del = ring->delta(k);
    for (const auto& [v, c] : h.terms()) {
        Scalar sc = sig.apply(c);
        if (!is_zero(sc)) {
            SkewPoly shifted = mono_var_left(ring, k, v);
            for (const auto& [w, d] : shifted.terms()) {
                out.add_term(w, mul(sc, d));
            }
        }
        out.add_term(v, del.apply(c));
    }
    return out;
}

// normal form of x_k * x^u
SkewPoly mono_var_left(const RingPtr& ring, uint32_t k, const MultiIndex& u) {
    // smallest variable present in u
    uint32_t a = u.arity();
    for (uint32_t i = 0; i < u.arity(); ++i) {
        if (u.e[i] > 0) {
            a = i;
            break;
        }
    }
    if (a >= k || a == u.arity()) {
        // x_k already slots in front of every variable of u
        return SkewPoly::monomial(ring, mi_add(u, mi_unit(u.arity(), k)), ring->domain()->one());
    }
    // x_k x_a = x_a x_k + d_{ak}
    MultiIndex rest = *mi_sub(u, mi_unit(u.arity(), a));
    SkewPoly inner = mono_var_left(ring, k, rest);
    SkewPoly out = var_left(ring, a, inner);
    Scalar d = ring->commutator(a, k);
    if (!is_zero(d)) out.add_term(rest, d);
    return out;
}

// normal form of x^w * g
SkewPoly mono_times(const RingPtr& ring, const MultiIndex& w, const SkewPoly& g) {
    SkewPoly h = g;
    for (uint32_t k = w.arity(); k-- > 0;) {
        for (uint32_t rep = 0; rep < w.e[k]; ++rep) h = var_left(ring, k, h);
    }
    return h;
}

} // namespace

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g, "skew_mul");
    SkewPoly out(f.ring());
    for (const auto& [u, a] : f.terms()) {
        SkewPoly part = mono_times(f.ring(), u, g);
        for (const auto& [v, c] : part.terms()) out.add_term(v, mul(a, c));
    }
    return out;
}

SkewPoly skew_pow(const SkewPoly& f, uint32_t e) {
    SkewPoly acc = SkewPoly::constant(f.ring(), f.ring()->domain()->one());
    for (uint32_t i = 0; i < e; ++i) acc = skew_mul(acc, f);
    return acc;
}

LeadingData leading(const SkewPoly& f) {
    LeadingData ld;
    if (f.is_zero()) return ld;
    auto it = std::prev(f.terms().end());
    ld.zero = false;
    ld.exp = it->first;
    ld.coeff = it->second;
    return ld;
}

LeadingData leading(const SkewPoly& f, const TermOrderSpec& order) {
    LeadingData ld;
    for (const auto& [u, c] : f.terms()) {
        if (ld.zero || order.less(ld.exp, u)) {
            ld.zero = false;
            ld.exp = u;
            ld.coeff = c;
        }
    }
    return ld;
}

bool le_additivity(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidConstruction("le additivity needs nonzero inputs");
    LeadingData lf = leading(f), lg = leading(g), lfg = leading(skew_mul(f, g));
    if (lfg.zero) return false;
    return lfg.exp == mi_add(lf.exp, lg.exp);
}

EndoSpec structural_endo(const RingPtr& ring, uint32_t k) {
    const DomainPtr& dom = ring->domain();
    std::vector<Scalar> gens = dom->generators();
    SkewPoly xk = SkewPoly::variable(ring, k);
    MultiIndex ek = mi_unit(ring->arity(), k);
    std::vector<Scalar> images;
    for (const Scalar& r : gens) {
        SkewPoly prod = skew_mul(xk, SkewPoly::constant(ring, r));
        LeadingData ld = leading(prod);
        if (ld.zero || ld.exp != ek) {
            throw InvalidConstruction("leading term of x_k * r is not of the form c * x_k");
        }
        images.push_back(ld.coeff);
    }
    std::vector<EndoSpec> candidates = {EndoSpec::identity(dom)};
    if (dom->is_finite()) {
        for (uint32_t j = 1; j < dom->ext_degree(); ++j) candidates.push_back(EndoSpec::frobenius(dom, j));
    }
    if (dom->is_poly()) {
        // a scale twist is determined by the image of y, which must be c*y
        for (size_t i = 0; i < gens.size(); ++i) {
            if (poly_degree(gens[i]) == 1 && is_zero(poly_coeff(gens[i], 0))) {
                const Scalar& img = images[i];
                if (poly_degree(img) == 1 && is_zero(poly_coeff(img, 0)) &&
                    !is_zero(poly_coeff(img, 1))) {
                    candidates.push_back(EndoSpec::scale(poly_build(dom, {poly_coeff(img, 1)})));
                }
            }
        }
    }
    candidates.push_back(ring->sigma(k));
    for (const EndoSpec& cand : candidates) {
        bool match = true;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!equal(cand.apply(gens[i]), images[i])) {
                match = false;
                break;
            }
        }
        if (match) return cand;
    }
    throw InvalidConstruction("extracted generator images do not match any closed endomorphism form");
}

EndoSpec sigma_power(const RingPtr& ring, const MultiIndex& i) {
    if (i.arity() != ring->arity()) throw InvalidConstruction("sigma_power arity mismatch");
    for (uint32_t a = 0; a < ring->arity(); ++a) {
        for (uint32_t b = a + 1; b < ring->arity(); ++b) {
            if (!ring->sigma(a).compose(ring->sigma(b)).same_map(ring->sigma(b).compose(ring->sigma(a)))) {
                throw InvalidConstruction("configured twists do not commute pairwise");
            }
        }
    }
    EndoSpec acc = EndoSpec::identity(ring->domain());
    for (uint32_t k = 0; k < ring->arity(); ++k) {
        if (i.e[k] > 0) acc = acc.compose(ring->sigma(k).power(i.e[k]));
    }
    return acc;
}

Scalar sigma_apply_ordered(const RingPtr& ring, const MultiIndex& i, const Scalar& a) {
    if (i.arity() != ring->arity()) throw InvalidConstruction("sigma_apply arity mismatch");
    Scalar c = a;
    for (uint32_t k = ring->arity(); k-- > 0;) {
        if (i.e[k] > 0) c = ring->sigma(k).power(i.e[k]).apply(c);
    }
    return c;
}

RingDescriptor::Validation RingDescriptor::validate(Rng& rng, int samples) const {
    Validation v;
    auto self = shared_from_this();
    for (uint32_t k = 0; k < arity(); ++k) {
        CompatReport rep = check_compat(sigma_[k], delta_[k], rng, samples);
        if (!rep.ok) {
            v.ok = false;
            v.failure = "variable " + vars_[k] + ": " + rep.failure;
            return v;
        }
        if (!sigma_[k].is_automorphism()) {
            v.notes.push_back("twist of " + vars_[k] + " is not an automorphism");
        }
    }
    auto probes = probe_elements(dom_);
    for (uint32_t a = 0; a < arity(); ++a) {
        for (uint32_t b = a + 1; b < arity(); ++b) {
            if (!sigma_[a].compose(sigma_[b]).same_map(sigma_[b].compose(sigma_[a]))) {
                v.ok = false;
                v.failure = "twists of " + vars_[a] + " and " + vars_[b] + " do not commute";
                return v;
            }
            for (const Scalar& x : probes) {
                if (!equal(sigma_[a].apply(delta_[b].apply(x)), delta_[b].apply(sigma_[a].apply(x)))) {
                    v.ok = false;
                    v.failure = "twist of " + vars_[a] + " does not commute with derivation of " + vars_[b];
                    return v;
                }
                if (!equal(delta_[a].apply(delta_[b].apply(x)), delta_[b].apply(delta_[a].apply(x)))) {
                    v.ok = false;
                    v.failure = "derivations of " + vars_[a] + " and " + vars_[b] + " do not commute";
                    return v;
                }
            }
        }
    }
    // sampled ring laws
    for (int s = 0; s < samples; ++s) {
        SkewPoly f = random_skew_poly(self, rng, 2, 3, true);
        SkewPoly g = random_skew_poly(self, rng, 2, 3, true);
        SkewPoly h = random_skew_poly(self, rng, 2, 3, false);
        if (skew_mul(skew_mul(f, g), h) != skew_mul(f, skew_mul(g, h))) {
            v.ok = false;
            v.failure = "product is not associative (inconsistent relation data)";
            return v;
        }
        if (!le_additivity(f, g)) {
            v.ok = false;
            v.failure = "leading exponents are not additive on a sampled pair";
            return v;
        }
    }
    return v;
}

std::string skew_poly_to_string(const SkewPoly& f) {
    std::vector<std::pair<bool, std::string>> terms;
    const auto& names = f.ring()->vars();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [u, c] = *it;
        std::string mono;
        for (uint32_t i = 0; i < u.arity(); ++i) {
            if (u.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (u.e[i] > 1) mono += "^" + std::to_string(u.e[i]);
        }
        detail::append_coeff_term(c, mono, terms);
    }
    return detail::join_signed_terms(terms);
}

namespace {

struct SkewPolyAlg {
    using Value = SkewPoly;
    RingPtr ring;

    Value constant(const Scalar& s) const { return SkewPoly::constant(ring, s); }
    Value number(const std::string& digits) const {
        return constant(ring->domain()->from_mpq(mpq_class(digits)));
    }
    Value name(const std::string& id) const {
        int k = ring->var_index(id);
        if (k >= 0) return SkewPoly::variable(ring, static_cast<uint32_t>(k));
        return constant(parse_scalar(ring->domain(), id));
    }
    Value add(const Value& a, const Value& b) const { return skew_add(a, b); }
    Value sub(const Value& a, const Value& b) const { return skew_sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return skew_mul(a, b); }
    Value div(const Value& a, const Value& b) const {
        LeadingData ld = leading(b);
        if (b.term_count() != 1 || ld.zero || !ld.exp.is_zero()) {
            throw ParseError("division is only defined by invertible scalars");
        }
        return skew_scalar_mul(inv(ld.coeff), a);
    }
    Value neg(const Value& a) const { return skew_neg(a); }
    Value pow(const Value& a, uint64_t e) const { return skew_pow(a, static_cast<uint32_t>(e)); }
};

} // namespace

SkewPoly parse_skew_poly(const RingPtr& ring, const std::string& text) {
    SkewPolyAlg alg{ring};
    return detail::ExprParser<SkewPolyAlg>(alg, text).parse();
}

SkewPoly random_skew_poly(const RingPtr& ring, Rng& rng, uint32_t max_exp, uint32_t max_terms,
                          bool force_nonzero) {
    SkewPoly f(ring);
    uint32_t terms = static_cast<uint32_t>(rng.below(max_terms)) + 1;
    for (uint32_t t = 0; t < terms; ++t) {
        MultiIndex u = mi_zero(ring->arity());
        for (auto& e : u.e) e = static_cast<uint32_t>(rng.below(max_exp + 1));
        f.add_term(u, random_scalar(ring->domain(), rng, 3));
    }
    if (force_nonzero && f.is_zero()) {
        f.add_term(mi_zero(ring->arity()), ring->domain()->one());
    }
    return f;
}

RingPtr ring_of_ore(const OreRingPtr& ring, TermOrderSpec order) {
    return RingDescriptor::make(ring->domain(), {ring->var()}, {ring->sigma()}, {ring->delta()}, {},
                                std::move(order));
}

OreRingPtr ore_of_ring(const RingPtr& ring) {
    if (ring->arity() != 1) throw UnsupportedRing("univariate view requires exactly one variable");
    return OreRing::make(ring->domain(), ring->sigma(0), ring->delta(0), ring->vars()[0]);
}

OrePoly to_ore(const SkewPoly& f, const OreRingPtr& target) {
    if (f.ring()->arity() != 1) throw UnsupportedRing("univariate view requires exactly one variable");
    std::vector<Scalar> c;
    for (const auto& [u, a] : f.terms()) {
        if (u.e[0] >= c.size()) c.resize(u.e[0] + 1, target->domain()->zero());
        c[u.e[0]] = a;
    }
    return OrePoly::from_coeffs(target, std::move(c));
}

SkewPoly from_ore(const OrePoly& f, const RingPtr& target) {
    if (target->arity() != 1) throw UnsupportedRing("univariate view requires exactly one variable");
    SkewPoly out(target);
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        MultiIndex u = mi_zero(1);
        u.e[0] = static_cast<uint32_t>(i);
        out.add_term(u, f.coeffs()[i]);
    }
    return out;
}

} // namespace skewpoly
