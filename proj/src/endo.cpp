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

#include "skewpoly/endo.hpp"

#include "skewpoly/textio.hpp"

namespace skewpoly {

EndoSpec EndoSpec::identity(DomainPtr dom) {
    EndoSpec e;
    e.kind_ = EndoKind::Identity;
    e.dom_ = std::move(dom);
    return e;
}

EndoSpec EndoSpec::frobenius(DomainPtr dom, uint32_t j) {
    if (!dom->is_finite()) throw InvalidConstruction("frobenius requires a finite field");
    EndoSpec e;
    e.kind_ = EndoKind::Frobenius;
    e.frob_ = j % dom->ext_degree();
    e.dom_ = std::move(dom);
    return e;
}

EndoSpec EndoSpec::inner(Scalar u) {
    if (!u.dom->is_division_ring()) throw InvalidConstruction("inner endomorphism requires a division ring");
    if (is_zero(u)) throw InvalidConstruction("inner endomorphism requires a unit");
    EndoSpec e;
    e.kind_ = EndoKind::Inner;
    e.dom_ = u.dom;
    e.data_ = std::move(u);
    return e;
}

EndoSpec EndoSpec::scale(Scalar c) {
    if (!c.dom->is_poly()) throw InvalidConstruction("scale endomorphism requires a polynomial domain");
    if (!is_unit(c)) throw InvalidConstruction("scale endomorphism requires a nonzero constant");
    EndoSpec e;
    e.kind_ = EndoKind::Scale;
    e.dom_ = c.dom;
    e.data_ = std::move(c);
    return e;
}

Scalar EndoSpec::apply(const Scalar& a) const {
    if (!a.dom->equals(*dom_)) throw DomainMismatch("endomorphism applied outside its domain");
    switch (kind_) {
        case EndoKind::Identity: return a;
        case EndoKind::Frobenius: {
            if (frob_ == 0) return a;
            if (dom_->has_tables()) {
                uint64_t idx = dom_->index_of(a);
                const auto& t = dom_->frob_table();
                for (uint32_t i = 0; i < frob_; ++i) idx = t[idx];
                return dom_->element_at(idx);
            }
            Scalar x = a;
            for (uint32_t i = 0; i < frob_; ++i) x = pow_u(x, dom_->char_p());
            return x;
        }
        case EndoKind::Inner: {
            const Scalar& u = data_.value();
            return mul(mul(u, a), inv(u));
        }
        case EndoKind::Scale: {
            // f(y) -> f(c y): multiply the i-th coefficient by c^i
            Scalar c0 = poly_coeff(data_.value(), 0);
            int d = poly_degree(a);
            std::vector<Scalar> coeffs;
            Scalar cp = c0.dom->one();
            for (int i = 0; i <= d; ++i) {
                coeffs.push_back(mul(poly_coeff(a, static_cast<uint32_t>(i)), cp));
                cp = mul(cp, c0);
            }
            return poly_build(dom_, coeffs);
        }
    }
    return a;
}

bool EndoSpec::is_identity_map() const {
    switch (kind_) {
        case EndoKind::Identity: return true;
        case EndoKind::Frobenius: return frob_ == 0;
        case EndoKind::Inner: {
            const Scalar& u = data_.value();
            if (u.dom->is_commutative()) return true;
            return u.r[1] == 0 && u.r[2] == 0 && u.r[3] == 0;
        }
        case EndoKind::Scale: return is_one(data_.value());
    }
    return false;
}

bool EndoSpec::is_automorphism() const {
    // every supported closed form is invertible on its domain
    return true;
}

EndoSpec EndoSpec::inverse() const {
    switch (kind_) {
        case EndoKind::Identity: return *this;
        case EndoKind::Frobenius:
            return frobenius(dom_, (dom_->ext_degree() - frob_) % dom_->ext_degree());
        case EndoKind::Inner: return inner(inv(data_.value()));
        case EndoKind::Scale: return scale(inv(data_.value()));
    }
    return *this;
}

EndoSpec EndoSpec::compose(const EndoSpec& g) const {
    if (!dom_->equals(*g.dom_)) throw DomainMismatch("composing endomorphisms of different domains");
    if (kind_ == EndoKind::Identity) return g;
    if (g.kind_ == EndoKind::Identity) return *this;
    if (kind_ != g.kind_) {
        throw InvalidConstruction("composition of different endomorphism forms is not closed");
    }
    switch (kind_) {
        case EndoKind::Frobenius: return frobenius(dom_, frob_ + g.frob_);
        case EndoKind::Inner: return inner(mul(data_.value(), g.data_.value()));
        case EndoKind::Scale: return scale(mul(data_.value(), g.data_.value()));
        default: return *this;
    }
}

EndoSpec EndoSpec::power(uint64_t e) const {
    switch (kind_) {
        case EndoKind::Identity: return *this;
        case EndoKind::Frobenius:
            return frobenius(dom_, static_cast<uint32_t>((static_cast<uint64_t>(frob_) * (e % dom_->ext_degree())) % dom_->ext_degree()));
        case EndoKind::Inner: return inner(pow_u(data_.value(), e));
        case EndoKind::Scale: return scale(pow_u(data_.value(), e));
    }
    return *this;
}

bool EndoSpec::same_map(const EndoSpec& o) const {
    if (!dom_->equals(*o.dom_)) return false;
    for (const Scalar& a : probe_elements(dom_)) {
        if (!equal(apply(a), o.apply(a))) return false;
    }
    return true;
}

std::string EndoSpec::describe() const {
    switch (kind_) {
        case EndoKind::Identity: return "identity";
        case EndoKind::Frobenius: return "frobenius^" + std::to_string(frob_);
        case EndoKind::Inner: return "inner(" + scalar_to_string(data_.value()) + ")";
        case EndoKind::Scale: return "scale(" + scalar_to_string(poly_coeff(data_.value(), 0)) + ")";
    }
    return "?";
}

DerSpec DerSpec::zero(DomainPtr dom) {
    DerSpec d;
    d.kind_ = DerKind::Zero;
    d.dom_ = std::move(dom);
    return d;
}

DerSpec DerSpec::inner(Scalar b, EndoSpec sigma) {
    if (!b.dom->equals(*sigma.domain())) throw DomainMismatch("inner derivation element outside the twist domain");
    DerSpec d;
    d.kind_ = DerKind::Inner;
    d.dom_ = b.dom;
    d.data_ = std::move(b);
    d.sigma_ = std::move(sigma);
    return d;
}

DerSpec DerSpec::formal_deriv(DomainPtr dom) {
    if (!dom->is_poly()) throw InvalidConstruction("formal derivative requires a polynomial domain");
    DerSpec d;
    d.kind_ = DerKind::FormalDeriv;
    d.dom_ = std::move(dom);
    return d;
}

Scalar DerSpec::apply(const Scalar& a) const {
    if (!a.dom->equals(*dom_)) throw DomainMismatch("derivation applied outside its domain");
    switch (kind_) {
        case DerKind::Zero: return dom_->zero();
        case DerKind::Inner: {
            const Scalar& b = data_.value();
            return sub(mul(b, a), mul(sigma_->apply(a), b));
        }
        case DerKind::FormalDeriv: {
            int d = poly_degree(a);
            DomainPtr base = dom_->base();
            std::vector<Scalar> coeffs;
            for (int i = 1; i <= d; ++i) {
                coeffs.push_back(mul(poly_coeff(a, static_cast<uint32_t>(i)), base->from_int(i)));
            }
            return poly_build(dom_, coeffs);
        }
    }
    return dom_->zero();
}

bool DerSpec::is_zero_map() const {
    switch (kind_) {
        case DerKind::Zero: return true;
        case DerKind::FormalDeriv: return false;
        case DerKind::Inner: {
            for (const Scalar& a : probe_elements(dom_)) {
                if (!is_zero(apply(a))) return false;
            }
            return true;
        }
    }
    return true;
}

bool DerSpec::same_map(const DerSpec& o) const {
    if (!dom_->equals(*o.dom_)) return false;
    for (const Scalar& a : probe_elements(dom_)) {
        if (!equal(apply(a), o.apply(a))) return false;
    }
    return true;
}

std::string DerSpec::describe() const {
    switch (kind_) {
        case DerKind::Zero: return "zero";
        case DerKind::Inner: return "inner(" + scalar_to_string(data_.value()) + ")";
        case DerKind::FormalDeriv: return "d/d" + dom_->gen_name();
    }
    return "?";
}

std::vector<Scalar> probe_elements(const DomainPtr& dom) {
    std::vector<Scalar> out;
    switch (dom->kind()) {
        case DomainKind::PrimeField:
        case DomainKind::GaloisField: {
            uint64_t q = dom->size();
            if (q <= 256) {
                for (uint64_t i = 0; i < q; ++i) out.push_back(dom->element_at(i));
            } else {
                out = {dom->zero(), dom->one(), dom->from_int(-1), dom->from_int(2)};
                if (dom->kind() == DomainKind::GaloisField) {
                    Scalar w = dom->gen();
                    out.push_back(w);
                    out.push_back(mul(w, w));
                    out.push_back(add(w, dom->one()));
                }
            }
            break;
        }
        case DomainKind::Rationals:
            for (const char* s : {"0", "1", "-1", "2", "1/2", "-2/3", "5"}) {
                out.push_back(dom->from_mpq(mpq_class(s)));
            }
            break;
        case DomainKind::Quaternions: {
            Scalar i = dom->quat(0, 1, 0, 0), j = dom->quat(0, 0, 1, 0), k = dom->quat(0, 0, 0, 1);
            out = {dom->zero(), dom->one(), i, j, k,
                   add(dom->one(), i), add(i, j), dom->quat(mpq_class(1, 2), 0, mpq_class(2, 3), 0),
                   add(add(dom->one(), i), add(j, k))};
            break;
        }
        case DomainKind::PolyPrime:
        case DomainKind::PolyRational: {
            Scalar y = dom->gen();
            Scalar y2 = mul(y, y);
            out = {dom->zero(), dom->one(), dom->from_int(2), y, add(y, dom->one()), y2,
                   add(y2, add(y, dom->one())), add(mul(y2, y), dom->from_int(-1))};
            if (dom->kind() == DomainKind::PolyRational) {
                out.push_back(add(mul(dom->from_mpq(mpq_class(1, 2)), y2), y));
            }
            break;
        }
    }
    return out;
}

Scalar random_scalar(const DomainPtr& dom, Rng& rng, unsigned height) {
    switch (dom->kind()) {
        case DomainKind::PrimeField:
        case DomainKind::GaloisField: {
            uint64_t q = dom->size();
            return dom->element_at(rng.below(q));
        }
        case DomainKind::Rationals: {
            long num = static_cast<long>(rng.range(-static_cast<int64_t>(height) * 3, static_cast<int64_t>(height) * 3));
            long den = static_cast<long>(rng.range(1, static_cast<int64_t>(height) + 1));
            return dom->from_mpq(mpq_class(num, den));
        }
        case DomainKind::Quaternions: {
            DomainPtr q = Domain::rationals();
            mpq_class c[4];
            for (auto& x : c) {
                long num = static_cast<long>(rng.range(-static_cast<int64_t>(height), static_cast<int64_t>(height)));
                long den = static_cast<long>(rng.range(1, 3));
                x = mpq_class(num, den);
            }
            return dom->quat(c[0], c[1], c[2], c[3]);
        }
        case DomainKind::PolyPrime: {
            size_t deg = rng.below(height + 1);
            std::vector<long long> coeffs;
            for (size_t i = 0; i <= deg; ++i) coeffs.push_back(static_cast<long long>(rng.below(dom->char_p())));
            return dom->poly_from_ints(coeffs);
        }
        case DomainKind::PolyRational: {
            size_t deg = rng.below(height + 1);
            std::vector<Scalar> coeffs;
            DomainPtr base = dom->base();
            for (size_t i = 0; i <= deg; ++i) {
                long num = static_cast<long>(rng.range(-3, 3));
                coeffs.push_back(base->from_mpq(mpq_class(num)));
            }
            return poly_build(dom, coeffs);
        }
    }
    return dom->zero();
}

CompatReport check_compat(const EndoSpec& sigma, const DerSpec& delta, Rng& rng, int samples) {
    CompatReport rep;
    const DomainPtr& dom = sigma.domain();
    if (!dom->equals(*delta.domain())) {
        rep.ok = false;
        rep.failure = "twist and derivation live on different domains";
        return rep;
    }
    std::vector<std::pair<Scalar, Scalar>> pairs;
    auto probes = probe_elements(dom);
    for (const auto& a : probes) {
        for (const auto& b : probes) pairs.emplace_back(a, b);
    }
    for (int i = 0; i < samples; ++i) {
        pairs.emplace_back(random_scalar(dom, rng), random_scalar(dom, rng));
    }
    if (!is_one(sigma.apply(dom->one()))) {
        rep.ok = false;
        rep.failure = "sigma(1) != 1";
        return rep;
    }
    // the commuting condition sigma(delta(a)) == delta(sigma(a))
    std::vector<Scalar> singles = probes;
    for (int i = 0; i < samples; ++i) singles.push_back(random_scalar(dom, rng));
    for (const auto& a : singles) {
        if (!equal(sigma.apply(delta.apply(a)), delta.apply(sigma.apply(a)))) {
            rep.ok = false;
            rep.failure = "sigma and delta do not commute";
            rep.witnesses = {scalar_to_string(a), scalar_to_string(sigma.apply(delta.apply(a))),
                             scalar_to_string(delta.apply(sigma.apply(a)))};
            return rep;
        }
    }
    for (const auto& [a, b] : pairs) {
        if (!equal(sigma.apply(add(a, b)), add(sigma.apply(a), sigma.apply(b)))) {
            rep.ok = false;
            rep.failure = "sigma is not additive";
            rep.witnesses = {scalar_to_string(a), scalar_to_string(b)};
            return rep;
        }
        if (!equal(sigma.apply(mul(a, b)), mul(sigma.apply(a), sigma.apply(b)))) {
            rep.ok = false;
            rep.failure = "sigma is not multiplicative";
            rep.witnesses = {scalar_to_string(a), scalar_to_string(b)};
            return rep;
        }
        if (!equal(delta.apply(add(a, b)), add(delta.apply(a), delta.apply(b)))) {
            rep.ok = false;
            rep.failure = "delta is not additive";
            rep.witnesses = {scalar_to_string(a), scalar_to_string(b)};
            return rep;
        }
        Scalar lhs = delta.apply(mul(a, b));
        Scalar rhs = add(mul(sigma.apply(a), delta.apply(b)), mul(delta.apply(a), b));
        if (!equal(lhs, rhs)) {
            rep.ok = false;
            rep.failure = "delta violates the twisted Leibniz rule delta(ab) = sigma(a)delta(b) + delta(a)b";
            rep.witnesses = {scalar_to_string(a), scalar_to_string(b)};
            return rep;
        }
    }
    return rep;
}

} // namespace skewpoly
