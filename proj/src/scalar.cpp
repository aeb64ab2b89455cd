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

#include "skewpoly/scalar.hpp"

#include <algorithm>

#include "skewpoly/detail/modvec.hpp"

namespace skewpoly {

using detail::Vec;

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

uint64_t reduce_ll(long long v, uint64_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
}

uint64_t mpz_mod_p(const mpz_class& z, uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

// GF payloads are fixed-length vectors of size ext (ascending powers of w).
Vec gf_mul(const Vec& a, const Vec& b, const Vec& modulus, uint64_t p, uint32_t ext) {
    Vec prod = detail::vmul(a, b, p);
    Vec rem = detail::vdivmod(prod, modulus, p).second;
    rem.resize(ext, 0);
    return rem;
}

bool all_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](uint64_t v) { return v == 0; });
}

const char* kind_name(DomainKind k) {
    switch (k) {
        case DomainKind::PrimeField: return "prime field";
        case DomainKind::GaloisField: return "galois field";
        case DomainKind::Rationals: return "rationals";
        case DomainKind::Quaternions: return "quaternions";
        case DomainKind::PolyPrime: return "polynomials over a prime field";
        case DomainKind::PolyRational: return "polynomials over the rationals";
    }
    return "?";
}

std::string int_poly_string(const Vec& coeffs, const std::string& var) {
    if (coeffs.empty() || all_zero(coeffs)) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        uint64_t c = coeffs[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace

DomainPtr Domain::prime_field(uint64_t p) {
    if (!is_prime_u64(p)) throw InvalidConstruction("prime field characteristic must be prime: " + std::to_string(p));
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::PrimeField;
    d->p_ = p;
    d->ext_ = 1;
    d->build_tables();
    return d;
}

DomainPtr Domain::galois_field(uint64_t p, uint32_t k, std::vector<uint64_t> modulus, std::string gen) {
    if (!is_prime_u64(p)) throw InvalidConstruction("galois field characteristic must be prime");
    if (k < 1) throw InvalidConstruction("galois field extension degree must be at least 1");
    if (modulus.size() != static_cast<size_t>(k) + 1) {
        throw InvalidConstruction("galois field modulus must have degree equal to the extension degree");
    }
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw InvalidConstruction("galois field modulus must be monic");
    if (!detail::virreducible(modulus, p)) throw InvalidConstruction("galois field modulus must be irreducible");
    if (gen.empty()) throw InvalidConstruction("galois field generator needs a name");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::GaloisField;
    d->p_ = p;
    d->ext_ = k;
    d->modulus_ = std::move(modulus);
    d->gen_ = std::move(gen);
    d->base_ = prime_field(p);
    d->build_tables();
    return d;
}

DomainPtr Domain::rationals() {
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Rationals;
    return d;
}

DomainPtr Domain::quaternions() {
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Quaternions;
    d->base_ = rationals();
    return d;
}

DomainPtr Domain::poly_over_prime(uint64_t p, std::string var) {
    if (!is_prime_u64(p)) throw InvalidConstruction("coefficient characteristic must be prime");
    if (var.empty()) throw InvalidConstruction("polynomial domain variable needs a name");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::PolyPrime;
    d->p_ = p;
    d->gen_ = std::move(var);
    d->base_ = prime_field(p);
    return d;
}

DomainPtr Domain::poly_over_rationals(std::string var) {
    if (var.empty()) throw InvalidConstruction("polynomial domain variable needs a name");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::PolyRational;
    d->gen_ = std::move(var);
    d->base_ = rationals();
    return d;
}

bool Domain::is_field() const {
    return kind_ == DomainKind::PrimeField || kind_ == DomainKind::GaloisField ||
           kind_ == DomainKind::Rationals;
}

bool Domain::is_division_ring() const {
    return is_field() || kind_ == DomainKind::Quaternions;
}

bool Domain::is_finite() const {
    return kind_ == DomainKind::PrimeField || kind_ == DomainKind::GaloisField;
}

bool Domain::is_poly() const {
    return kind_ == DomainKind::PolyPrime || kind_ == DomainKind::PolyRational;
}

uint64_t Domain::size() const {
    if (!is_finite()) throw InvalidConstruction("size() requires a finite domain");
    uint64_t q = 1;
    for (uint32_t i = 0; i < ext_; ++i) q *= p_;
    return q;
}

DomainPtr Domain::base() const {
    if (base_) return base_;
    return shared_from_this();
}

bool Domain::equals(const Domain& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && ext_ == o.ext_ && modulus_ == o.modulus_ &&
           gen_ == o.gen_;
}

std::string Domain::describe() const {
    switch (kind_) {
        case DomainKind::PrimeField: return "F_" + std::to_string(p_);
        case DomainKind::GaloisField:
            return "F_" + std::to_string(p_) + "[" + gen_ + "]/(" + int_poly_string(modulus_, gen_) + ")";
        case DomainKind::Rationals: return "Q";
        case DomainKind::Quaternions: return "rational quaternions";
        case DomainKind::PolyPrime: return "F_" + std::to_string(p_) + "[" + gen_ + "]";
        case DomainKind::PolyRational: return "Q[" + gen_ + "]";
    }
    return kind_name(kind_);
}

Scalar Domain::zero() const {
    Scalar s;
    s.dom = shared_from_this();
    switch (kind_) {
        case DomainKind::PrimeField: s.u = {0}; break;
        case DomainKind::GaloisField: s.u.assign(ext_, 0); break;
        case DomainKind::Rationals: s.r = {mpq_class(0)}; break;
        case DomainKind::Quaternions: s.r.assign(4, mpq_class(0)); break;
        case DomainKind::PolyPrime:
        case DomainKind::PolyRational: break;
    }
    return s;
}

Scalar Domain::one() const { return from_int(1); }

Scalar Domain::from_int(long long v) const {
    Scalar s;
    s.dom = shared_from_this();
    switch (kind_) {
        case DomainKind::PrimeField: s.u = {reduce_ll(v, p_)}; break;
        case DomainKind::GaloisField:
            s.u.assign(ext_, 0);
            s.u[0] = reduce_ll(v, p_);
            break;
        case DomainKind::Rationals: s.r = {mpq_class(static_cast<long>(v))}; break;
        case DomainKind::Quaternions:
            s.r.assign(4, mpq_class(0));
            s.r[0] = mpq_class(static_cast<long>(v));
            break;
        case DomainKind::PolyPrime: {
            uint64_t c = reduce_ll(v, p_);
            if (c != 0) s.u = {c};
            break;
        }
        case DomainKind::PolyRational:
            if (v != 0) s.r = {mpq_class(static_cast<long>(v))};
            break;
    }
    return s;
}

Scalar Domain::from_mpq(const mpq_class& q) const {
    mpq_class c = q;
    c.canonicalize();
    switch (kind_) {
        case DomainKind::Rationals: {
            Scalar s;
            s.dom = shared_from_this();
            s.r = {c};
            return s;
        }
        case DomainKind::Quaternions: return quat(c, 0, 0, 0);
        case DomainKind::PolyRational: {
            Scalar s;
            s.dom = shared_from_this();
            if (c != 0) s.r = {c};
            return s;
        }
        default: {
            uint64_t den = mpz_mod_p(c.get_den(), p_);
            if (den == 0) throw DivisionByZero("rational with denominator divisible by " + std::to_string(p_));
            uint64_t num = mpz_mod_p(c.get_num(), p_);
            uint64_t v = detail::mulm(num, detail::invm(den, p_), p_);
            Scalar s = from_int(0);
            if (kind_ == DomainKind::PrimeField) {
                s.u = {v};
            } else if (kind_ == DomainKind::GaloisField) {
                s.u[0] = v;
            } else { // PolyPrime
                if (v != 0) s.u = {v};
            }
            return s;
        }
    }
}

Scalar Domain::gen() const {
    Scalar s;
    s.dom = shared_from_this();
    switch (kind_) {
        case DomainKind::GaloisField:
            if (ext_ == 1) {
                // w is a root of the degree-1 modulus: w = -m[0]
                s.u = {detail::subm(0, modulus_[0], p_)};
            } else {
                s.u.assign(ext_, 0);
                s.u[1] = 1;
            }
            return s;
        case DomainKind::PolyPrime: s.u = {0, 1}; return s;
        case DomainKind::PolyRational: s.r = {mpq_class(0), mpq_class(1)}; return s;
        default:
            throw InvalidConstruction(std::string("domain has no distinguished generator: ") + kind_name(kind_));
    }
}

Scalar Domain::quat(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d) const {
    if (kind_ != DomainKind::Quaternions) throw InvalidConstruction("quat() requires the quaternion domain");
    Scalar s;
    s.dom = shared_from_this();
    s.r = {a, b, c, d};
    for (auto& x : s.r) x.canonicalize();
    return s;
}

Scalar Domain::poly_from_ints(const std::vector<long long>& coeffs) const {
    if (!is_poly()) throw InvalidConstruction("poly_from_ints() requires a polynomial domain");
    Scalar s;
    s.dom = shared_from_this();
    if (kind_ == DomainKind::PolyPrime) {
        s.u.reserve(coeffs.size());
        for (long long c : coeffs) s.u.push_back(reduce_ll(c, p_));
        detail::vtrim(s.u);
    } else {
        for (long long c : coeffs) s.r.emplace_back(static_cast<long>(c));
        while (!s.r.empty() && s.r.back() == 0) s.r.pop_back();
    }
    return s;
}

std::vector<Scalar> Domain::generators() const {
    switch (kind_) {
        case DomainKind::PrimeField:
        case DomainKind::Rationals: return {one()};
        case DomainKind::GaloisField:
        case DomainKind::PolyPrime:
        case DomainKind::PolyRational: return {one(), gen()};
        case DomainKind::Quaternions:
            return {one(), quat(0, 1, 0, 0), quat(0, 0, 1, 0)};
    }
    return {one()};
}

Scalar Domain::element_at(uint64_t idx) const {
    if (!is_finite()) throw InvalidConstruction("element_at() requires a finite domain");
    Scalar s = zero();
    if (kind_ == DomainKind::PrimeField) {
        s.u[0] = idx % p_;
        return s;
    }
    for (uint32_t t = 0; t < ext_; ++t) {
        s.u[t] = idx % p_;
        idx /= p_;
    }
    return s;
}

uint64_t Domain::index_of(const Scalar& a) const {
    if (!is_finite()) throw InvalidConstruction("index_of() requires a finite domain");
    if (kind_ == DomainKind::PrimeField) return a.u[0];
    uint64_t idx = 0;
    for (uint32_t t = ext_; t-- > 0;) idx = idx * p_ + a.u[t];
    return idx;
}

void Domain::build_tables() {
    uint64_t q = 1;
    for (uint32_t i = 0; i < ext_; ++i) {
        q *= p_;
        if (q > 256) return;
    }
    has_tables_ = true;
    tab_add_.assign(q * q, 0);
    tab_mul_.assign(q * q, 0);
    tab_inv_.assign(q, 0);
    tab_frob_.assign(q, 0);
    if (kind_ == DomainKind::PrimeField) {
        for (uint64_t a = 0; a < q; ++a) {
            for (uint64_t b = 0; b < q; ++b) {
                tab_add_[a * q + b] = static_cast<uint16_t>(detail::addm(a, b, p_));
                tab_mul_[a * q + b] = static_cast<uint16_t>(detail::mulm(a, b, p_));
            }
            if (a) tab_inv_[a] = static_cast<uint16_t>(detail::invm(a, p_));
            tab_frob_[a] = static_cast<uint16_t>(a);
        }
        return;
    }
    // GaloisField: index = base-p digits of the coefficient vector
    auto vec_of = [&](uint64_t idx) {
        Vec v(ext_, 0);
        for (uint32_t t = 0; t < ext_; ++t) {
            v[t] = idx % p_;
            idx /= p_;
        }
        return v;
    };
    auto idx_of = [&](const Vec& v) {
        uint64_t idx = 0;
        for (uint32_t t = ext_; t-- > 0;) idx = idx * p_ + (t < v.size() ? v[t] : 0);
        return idx;
    };
    for (uint64_t a = 0; a < q; ++a) {
        Vec va = vec_of(a);
        for (uint64_t b = 0; b < q; ++b) {
            Vec vb = vec_of(b);
            Vec s(ext_, 0);
            for (uint32_t t = 0; t < ext_; ++t) s[t] = detail::addm(va[t], vb[t], p_);
            tab_add_[a * q + b] = static_cast<uint16_t>(idx_of(s));
            tab_mul_[a * q + b] = static_cast<uint16_t>(idx_of(gf_mul(va, vb, modulus_, p_, ext_)));
        }
        if (a) {
            Vec ta = va;
            detail::vtrim(ta);
            auto eg = detail::vextgcd(ta, modulus_, p_);
            Vec r = eg.s;
            r.resize(ext_, 0);
            tab_inv_[a] = static_cast<uint16_t>(idx_of(r));
        }
        // frobenius: a -> a^p
        Vec acc = {1};
        Vec ta = va;
        detail::vtrim(ta);
        acc = detail::vpowmod(ta, mpz_class(static_cast<unsigned long>(p_)), modulus_, p_);
        acc.resize(ext_, 0);
        tab_frob_[a] = static_cast<uint16_t>(idx_of(acc));
    }
}

bool same_domain(const Scalar& a, const Scalar& b) {
    return a.dom && b.dom && (a.dom == b.dom || a.dom->equals(*b.dom));
}

void require_same_domain(const Scalar& a, const Scalar& b, const char* op) {
    if (!same_domain(a, b)) {
        throw DomainMismatch(std::string(op) + ": operands from different domains (" +
                             (a.dom ? a.dom->describe() : "null") + " vs " +
                             (b.dom ? b.dom->describe() : "null") + ")");
    }
}

bool is_zero(const Scalar& a) {
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: return a.u[0] == 0;
        case DomainKind::GaloisField: return all_zero(a.u);
        case DomainKind::Rationals: return a.r[0] == 0;
        case DomainKind::Quaternions:
            return a.r[0] == 0 && a.r[1] == 0 && a.r[2] == 0 && a.r[3] == 0;
        case DomainKind::PolyPrime: return a.u.empty();
        case DomainKind::PolyRational: return a.r.empty();
    }
    return false;
}

bool is_one(const Scalar& a) { return equal(a, a.dom->one()); }

bool is_unit(const Scalar& a) {
    if (a.dom->is_poly()) {
        return (a.dom->kind() == DomainKind::PolyPrime ? a.u.size() : a.r.size()) == 1;
    }
    return !is_zero(a);
}

Scalar add(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "add");
    Scalar s;
    s.dom = a.dom;
    uint64_t p = a.dom->char_p();
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: s.u = {detail::addm(a.u[0], b.u[0], p)}; break;
        case DomainKind::GaloisField:
            s.u.resize(a.u.size());
            for (size_t i = 0; i < a.u.size(); ++i) s.u[i] = detail::addm(a.u[i], b.u[i], p);
            break;
        case DomainKind::Rationals: s.r = {a.r[0] + b.r[0]}; break;
        case DomainKind::Quaternions:
            s.r.resize(4);
            for (int i = 0; i < 4; ++i) s.r[i] = a.r[i] + b.r[i];
            break;
        case DomainKind::PolyPrime: s.u = detail::vadd(a.u, b.u, p); break;
        case DomainKind::PolyRational: {
            s.r.resize(std::max(a.r.size(), b.r.size()));
            for (size_t i = 0; i < s.r.size(); ++i) {
                s.r[i] = (i < a.r.size() ? a.r[i] : mpq_class(0)) + (i < b.r.size() ? b.r[i] : mpq_class(0));
            }
            while (!s.r.empty() && s.r.back() == 0) s.r.pop_back();
            break;
        }
    }
    return s;
}

Scalar neg(const Scalar& a) {
    Scalar s;
    s.dom = a.dom;
    uint64_t p = a.dom->char_p();
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: s.u = {detail::subm(0, a.u[0], p)}; break;
        case DomainKind::GaloisField:
            s.u.resize(a.u.size());
            for (size_t i = 0; i < a.u.size(); ++i) s.u[i] = detail::subm(0, a.u[i], p);
            break;
        case DomainKind::Rationals: s.r = {-a.r[0]}; break;
        case DomainKind::Quaternions:
            s.r.resize(4);
            for (int i = 0; i < 4; ++i) s.r[i] = -a.r[i];
            break;
        case DomainKind::PolyPrime: s.u = detail::vscale(a.u, p - 1, p); break;
        case DomainKind::PolyRational:
            s.r.resize(a.r.size());
            for (size_t i = 0; i < a.r.size(); ++i) s.r[i] = -a.r[i];
            break;
    }
    return s;
}

Scalar sub(const Scalar& a, const Scalar& b) { return add(a, neg(b)); }

Scalar mul(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "mul");
    Scalar s;
    s.dom = a.dom;
    uint64_t p = a.dom->char_p();
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: s.u = {detail::mulm(a.u[0], b.u[0], p)}; break;
        case DomainKind::GaloisField: {
            Vec ta = a.u, tb = b.u;
            detail::vtrim(ta);
            detail::vtrim(tb);
            s.u = gf_mul(ta, tb, a.dom->modulus(), p, a.dom->ext_degree());
            break;
        }
        case DomainKind::Rationals: s.r = {a.r[0] * b.r[0]}; break;
        case DomainKind::Quaternions: {
            const auto& x = a.r;
            const auto& y = b.r;
            s.r.resize(4);
            s.r[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            s.r[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
            s.r[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
            s.r[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
            for (auto& c : s.r) c.canonicalize();
            break;
        }
        case DomainKind::PolyPrime: s.u = detail::vmul(a.u, b.u, p); break;
        case DomainKind::PolyRational: {
            if (a.r.empty() || b.r.empty()) break;
            s.r.assign(a.r.size() + b.r.size() - 1, mpq_class(0));
            for (size_t i = 0; i < a.r.size(); ++i) {
                for (size_t j = 0; j < b.r.size(); ++j) s.r[i + j] += a.r[i] * b.r[j];
            }
            while (!s.r.empty() && s.r.back() == 0) s.r.pop_back();
            break;
        }
    }
    return s;
}

Scalar inv(const Scalar& a) {
    if (is_zero(a)) throw DivisionByZero("inverse of zero in " + a.dom->describe());
    Scalar s;
    s.dom = a.dom;
    uint64_t p = a.dom->char_p();
    switch (a.dom->kind()) {
        case DomainKind::PrimeField: s.u = {detail::invm(a.u[0], p)}; break;
        case DomainKind::GaloisField: {
            Vec ta = a.u;
            detail::vtrim(ta);
            auto eg = detail::vextgcd(ta, a.dom->modulus(), p);
            s.u = eg.s;
            s.u.resize(a.dom->ext_degree(), 0);
            break;
        }
        case DomainKind::Rationals: s.r = {1 / a.r[0]}; break;
        case DomainKind::Quaternions: {
            mpq_class n = a.r[0] * a.r[0] + a.r[1] * a.r[1] + a.r[2] * a.r[2] + a.r[3] * a.r[3];
            s.r = {a.r[0] / n, -a.r[1] / n, -a.r[2] / n, -a.r[3] / n};
            for (auto& c : s.r) c.canonicalize();
            break;
        }
        case DomainKind::PolyPrime:
            if (a.u.size() != 1) throw NonUnit("non-constant polynomial has no inverse in " + a.dom->describe());
            s.u = {detail::invm(a.u[0], p)};
            break;
        case DomainKind::PolyRational:
            if (a.r.size() != 1) throw NonUnit("non-constant polynomial has no inverse in " + a.dom->describe());
            s.r = {1 / a.r[0]};
            break;
    }
    return s;
}

Scalar pow_u(const Scalar& a, uint64_t e) {
    Scalar acc = a.dom->one();
    Scalar base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool equal(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "equal");
    return a.u == b.u && a.r == b.r;
}

bool structural_less(const Scalar& a, const Scalar& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.r.size() != b.r.size()) return a.r.size() < b.r.size();
    for (size_t i = 0; i < a.r.size(); ++i) {
        int c = cmp(a.r[i], b.r[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

int poly_degree(const Scalar& a) {
    if (!a.dom->is_poly()) throw InvalidConstruction("poly_degree() requires a polynomial domain");
    if (a.dom->kind() == DomainKind::PolyPrime) return static_cast<int>(a.u.size()) - 1;
    return static_cast<int>(a.r.size()) - 1;
}

Scalar poly_coeff(const Scalar& a, uint32_t i) {
    if (!a.dom->is_poly()) throw InvalidConstruction("poly_coeff() requires a polynomial domain");
    DomainPtr b = a.dom->base();
    if (a.dom->kind() == DomainKind::PolyPrime) {
        return i < a.u.size() ? b->from_int(static_cast<long long>(a.u[i])) : b->zero();
    }
    return i < a.r.size() ? b->from_mpq(a.r[i]) : b->zero();
}

Scalar poly_build(const DomainPtr& dom, const std::vector<Scalar>& coeffs) {
    if (!dom->is_poly()) throw InvalidConstruction("poly_build() requires a polynomial domain");
    Scalar s;
    s.dom = dom;
    if (dom->kind() == DomainKind::PolyPrime) {
        for (const auto& c : coeffs) s.u.push_back(c.u[0]);
        detail::vtrim(s.u);
    } else {
        for (const auto& c : coeffs) s.r.push_back(c.r[0]);
        while (!s.r.empty() && s.r.back() == 0) s.r.pop_back();
    }
    return s;
}

Scalar poly_lead(const Scalar& a) {
    int d = poly_degree(a);
    if (d < 0) throw DivisionByZero("leading coefficient of zero");
    return poly_coeff(a, static_cast<uint32_t>(d));
}

} // namespace skewpoly
