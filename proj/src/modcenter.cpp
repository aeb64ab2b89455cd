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

#include "skewpoly/modcenter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "skewpoly/detail/anyrowspace.hpp"
#include "skewpoly/errors.hpp"
#include "skewpoly/pid.hpp"
#include "skewpoly/textio.hpp"

namespace skewpoly {

namespace {

using detail::AnyRowSpace;

/// Prime-subfield coordinate system of a coefficient domain: D as a finite
/// dimensional vector space over F_p or Q.
struct Coords {
    DomainPtr dom;
    DomainPtr prime;
    uint32_t dim = 0;
    std::vector<Scalar> basis; // elements of dom

    std::vector<Scalar> of(const Scalar& a) const {
        std::vector<Scalar> v(dim, prime->zero());
        switch (dom->kind()) {
            case DomainKind::PrimeField:
            case DomainKind::Rationals: v[0] = a; break;
            case DomainKind::GaloisField:
                for (uint32_t i = 0; i < dim && i < a.u.size(); ++i)
                    v[i] = prime->from_int(static_cast<long long>(a.u[i]));
                break;
            case DomainKind::Quaternions:
                for (uint32_t i = 0; i < dim && i < a.r.size(); ++i) v[i] = prime->from_mpq(a.r[i]);
                break;
            default: throw UnsupportedRing("coordinates: unsupported domain");
        }
        return v;
    }

    // prime subfield element into dom
    Scalar embed(const Scalar& c) const {
        switch (dom->kind()) {
            case DomainKind::PrimeField:
            case DomainKind::Rationals: return c;
            case DomainKind::GaloisField:
                return dom->from_int(c.u.empty() ? 0 : static_cast<long long>(c.u[0]));
            case DomainKind::Quaternions: return dom->from_mpq(c.r.empty() ? mpq_class(0) : c.r[0]);
            default: throw UnsupportedRing("coordinates: unsupported domain");
        }
    }

    Scalar assemble(const std::vector<Scalar>& v) const {
        Scalar acc = dom->zero();
        for (uint32_t i = 0; i < dim; ++i)
            if (!skewpoly::is_zero(v[i])) acc = add(acc, mul(embed(v[i]), basis[i]));
        return acc;
    }
};

Coords coords_of(const DomainPtr& dom, const char* op) {
    Coords c;
    c.dom = dom;
    switch (dom->kind()) {
        case DomainKind::PrimeField:
        case DomainKind::Rationals:
            c.prime = dom;
            c.dim = 1;
            c.basis = {dom->one()};
            break;
        case DomainKind::GaloisField: {
            c.prime = Domain::prime_field(dom->char_p());
            c.dim = dom->ext_degree();
            Scalar acc = dom->one();
            const Scalar w = dom->gen();
            for (uint32_t i = 0; i < c.dim; ++i) {
                c.basis.push_back(acc);
                acc = mul(acc, w);
            }
            break;
        }
        case DomainKind::Quaternions:
            c.prime = Domain::rationals();
            c.dim = 4;
            c.basis = {dom->one(), dom->quat(0, 1, 0, 0), dom->quat(0, 0, 1, 0),
                       dom->quat(0, 0, 0, 1)};
            break;
        default:
            throw UnsupportedRing(std::string(op) +
                                  " needs a coefficient domain of finite dimension over its "
                                  "prime subfield, got " +
                                  dom->describe());
    }
    return c;
}

bool commutes_with_domain(const Scalar& a) {
    for (const Scalar& g : a.domain()->generators())
        if (mul(a, g) != mul(g, a)) return false;
    return true;
}

/// f central in the univariate ring: commutes with x and the domain
/// generators (sufficient, as those generate the ring).
bool ore_commutes_with_ring(const OrePoly& f) {
    const OreRingPtr& ring = f.ring();
    OrePoly x = OrePoly::monomial(ring, ring->domain()->one(), 1);
    if (ore_mul(f, x) != ore_mul(x, f)) return false;
    for (const Scalar& a : ring->domain()->generators()) {
        OrePoly ca = OrePoly::from_coeffs(ring, {a});
        if (ore_mul(f, ca) != ore_mul(ca, f)) return false;
    }
    return true;
}

/// Remainder test of g by a monic s, plain commutative polynomial division
/// (the coefficient domain here is a finite field).
bool divides_commutative(const std::vector<Scalar>& s, const std::vector<Scalar>& g) {
    std::vector<Scalar> r = g;
    const size_t ds = s.size() - 1;
    for (size_t i = r.size() - 1; i >= ds && i < r.size(); --i) {
        const Scalar c = r[i];
        if (is_zero(c)) continue;
        for (size_t j = 0; j <= ds; ++j) r[i - ds + j] = sub(r[i - ds + j], mul(c, s[j]));
    }
    for (size_t j = 0; j < ds; ++j)
        if (!is_zero(r[j])) return false;
    return true;
}

/// Irreducibility of a monic g (ascending coefficients, inside the invariant
/// subfield) over that subfield. Uses the univariate factorization when the
/// subfield is prime, exhaustive monic factor search otherwise.
void require_irreducible(const InvariantField& inv, const std::vector<Scalar>& g,
                         uint64_t bound) {
    const size_t deg = g.size() - 1;
    if (deg == 1) return;
    if (inv.basis.size() == 1) {
        DomainPtr pt = Domain::poly_over_prime(inv.dom->char_p(), "t");
        Coords cd = coords_of(inv.dom, "maximal_twosided_gen");
        std::vector<long long> ints;
        for (const Scalar& c : g) {
            Scalar r = cd.of(c)[0];
            ints.push_back(r.u.empty() ? 0 : static_cast<long long>(r.u[0]));
        }
        if (!pid_irreducible(pt->poly_from_ints(ints)))
            throw InvalidConstruction(
                "maximal_twosided_gen: g is reducible over the invariant subfield");
        return;
    }
    std::vector<Scalar> elems = inv.elements();
    const uint64_t ce = elems.size();
    for (size_t ds = 1; 2 * ds <= deg; ++ds) {
        uint64_t combos = 1;
        for (size_t i = 0; i < ds; ++i) {
            if (combos > bound / ce)
                throw SearchExhausted(
                    "maximal_twosided_gen: the factor search space exceeds the element bound");
            combos *= ce;
        }
        for (uint64_t idx = 0; idx < combos; ++idx) {
            std::vector<Scalar> s(ds + 1, inv.dom->zero());
            s[ds] = inv.dom->one();
            uint64_t r = idx;
            for (size_t i = 0; i < ds; ++i) {
                s[i] = elems[r % ce];
                r /= ce;
            }
            if (divides_commutative(s, g))
                throw InvalidConstruction(
                    "maximal_twosided_gen: g is reducible over the invariant subfield");
        }
    }
}

std::vector<Scalar> ore_coords(const OrePoly& f, uint32_t width) {
    std::vector<Scalar> v(width, f.ring()->domain()->zero());
    for (uint32_t i = 0; i < f.coeffs().size(); ++i) v[i] = f.coeffs()[i];
    return v;
}

/// Copies a univariate element onto variable k of an n-variable ring.
SkewPoly onto_variable(const OrePoly& f, const RingPtr& ring, uint32_t k) {
    SkewPoly out(ring);
    for (uint32_t i = 0; i < f.coeffs().size(); ++i) {
        const Scalar& c = f.coeffs()[i];
        if (is_zero(c)) continue;
        MultiIndex u = mi_zero(ring->arity());
        u.e[k] = i;
        out.add_term(u, c);
    }
    return out;
}

} // namespace

uint64_t InvariantField::size() const {
    if (!dom->is_finite())
        throw UnsupportedRing("invariant subfield size: the ambient domain is infinite");
    uint64_t s = 1;
    for (size_t i = 0; i < basis.size(); ++i) s *= dom->char_p();
    return s;
}

std::vector<Scalar> InvariantField::elements() const {
    if (!dom->is_finite())
        throw UnsupportedRing("invariant subfield elements: the ambient domain is infinite");
    const uint64_t p = dom->char_p();
    std::vector<uint64_t> digits(basis.size(), 0);
    std::vector<Scalar> out;
    for (;;) {
        Scalar acc = dom->zero();
        for (size_t i = 0; i < basis.size(); ++i)
            if (digits[i])
                acc = add(acc, mul(dom->from_int(static_cast<long long>(digits[i])), basis[i]));
        out.push_back(acc);
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

bool InvariantField::contains(const Scalar& a) const {
    require_same_domain(a, dom->zero(), "invariant subfield membership");
    Coords cd = coords_of(dom, "invariant subfield membership");
    RowSpace rs = make_row_space(cd.prime, cd.dim);
    for (const Scalar& b : basis) rs.insert(cd.of(b));
    return rs.contains(cd.of(a));
}

InvariantField invariant_field(const DomainPtr& dom, const EndoSpec& sigma, const DerSpec& delta) {
    Coords cd = coords_of(dom, "invariant_field");
    if (!sigma.domain()->equals(*dom) || !delta.domain()->equals(*dom))
        throw DomainMismatch("invariant_field: sigma or delta acts on a different domain");

    std::vector<Scalar> gens = dom->generators();
    const size_t ncond = 2 + gens.size();
    Mat M = Mat::zero(cd.prime, ncond * cd.dim, cd.dim);
    for (uint32_t j = 0; j < cd.dim; ++j) {
        const Scalar& b = cd.basis[j];
        std::vector<Scalar> defects;
        defects.push_back(sub(sigma.apply(b), b));
        defects.push_back(delta.apply(b));
        for (const Scalar& g : gens) defects.push_back(sub(mul(b, g), mul(g, b)));
        for (size_t c = 0; c < defects.size(); ++c) {
            std::vector<Scalar> co = cd.of(defects[c]);
            for (uint32_t t = 0; t < cd.dim; ++t) M.at(c * cd.dim + t, j) = co[t];
        }
    }

    RowSpace rs = make_row_space(cd.prime, cd.dim);
    for (const auto& v : kernel_basis(M)) rs.insert(v);

    InvariantField out;
    out.dom = dom;
    out.prime = cd.prime;
    out.ambient_dim = cd.dim;
    for (const auto& row : rs.rows()) out.basis.push_back(cd.assemble(row));

    if (out.basis.empty() || out.basis[0] != dom->one())
        throw Error("invariant_field: the computed subfield does not contain 1");
    for (const Scalar& a : out.basis) {
        if (sigma.apply(a) != a || !is_zero(delta.apply(a)))
            throw Error("invariant_field: a basis element fails the fixed-point conditions");
        if (!commutes_with_domain(a))
            throw Error("invariant_field: a basis element is not central in the domain");
    }
    for (const Scalar& a : out.basis)
        for (const Scalar& b : out.basis)
            if (!out.contains(mul(a, b)))
                throw Error("invariant_field: the solution space is not closed under products");
    return out;
}

CenterReport center_upto(const RingPtr& ring, uint32_t cap) {
    if (cap < 1) throw InvalidConstruction("center_upto: cap must be >= 1");
    const DomainPtr& dom = ring->domain();
    Coords cd = coords_of(dom, "center_upto");

    const std::vector<MultiIndex> monos = monomials_up_to(ring, cap);
    const std::vector<MultiIndex> monos1 = monomials_up_to(ring, cap + 1);
    std::map<MultiIndex, size_t> at;
    for (size_t i = 0; i < monos1.size(); ++i) at[monos1[i]] = i;

    std::vector<SkewPoly> others; // generators the center must commute with
    for (uint32_t k = 0; k < ring->arity(); ++k) others.push_back(SkewPoly::variable(ring, k));
    for (const Scalar& a : dom->generators()) others.push_back(SkewPoly::constant(ring, a));

    const size_t ncols = monos.size() * cd.dim;
    const size_t block = monos1.size() * cd.dim;
    Mat M = Mat::zero(cd.prime, others.size() * block, ncols);

    for (size_t mi = 0; mi < monos.size(); ++mi) {
        for (uint32_t t = 0; t < cd.dim; ++t) {
            const size_t colj = mi * cd.dim + t;
            SkewPoly f = SkewPoly::monomial(ring, monos[mi], cd.basis[t]);
            for (size_t c = 0; c < others.size(); ++c) {
                SkewPoly defect = skew_sub(skew_mul(f, others[c]), skew_mul(others[c], f));
                for (const auto& [u, coeff] : defect.terms()) {
                    std::vector<Scalar> co = cd.of(coeff);
                    const size_t base = c * block + at.at(u) * cd.dim;
                    for (uint32_t s = 0; s < cd.dim; ++s) M.at(base + s, colj) = co[s];
                }
            }
        }
    }

    // echelonize the solution space with the highest monomial coordinate as
    // the pivot, so basis elements have distinct leading terms
    auto remap = [&](size_t col) {
        const size_t mi = col / cd.dim, t = col % cd.dim;
        return (monos.size() - 1 - mi) * cd.dim + t;
    };
    RowSpace rs = make_row_space(cd.prime, ncols);
    for (const auto& v : kernel_basis(M)) {
        std::vector<Scalar> w(ncols, cd.prime->zero());
        for (size_t j = 0; j < ncols; ++j) w[remap(j)] = v[j];
        rs.insert(w);
    }

    CenterReport rep;
    rep.ring = ring;
    rep.cap = cap;
    for (const auto& row : rs.rows()) {
        SkewPoly z(ring);
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            std::vector<Scalar> co(cd.dim, cd.prime->zero());
            for (uint32_t t = 0; t < cd.dim; ++t) co[t] = row[remap(mi * cd.dim + t)];
            const Scalar c = cd.assemble(co);
            if (!is_zero(c)) z.add_term(monos[mi], c);
        }
        if (z.is_zero()) throw Error("center_upto: internal inconsistency, zero basis row");
        // normalize monic when the leading coefficient is central in D, which
        // is the only case where scaling preserves centrality
        LeadingData ld = leading(z);
        if (!is_one(ld.coeff) && commutes_with_domain(inv(ld.coeff)))
            z = skew_scalar_mul(inv(ld.coeff), z);
        rep.basis.push_back(std::move(z));
    }
    std::sort(rep.basis.begin(), rep.basis.end(), [&](const SkewPoly& a, const SkewPoly& b) {
        LeadingData la = leading(a), lb = leading(b);
        if (la.exp != lb.exp) return ring->order().less(la.exp, lb.exp);
        return skew_poly_to_string(a) < skew_poly_to_string(b);
    });

    // recheck by multiplication, and pick a least-degree nonconstant element
    for (const SkewPoly& z : rep.basis)
        for (const SkewPoly& o : others)
            if (skew_mul(z, o) != skew_mul(o, z))
                throw Error("center_upto: a reported element fails the commutation recheck");
    for (const SkewPoly& z : rep.basis) {
        if (z.total_degree() < 1) continue;
        if (!rep.h0 || z.total_degree() < rep.h0->total_degree()) rep.h0 = z;
    }
    return rep;
}

CenterReport center_upto(const OreRingPtr& ring, uint32_t cap) {
    return center_upto(ring_of_ore(ring), cap);
}

TwoSidedCert maximal_twosided_gen(const OreRingPtr& ring, const std::vector<Scalar>& g,
                                  const OrePoly& h0, const InvariantField& inv,
                                  uint64_t element_bound) {
    const DomainPtr& dom = ring->domain();
    if (!dom->is_finite())
        throw UnsupportedRing("maximal_twosided_gen needs a finite coefficient field, got " +
                              dom->describe());
    if (!inv.dom || !inv.dom->equals(*dom))
        throw DomainMismatch("maximal_twosided_gen: the invariant field belongs to another domain");
    if (h0.is_zero() || h0.degree() < 1 || !h0.ring()->equals(*ring))
        throw InvalidConstruction("maximal_twosided_gen: h0 must be nonconstant in the ring");
    if (!ore_commutes_with_ring(h0))
        throw InvalidConstruction("maximal_twosided_gen: h0 is not central");

    std::vector<Scalar> gc = g;
    while (!gc.empty() && is_zero(gc.back())) gc.pop_back();
    if (gc.size() < 2)
        throw InvalidConstruction("maximal_twosided_gen: g must have degree >= 1");
    for (const Scalar& c : gc) {
        require_same_domain(c, dom->zero(), "maximal_twosided_gen");
        if (!inv.contains(c))
            throw InvalidConstruction(
                "maximal_twosided_gen: a coefficient of g lies outside the invariant subfield");
    }
    if (!is_one(gc.back())) {
        const Scalar s = skewpoly::inv(gc.back());
        for (Scalar& c : gc) c = mul(s, c);
    }
    require_irreducible(inv, gc, element_bound);

    OrePoly G(ring);
    OrePoly hp = OrePoly::from_coeffs(ring, {dom->one()});
    for (size_t i = 0; i < gc.size(); ++i) {
        G = ore_add(G, ore_scalar_mul(gc[i], hp));
        if (i + 1 < gc.size()) hp = ore_mul(hp, h0);
    }

    TwoSidedCert cert;
    cert.gen = G;
    cert.dim_over_domain = static_cast<uint32_t>(G.degree());
    cert.central = ore_commutes_with_ring(G);

    const uint64_t q = dom->size();
    const uint32_t m = cert.dim_over_domain;
    uint64_t size = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (size > element_bound / q) {
            size = element_bound + 1;
            break;
        }
        size *= q;
    }
    if (size > element_bound)
        throw SearchExhausted("maximal_twosided_gen: the quotient exceeds " +
                              std::to_string(element_bound) + " elements");

    OrePoly x = OrePoly::monomial(ring, dom->one(), 1);
    std::vector<Scalar> gens = dom->generators();
    auto rem = [&](const OrePoly& f) { return right_divmod(f, G).second; };

    // every nonzero coset must generate the full quotient as a two-sided
    // ideal; cosets are enumerated up to left scalar multiples
    cert.maximal = true;
    for (uint32_t lead = 0; lead < m && cert.maximal; ++lead) {
        const uint32_t nfree = m - 1 - lead;
        uint64_t combos = 1;
        for (uint32_t i = 0; i < nfree; ++i) combos *= q;
        for (uint64_t idx = 0; idx < combos && cert.maximal; ++idx) {
            std::vector<Scalar> co(m, dom->zero());
            co[lead] = dom->one();
            uint64_t r = idx;
            for (uint32_t i = 0; i < nfree; ++i) {
                co[lead + 1 + i] = dom->element_at(r % q);
                r /= q;
            }
            ++cert.elements_checked;

            AnyRowSpace rs(dom, m);
            std::vector<OrePoly> work;
            OrePoly f0 = OrePoly::from_coeffs(ring, co);
            if (rs.insert(ore_coords(f0, m))) work.push_back(f0);
            while (!work.empty()) {
                OrePoly w = std::move(work.back());
                work.pop_back();
                std::vector<OrePoly> images;
                images.push_back(rem(ore_mul(w, x)));
                images.push_back(rem(ore_mul(x, w)));
                for (const Scalar& a : gens)
                    images.push_back(ore_mul(w, OrePoly::from_coeffs(ring, {a})));
                for (OrePoly& im : images)
                    if (rs.insert(ore_coords(im, m))) work.push_back(std::move(im));
            }
            if (rs.rank() < m) cert.maximal = false;
        }
    }
    return cert;
}

SemilinearModule SemilinearModule::make(RingPtr ring, std::vector<Mat> action,
                                        std::vector<MultiIndex> labels) {
    SemilinearModule M;
    M.ring = std::move(ring);
    if (action.size() != M.ring->arity())
        throw InvalidConstruction("module: exactly one action matrix per variable is required");
    const uint32_t d = action.empty() ? 0 : static_cast<uint32_t>(action[0].nrows);
    for (const Mat& T : action) {
        if (T.nrows != d || T.ncols != d)
            throw InvalidConstruction("module: action matrices must be square of equal size");
        if (!T.dom->equals(*M.ring->domain()))
            throw InvalidConstruction("module: action matrix over the wrong domain");
    }
    M.dim = d;
    M.action = std::move(action);
    if (!labels.empty() && labels.size() != d)
        throw InvalidConstruction("module: label count differs from the dimension");
    M.basis_labels = std::move(labels);
    ModuleLawReport law = module_check_laws(M);
    if (!law.ok) throw InvalidConstruction("module: " + law.failure);
    return M;
}

std::vector<Scalar> module_apply(const SemilinearModule& M, uint32_t k,
                                 const std::vector<Scalar>& v) {
    if (k >= M.action.size()) throw InvalidConstruction("module_apply: no such variable");
    if (v.size() != M.dim) throw InvalidConstruction("module_apply: wrong vector dimension");
    const DomainPtr& dom = M.ring->domain();
    const EndoSpec& sg = M.ring->sigma(k);
    const DerSpec& dl = M.ring->delta(k);
    const Mat& T = M.action[k];
    std::vector<Scalar> out(M.dim, dom->zero());
    for (uint32_t i = 0; i < M.dim; ++i) {
        if (is_zero(v[i])) continue;
        const Scalar tv = sg.apply(v[i]);
        if (!is_zero(tv)) {
            for (uint32_t j = 0; j < M.dim; ++j) {
                const Scalar& t = T.at(j, i);
                if (!is_zero(t)) out[j] = add(out[j], mul(tv, t));
            }
        }
        const Scalar dv = dl.apply(v[i]);
        if (!is_zero(dv)) out[i] = add(out[i], dv);
    }
    return out;
}

ModuleLawReport module_check_laws(const SemilinearModule& M) {
    ModuleLawReport rep;
    const DomainPtr& dom = M.ring->domain();
    auto basisvec = [&](uint32_t i) {
        std::vector<Scalar> e(M.dim, dom->zero());
        e[i] = dom->one();
        return e;
    };
    auto scaled = [&](const Scalar& a, std::vector<Scalar> v) {
        for (Scalar& x : v) x = mul(a, x);
        return v;
    };
    auto added = [&](std::vector<Scalar> a, const std::vector<Scalar>& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] = add(a[i], b[i]);
        return a;
    };
    const std::vector<Scalar> gens = dom->generators();
    for (uint32_t k = 0; k < M.ring->arity(); ++k) {
        const EndoSpec& sg = M.ring->sigma(k);
        const DerSpec& dl = M.ring->delta(k);
        for (uint32_t i = 0; i < M.dim; ++i) {
            const std::vector<Scalar> e = basisvec(i);
            const std::vector<Scalar> te = module_apply(M, k, e);
            for (const Scalar& a : gens) {
                const auto lhs = module_apply(M, k, scaled(a, e));
                const auto rhs = added(scaled(sg.apply(a), te), scaled(dl.apply(a), e));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.failure = "semilinear law fails on " + M.ring->vars()[k] + " * (" +
                                  scalar_to_string(a) + " * e" + std::to_string(i) + ")";
                    return rep;
                }
            }
        }
    }
    for (uint32_t k = 0; k < M.ring->arity(); ++k) {
        for (uint32_t l = k + 1; l < M.ring->arity(); ++l) {
            const Scalar d = M.ring->commutator(k, l);
            for (uint32_t i = 0; i < M.dim; ++i) {
                const std::vector<Scalar> e = basisvec(i);
                const auto lhs = module_apply(M, l, module_apply(M, k, e));
                auto rhs = module_apply(M, k, module_apply(M, l, e));
                if (!is_zero(d)) rhs = added(std::move(rhs), scaled(d, e));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.failure = "exchange law fails between " + M.ring->vars()[k] + " and " +
                                  M.ring->vars()[l] + " on e" + std::to_string(i);
                    return rep;
                }
            }
        }
    }
    return rep;
}

SemilinearModule quotient_module(const GroebnerBasis& gb) {
    const RingPtr& ring = gb.ring;
    const DomainPtr& dom = ring->domain();
    StaircaseReport st = staircase_of(gb);
    if (!st.finite)
        throw InfiniteDimension("quotient module: the staircase is infinite along axis " +
                                std::to_string(st.witness_axis));
    if (st.dimension > (uint64_t(1) << 16))
        throw SearchExhausted("quotient module: dimension " + std::to_string(st.dimension) +
                              " is beyond desk scale");
    const uint32_t d = static_cast<uint32_t>(st.dimension);
    std::map<MultiIndex, size_t> pos;
    for (size_t i = 0; i < st.std_monomials.size(); ++i) pos[st.std_monomials[i]] = i;

    std::vector<Mat> action;
    for (uint32_t k = 0; k < ring->arity(); ++k) {
        Mat T = Mat::zero(dom, d, d);
        for (uint32_t i = 0; i < d; ++i) {
            SkewPoly xm = skew_mul(SkewPoly::variable(ring, k),
                                   SkewPoly::monomial(ring, st.std_monomials[i], dom->one()));
            SkewPoly nf = left_reduce(xm, gb.basis);
            for (const auto& [u, c] : nf.terms()) {
                auto it = pos.find(u);
                if (it == pos.end())
                    throw Error("quotient module: a normal form leaves the standard monomials");
                T.at(it->second, i) = c;
            }
        }
        action.push_back(std::move(T));
    }
    SemilinearModule M = SemilinearModule::make(ring, std::move(action), st.std_monomials);

    // the matrix action must agree with reduction, not only on basis vectors
    // but on generator multiples, which exercises the twisted scalar rule
    for (uint32_t k = 0; k < ring->arity(); ++k) {
        for (uint32_t i = 0; i < d; ++i) {
            for (const Scalar& a : dom->generators()) {
                if (is_zero(a)) continue;
                SkewPoly am = SkewPoly::monomial(ring, st.std_monomials[i], a);
                SkewPoly nf = left_reduce(skew_mul(SkewPoly::variable(ring, k), am), gb.basis);
                std::vector<Scalar> want(d, dom->zero());
                for (const auto& [u, c] : nf.terms()) want[pos.at(u)] = c;
                std::vector<Scalar> e(d, dom->zero());
                e[i] = a;
                if (module_apply(M, k, e) != want)
                    throw Error("quotient module: the matrix action disagrees with reduction");
            }
        }
    }
    return M;
}

SemilinearModule quotient_module(const LeftIdeal& I) { return quotient_module(buchberger(I)); }

SimplicityReport is_simple(const SemilinearModule& M, uint64_t element_bound) {
    SimplicityReport rep;
    const DomainPtr& dom = M.ring->domain();
    if (!dom->is_finite()) {
        rep.verdict = SimplicityReport::Verdict::Unknown;
        return rep;
    }
    if (M.dim == 0) {
        rep.verdict = SimplicityReport::Verdict::NotSimple;
        return rep;
    }
    const uint64_t q = dom->size();
    uint64_t reps = 0, power = 1;
    for (uint32_t i = 0; i < M.dim; ++i) {
        reps += power;
        if (i + 1 < M.dim) {
            if (power > element_bound / q)
                throw SearchExhausted("simplicity: vector enumeration exceeds the element bound");
            power *= q;
        }
    }
    if (reps > element_bound)
        throw SearchExhausted("simplicity: vector enumeration exceeds the element bound");

    rep.verdict = SimplicityReport::Verdict::Simple;
    for (uint32_t lead = 0; lead < M.dim; ++lead) {
        const uint32_t nfree = M.dim - 1 - lead;
        uint64_t combos = 1;
        for (uint32_t i = 0; i < nfree; ++i) combos *= q;
        for (uint64_t idx = 0; idx < combos; ++idx) {
            // representative with first nonzero coordinate 1; scalar multiples
            // generate the same submodule
            std::vector<Scalar> v(M.dim, dom->zero());
            v[lead] = dom->one();
            uint64_t r = idx;
            for (uint32_t i = 0; i < nfree; ++i) {
                v[lead + 1 + i] = dom->element_at(r % q);
                r /= q;
            }
            ++rep.vectors_checked;

            AnyRowSpace rs(dom, M.dim);
            std::vector<std::vector<Scalar>> work;
            if (rs.insert(v)) work.push_back(v);
            while (!work.empty()) {
                std::vector<Scalar> w = std::move(work.back());
                work.pop_back();
                for (uint32_t k = 0; k < M.ring->arity(); ++k) {
                    std::vector<Scalar> img = module_apply(M, k, w);
                    if (rs.insert(img)) work.push_back(std::move(img));
                }
            }
            if (rs.rank() < M.dim) {
                rep.verdict = SimplicityReport::Verdict::NotSimple;
                rep.witness = rs.rows_as_scalars();
                return rep;
            }
        }
    }
    return rep;
}

DomainPtr galois_field_default(uint64_t p, uint32_t k, const std::string& gen) {
    if (k == 0) throw InvalidConstruction("galois_field_default: k must be >= 1");
    if (k == 1) return Domain::prime_field(p);
    MaximalIdealStream stream(Domain::poly_over_prime(p));
    for (;;) {
        Scalar m = stream.next();
        if (poly_degree(m) < static_cast<int>(k)) continue;
        std::vector<uint64_t> mod;
        for (uint32_t i = 0; i <= k; ++i) {
            Scalar c = poly_coeff(m, i);
            mod.push_back(c.u.empty() ? 0 : c.u[0]);
        }
        return Domain::galois_field(p, k, std::move(mod), gen);
    }
}

PipelineReport frobenius_pipeline(uint64_t p, uint32_t k, uint32_t n, uint32_t bound,
                                  uint64_t element_bound) {
    if (k < 1 || n < 1 || bound < 1)
        throw InvalidConstruction("pipeline: k, n, and bound must all be >= 1");
    PipelineReport rep;
    rep.p = p;
    rep.k = k;
    rep.n = n;
    rep.bound = bound;

    DomainPtr F = galois_field_default(p, k);
    EndoSpec sigma = F->kind() == DomainKind::GaloisField ? EndoSpec::frobenius(F, 1)
                                                          : EndoSpec::identity(F);
    DerSpec dz = DerSpec::zero(F);
    OreRingPtr ore1 = OreRing::make(F, sigma, dz, "x");

    // x^k is central, and no nonconstant central element has lower degree
    CenterReport c1 = center_upto(ore1, 2 * k);
    rep.power_central = false;
    if (c1.h0) {
        rep.h0_text = skew_poly_to_string(*c1.h0);
        MultiIndex want;
        want.e = {k};
        rep.power_central = leading(*c1.h0).exp == want && c1.h0->term_count() == 1;
    }

    std::vector<std::string> vars;
    for (uint32_t j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(j));
    RingPtr ring = RingDescriptor::make_uniform(F, vars, sigma, dz, {}, TermOrderSpec::lex());
    rep.ring = ring;

    for (uint32_t j = 0; j < n && rep.power_central; ++j) {
        MultiIndex u = mi_zero(n);
        u.e[j] = k;
        SkewPoly z = SkewPoly::monomial(ring, u, F->one());
        for (uint32_t t = 0; t < n; ++t) {
            SkewPoly xt = SkewPoly::variable(ring, t);
            if (skew_mul(z, xt) != skew_mul(xt, z)) rep.power_central = false;
        }
        for (const Scalar& a : F->generators()) {
            SkewPoly ca = SkewPoly::constant(ring, a);
            if (skew_mul(z, ca) != skew_mul(ca, z)) rep.power_central = false;
        }
    }

    // seed ideals: per-variable univariate irreducibles, and one irreducible
    // in x_1 with the other variables pinned to lower-degree polynomials in
    // x_1 (those cut the x_1-quotient out directly and make the per-variable
    // elimination checks nontrivial)
    std::vector<OrePoly> irrs;
    for (uint32_t d = 1; d <= bound; ++d)
        for (const OrePoly& f : all_monic(ore1, d))
            if (ore_irreducible(f)) irrs.push_back(f);

    std::vector<std::vector<SkewPoly>> seeds;
    {
        std::vector<size_t> pick(n, 0);
        for (;;) {
            std::vector<SkewPoly> gens;
            for (uint32_t j = 0; j < n; ++j) gens.push_back(onto_variable(irrs[pick[j]], ring, j));
            seeds.push_back(std::move(gens));
            uint32_t j = 0;
            while (j < n && ++pick[j] == irrs.size()) pick[j++] = 0;
            if (j == n) break;
        }
    }
    if (n >= 2) {
        const uint64_t q = F->size();
        for (const OrePoly& f : irrs) {
            const uint32_t df = static_cast<uint32_t>(f.degree());
            if (df < 2) continue; // degree-1 substitutions coincide with the tuples above
            uint64_t combos = 1;
            bool skip = false;
            for (uint32_t i = 0; i < df * (n - 1); ++i) {
                if (combos > element_bound / q) {
                    skip = true;
                    break;
                }
                combos *= q;
            }
            if (skip) continue;
            for (uint64_t idx = 0; idx < combos; ++idx) {
                std::vector<SkewPoly> gens{onto_variable(f, ring, 0)};
                uint64_t r = idx;
                for (uint32_t j = 1; j < n; ++j) {
                    std::vector<Scalar> uc(df, F->zero());
                    for (uint32_t i = 0; i < df; ++i) {
                        uc[i] = F->element_at(r % q);
                        r /= q;
                    }
                    gens.push_back(skew_sub(SkewPoly::variable(ring, j),
                                            onto_variable(OrePoly::from_coeffs(ore1, uc), ring, 0)));
                }
                seeds.push_back(std::move(gens));
            }
        }
    }

    std::set<std::string> maximal_keys;
    for (auto& gens : seeds) {
        PipelineCase pc;
        pc.gens = gens;
        LeftIdeal I = LeftIdeal::make(ring, std::move(gens));
        GroebnerBasis gb = buchberger(I);
        pc.proper = !gb.contains_one();
        if (pc.proper) {
            StaircaseReport st = staircase_of(gb);
            pc.finite = st.finite;
            if (st.finite) {
                pc.dim = st.dimension;
                SemilinearModule M = quotient_module(gb);
                SimplicityReport sr = is_simple(M, element_bound);
                pc.verdict = sr.verdict;
                if (sr.verdict == SimplicityReport::Verdict::Simple) {
                    ++rep.simple_count;
                    rep.max_simple_dim = std::max(rep.max_simple_dim, pc.dim);
                    std::string key;
                    for (const SkewPoly& b : gb.basis) key += skew_poly_to_string(b) + ";";
                    maximal_keys.insert(std::move(key));
                    for (uint32_t j = 0; j < n; ++j) {
                        std::vector<SkewPoly> cut = eliminate(I, {j});
                        int64_t mind = -1;
                        for (const SkewPoly& h : cut) {
                            if (h.is_zero()) continue;
                            const int64_t dg = h.total_degree();
                            if (mind < 0 || dg < mind) mind = dg;
                        }
                        pc.univariate_member_degree.push_back(mind);
                        if (mind < 0) rep.all_intersections_nonzero = false;
                    }
                }
            }
        }
        rep.cases.push_back(std::move(pc));
    }
    rep.distinct_maximal = maximal_keys.size();
    return rep;
}

} // namespace skewpoly
