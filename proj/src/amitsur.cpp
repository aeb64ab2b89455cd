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

#include "skewpoly/amitsur.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "skewpoly/detail/anyrowspace.hpp"
#include "skewpoly/errors.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/pid.hpp"
#include "skewpoly/textio.hpp"

namespace skewpoly {

namespace {

void require_pid(const DomainPtr& dom, const char* op) {
    if (!dom || !dom->is_poly())
        throw UnsupportedRing(std::string(op) +
                              ": requires a univariate polynomial coefficient ring");
}

/// (u) subset (v) for principal ideals of a commutative PID.
bool principal_included(const Scalar& u, const Scalar& v) {
    if (is_zero(v)) return is_zero(u);
    return pid_divides(v, u);
}

/// All indices in N^n of total degree <= d, in odometer order.
std::vector<MultiIndex> indices_up_to(uint32_t n, uint32_t d) {
    std::vector<MultiIndex> out;
    MultiIndex cur = mi_zero(n);
    while (true) {
        out.push_back(cur);
        uint32_t k = 0;
        while (k < n) {
            ++cur.e[k];
            if (cur.total() <= d) break;
            cur.e[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

/// r generates an ideal invariant under the map pair: sigma(r) an associate
/// of r, delta(r) a multiple of r.
bool ideal_invariant(const Scalar& r, const EndoSpec& sigma, const DerSpec& delta) {
    Scalar s = sigma.apply(r);
    if (is_zero(s) || !pid_divides(r, s) || !pid_divides(s, r)) return false;
    return pid_divides(r, delta.apply(r));
}

/// Monic polynomial over F_p with the non-leading coefficients read off idx
/// as a base-p number, matching the maximal-ideal stream's enumeration.
Scalar monic_at(const DomainPtr& dom, uint32_t deg, uint64_t idx) {
    std::vector<Scalar> coeffs(deg + 1);
    DomainPtr base = dom->base();
    uint64_t p = dom->char_p();
    for (uint32_t i = 0; i < deg; ++i) {
        coeffs[i] = base->from_int(static_cast<long long>(idx % p));
        idx /= p;
    }
    coeffs[deg] = base->one();
    return poly_build(dom, coeffs);
}

struct VarAction {
    EndoSpec sigma;
    DerSpec delta;
};

ASWitness witness_core(const IdealFamily& fam, const std::vector<VarAction>& action,
                       uint32_t max_degree) {
    if (fam.dom->kind() != DomainKind::PolyPrime)
        throw UnsupportedRing(
            "witness search: streaming maximal ideals needs a finite coefficient field");
    std::vector<Scalar> pool;
    for (const FamilyBase& b : fam.bases) {
        if (is_zero(b.gen) || is_unit(b.gen)) continue;
        for (Scalar& o : transporter_offenders(b.gen)) pool.push_back(std::move(o));
    }
    MaximalIdealStream stream(fam.dom);
    ASWitness w;
    for (uint64_t pos = 0;; ++pos) {
        Scalar r = stream.next();
        if (static_cast<uint32_t>(poly_degree(r)) > max_degree)
            throw SearchExhausted(
                "witness search passed degree " + std::to_string(max_degree) + " (skipped " +
                std::to_string(w.skipped_offenders) + " offenders, " +
                std::to_string(w.skipped_invariance) + " non-invariant, " +
                std::to_string(w.skipped_certification) +
                " uncertified); the coefficient ring may lack invariant maximal ideals");
        bool offender = false;
        for (const Scalar& o : pool) {
            if (equal(o, r)) {
                offender = true;
                break;
            }
        }
        if (offender) {
            ++w.skipped_offenders;
            continue;
        }
        bool invariant = true;
        for (const VarAction& va : action) {
            if (!ideal_invariant(r, va.sigma, va.delta)) {
                invariant = false;
                break;
            }
        }
        if (!invariant) {
            ++w.skipped_invariance;
            continue;
        }
        ASCheck cert = as_check(fam, r);
        if (!cert.pass) {
            ++w.skipped_certification;
            continue;
        }
        w.r0 = std::move(r);
        w.cert = std::move(cert);
        w.stream_position = pos;
        return w;
    }
}

std::vector<VarAction> encoding_action(const PidEncoding& enc) {
    std::vector<VarAction> out;
    for (uint32_t k = 1; k <= enc.nvars; ++k) {
        DerSpec d = is_zero(enc.big->commutator(0, k)) ? DerSpec::zero(enc.pid)
                                                       : DerSpec::formal_deriv(enc.pid);
        out.push_back({EndoSpec::identity(enc.pid), std::move(d)});
    }
    return out;
}

/// Bezout coefficients t with sum t_i gens_i = b; b must lie in the ideal
/// the gens generate.
std::vector<Scalar> bezout_express(const DomainPtr& dom, const std::vector<Scalar>& gens,
                                   const Scalar& b, const char* op) {
    Scalar g = dom->zero();
    std::vector<Scalar> coeff(gens.size(), dom->zero());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (is_zero(gens[i])) continue;
        PidExt e = pid_ext_gcd(g, gens[i]);
        for (Scalar& c : coeff) c = mul(e.s, c);
        coeff[i] = add(coeff[i], e.t);
        g = e.g;
    }
    if (is_zero(g)) throw Error(std::string(op) + ": the target ideal is zero");
    auto [q, rem] = pid_divmod(b, g);
    if (!is_zero(rem))
        throw Error(std::string(op) + ": " + scalar_to_string(b) +
                    " is not a member of the ideal generated by the leading coefficients");
    for (Scalar& c : coeff) c = mul(q, c);
    return coeff;
}

std::vector<Scalar> poly_coords(const SkewPoly& f, const std::map<MultiIndex, size_t>& col,
                                size_t width) {
    std::vector<Scalar> v(width, f.ring()->domain()->zero());
    for (const auto& [u, c] : f.terms()) v[col.at(u)] = c;
    return v;
}

using detail::AnyRowSpace;

} // namespace

Scalar transporter(const Scalar& a, const Scalar& r) {
    require_same_domain(a, r, "transporter");
    require_pid(a.domain(), "transporter");
    const DomainPtr& dom = a.domain();
    if (is_zero(a)) return is_zero(r) ? dom->one() : dom->zero();
    if (is_zero(r)) return dom->one();
    return pid_monic(pid_divmod(a, pid_gcd(a, r)).first);
}

IdealFamily IdealFamily::make(DomainPtr dom, uint32_t arity, std::vector<FamilyBase> bases,
                              std::vector<EndoSpec> sigma, std::vector<DerSpec> delta) {
    require_pid(dom, "ideal family");
    if (sigma.size() != arity)
        throw InvalidConstruction("ideal family: one twist per variable required");
    if (delta.empty()) delta.assign(arity, DerSpec::zero(dom));
    if (delta.size() != arity)
        throw InvalidConstruction("ideal family: one derivation per variable required");
    for (const EndoSpec& s : sigma)
        if (!s.domain()->equals(*dom))
            throw DomainMismatch("ideal family: twist domain differs from the coefficient ring");
    for (const DerSpec& d : delta)
        if (!d.domain()->equals(*dom))
            throw DomainMismatch(
                "ideal family: derivation domain differs from the coefficient ring");
    for (const FamilyBase& b : bases) {
        if (b.index.arity() != arity)
            throw InvalidConstruction("ideal family: base index arity mismatch");
        if (!b.gen.domain() || !b.gen.domain()->equals(*dom))
            throw DomainMismatch("ideal family: base generator domain mismatch");
    }
    return IdealFamily{std::move(dom), arity, std::move(bases), std::move(sigma),
                       std::move(delta)};
}

Scalar IdealFamily::twist(const MultiIndex& j, const Scalar& a) const {
    if (j.arity() != arity) throw InvalidConstruction("ideal family: index arity mismatch");
    Scalar out = a;
    for (uint32_t k = arity; k-- > 0;)
        if (j[k]) out = sigma[k].power(j[k]).apply(out);
    return out;
}

Scalar IdealFamily::generator_at(const MultiIndex& i) const {
    if (i.arity() != arity) throw InvalidConstruction("ideal family: index arity mismatch");
    Scalar g = dom->zero();
    for (const FamilyBase& b : bases) {
        auto shift = mi_sub(i, b.index);
        if (!shift) continue;
        g = pid_gcd(g, twist(*shift, b.gen));
    }
    return g;
}

uint32_t IdealFamily::max_base_norm() const {
    uint64_t m = 0;
    for (const FamilyBase& b : bases) m = std::max(m, b.index.total());
    return static_cast<uint32_t>(m);
}

ASCheck as_check(const IdealFamily& fam, const Scalar& r, long grid) {
    if (!r.domain() || !r.domain()->equals(*fam.dom))
        throw DomainMismatch("extension check: candidate domain mismatch");
    ASCheck out;
    out.grid_bound = grid < 0 ? static_cast<long>(fam.max_base_norm()) + 2 : grid;

    out.nonzero_ok = !is_zero(r);
    if (!out.nonzero_ok) {
        out.failure = "candidate is zero";
        return out;
    }
    out.nonunit_ok = !is_unit(r);
    if (!out.nonunit_ok) {
        out.failure = "candidate " + scalar_to_string(r) + " is a unit";
        return out;
    }
    out.normalizing_ok = true;
    for (uint32_t k = 0; k < fam.arity; ++k) {
        if (!ideal_invariant(r, fam.sigma[k], fam.delta[k])) {
            out.normalizing_ok = false;
            out.failure = "candidate does not normalize variable " + std::to_string(k) +
                          ": twist or derivation image leaves (" + scalar_to_string(r) + ")";
            return out;
        }
    }
    out.transporters_ok = true;
    for (const MultiIndex& i :
         indices_up_to(fam.arity, static_cast<uint32_t>(out.grid_bound))) {
        ++out.indices_checked;
        Scalar a = fam.generator_at(i);
        Scalar s = fam.twist(i, r);
        Scalar lhs = transporter(a, s);
        Scalar rhs = transporter(mul(r, a), s);
        if (!principal_included(lhs, rhs)) {
            out.transporters_ok = false;
            out.failed_index = i;
            out.failure = "transporter inclusion fails at " + mi_to_string(i) + ": (" +
                          scalar_to_string(lhs) + ") is not inside (" + scalar_to_string(rhs) +
                          ")";
            return out;
        }
    }
    out.pass = true;
    return out;
}

std::vector<Scalar> transporter_offenders(const Scalar& r0) {
    const DomainPtr& dom = r0.domain();
    require_pid(dom, "offender search");
    if (dom->kind() != DomainKind::PolyPrime)
        throw UnsupportedRing("offender search: enumeration needs a finite coefficient field");
    if (is_zero(r0)) throw InvalidConstruction("offender search requires a nonzero element");

    std::vector<Scalar> out;
    int d0 = poly_degree(r0);
    for (int d = 1; d <= d0; ++d) {
        uint64_t span = 1;
        for (int i = 0; i < d; ++i) span *= dom->char_p();
        for (uint64_t idx = 0; idx < span; ++idx) {
            Scalar cand = monic_at(dom, static_cast<uint32_t>(d), idx);
            if (!pid_irreducible(cand)) continue;
            Scalar lhs = transporter(r0, cand);
            Scalar rhs = transporter(mul(cand, r0), cand);
            if (!principal_included(lhs, rhs)) out.push_back(cand);
        }
    }
    // the commutative specialization must reproduce the irreducible factors
    std::vector<Scalar> factors;
    for (const auto& [f, m] : pid_factor(r0).factors) factors.push_back(f);
    bool match = factors.size() == out.size();
    for (size_t i = 0; match && i < out.size(); ++i) match = equal(out[i], factors[i]);
    if (!match)
        throw Error("offender search disagrees with the irreducible factors of " +
                    scalar_to_string(r0));
    return out;
}

ASWitness as_witness(const IdealFamily& fam, const RingPtr& ring, uint32_t max_degree) {
    if (!ring->domain()->equals(*fam.dom))
        throw DomainMismatch("witness search: ring coefficients differ from the family ring");
    if (ring->arity() != fam.arity)
        throw InvalidConstruction("witness search: ring arity differs from the family arity");
    std::vector<VarAction> action;
    for (uint32_t k = 0; k < ring->arity(); ++k) action.push_back({ring->sigma(k), ring->delta(k)});
    return witness_core(fam, action, max_degree);
}

ASWitness as_witness(const IdealFamily& fam, const OreRingPtr& ring, uint32_t max_degree) {
    if (!ring->domain()->equals(*fam.dom))
        throw DomainMismatch("witness search: ring coefficients differ from the family ring");
    if (fam.arity != 1)
        throw InvalidConstruction("witness search: a univariate ring needs a rank-one family");
    std::vector<VarAction> action{{ring->sigma(), ring->delta()}};
    return witness_core(fam, action, max_degree);
}

ASWitness as_witness(const IdealFamily& fam, const PidEncoding& enc, uint32_t max_degree) {
    if (!enc.pid->equals(*fam.dom))
        throw DomainMismatch("witness search: encoding coefficients differ from the family ring");
    if (enc.nvars != fam.arity)
        throw InvalidConstruction("witness search: encoding arity differs from the family arity");
    return witness_core(fam, encoding_action(enc), max_degree);
}

PidEncoding PidEncoding::make(const DomainPtr& pid, const std::vector<std::string>& xvars,
                              const std::vector<Scalar>& comm) {
    require_pid(pid, "coefficient encoding");
    if (xvars.empty())
        throw InvalidConstruction("coefficient encoding: at least one skew variable required");
    if (!comm.empty() && comm.size() != xvars.size())
        throw InvalidConstruction("coefficient encoding: one commutator per skew variable");
    DomainPtr base = pid->base();
    std::vector<std::string> vars;
    vars.push_back(pid->gen_name());
    vars.insert(vars.end(), xvars.begin(), xvars.end());
    std::map<std::pair<uint32_t, uint32_t>, Scalar> cm;
    for (uint32_t k = 0; k < comm.size(); ++k) {
        if (!comm[k].domain() || !comm[k].domain()->equals(*base))
            throw DomainMismatch("coefficient encoding: commutators live in the base field");
        if (!is_zero(comm[k])) cm[{0, k + 1}] = comm[k];
    }
    uint32_t n = static_cast<uint32_t>(xvars.size());
    RingPtr big = RingDescriptor::make(
        base, std::move(vars), std::vector<EndoSpec>(n + 1, EndoSpec::identity(base)),
        std::vector<DerSpec>(n + 1, DerSpec::zero(base)), std::move(cm), TermOrderSpec::lex());
    return PidEncoding{pid, std::move(big), n};
}

SkewPoly PidEncoding::lift(const Scalar& r) const {
    if (!r.domain() || !r.domain()->equals(*pid))
        throw DomainMismatch("encoding lift: coefficient domain mismatch");
    SkewPoly out(big);
    if (is_zero(r)) return out;
    for (int i = 0; i <= poly_degree(r); ++i) {
        Scalar c = poly_coeff(r, static_cast<uint32_t>(i));
        if (is_zero(c)) continue;
        MultiIndex u = mi_zero(big->arity());
        u.e[0] = static_cast<uint32_t>(i);
        out.add_term(u, c);
    }
    return out;
}

Scalar PidEncoding::project(const SkewPoly& f) const {
    std::vector<Scalar> coeffs;
    for (const auto& [u, c] : f.terms()) {
        for (uint32_t k = 1; k < u.arity(); ++k)
            if (u[k])
                throw InvalidConstruction(
                    "encoding project: support leaves the coefficient ring");
        if (coeffs.size() <= u[0]) coeffs.resize(u[0] + 1, big->domain()->zero());
        coeffs[u[0]] = c;
    }
    return poly_build(pid, coeffs);
}

MultiIndex PidEncoding::x_part(const MultiIndex& e) const {
    MultiIndex out;
    out.e.assign(e.e.begin() + 1, e.e.end());
    return out;
}

MultiIndex PidEncoding::x_embed(const MultiIndex& u) const {
    MultiIndex out = mi_zero(nvars + 1);
    for (uint32_t k = 0; k < nvars; ++k) out.e[k + 1] = u[k];
    return out;
}

SkewPoly PidEncoding::x_monomial(const MultiIndex& u) const {
    return SkewPoly::monomial(big, x_embed(u), big->domain()->one());
}

MultiIndex PidEncoding::le_x(const SkewPoly& f) const {
    LeadingData ld = leading(f);
    if (ld.zero) throw InvalidConstruction("encoding: the zero polynomial has no leading data");
    return x_part(ld.exp);
}

Scalar PidEncoding::coeff_at_x(const SkewPoly& f, const MultiIndex& u) const {
    std::vector<Scalar> coeffs;
    for (const auto& [e, c] : f.terms()) {
        if (x_part(e) != u) continue;
        if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, big->domain()->zero());
        coeffs[e[0]] = c;
    }
    return poly_build(pid, coeffs);
}

Scalar PidEncoding::lc_R(const SkewPoly& f) const { return coeff_at_x(f, le_x(f)); }

IdealFamily leading_family(const GroebnerBasis& gb, const PidEncoding& enc) {
    if (gb.ring != enc.big && !gb.ring->equals(*enc.big))
        throw DomainMismatch("leading family: basis ring differs from the encoding");
    std::vector<FamilyBase> bases;
    for (const SkewPoly& g : gb.basis)
        bases.push_back({enc.x_part(leading(g).exp), enc.lc_R(g)});
    std::vector<EndoSpec> sigma(enc.nvars, EndoSpec::identity(enc.pid));
    std::vector<DerSpec> delta;
    for (const VarAction& va : encoding_action(enc)) delta.push_back(va.delta);
    return IdealFamily::make(enc.pid, enc.nvars, std::move(bases), std::move(sigma),
                             std::move(delta));
}

namespace {

/// Leading-cancellation division of rp by the lifted r0 on the right:
/// returns p1 with p1 * lift(r0) == rp. Exactness is guaranteed when r0
/// normalizes the ring; any failure throws.
SkewPoly right_divide_by_r0(const SkewPoly& rp, const Scalar& r0, const IdealFamily& fam,
                            const PidEncoding& enc) {
    SkewPoly p1(enc.big);
    SkewPoly rem = rp;
    SkewPoly lifted = enc.lift(r0);
    while (!rem.is_zero()) {
        MultiIndex u = enc.le_x(rem);
        Scalar c = enc.coeff_at_x(rem, u);
        auto [q, r] = pid_divmod(c, fam.twist(u, r0));
        if (!is_zero(r))
            throw Error("descent: right division by the witness failed at " + mi_to_string(u) +
                        "; the witness does not normalize the ring");
        SkewPoly term = skew_mul(enc.lift(q), enc.x_monomial(u));
        p1 = skew_add(p1, term);
        rem = skew_sub(rem, skew_mul(term, lifted));
    }
    if (skew_mul(p1, lifted) != rp)
        throw Error("descent: right division by the witness did not reproduce the product");
    return p1;
}

} // namespace

ExtractResult extract_intersection(const LeftIdeal& I, const ASWitness& w,
                                   const PidEncoding& enc, const ExtractOptions& opts) {
    if (I.ring != enc.big && !I.ring->equals(*enc.big))
        throw DomainMismatch("extraction: ideal ring differs from the encoding");
    if (!w.r0.domain() || !w.r0.domain()->equals(*enc.pid))
        throw DomainMismatch("extraction: witness domain differs from the encoding coefficients");
    if (is_zero(w.r0)) throw InvalidConstruction("extraction: witness element is zero");

    GroebnerBasis gb = buchberger(I);
    if (gb.contains_one()) throw NotProper("extraction: the ideal is the whole ring");

    ExtractResult res;
    res.q = SkewPoly(enc.big);
    res.a_final = enc.pid->zero();

    SkewPoly r0big = enc.lift(w.r0);
    if (left_reduce(r0big, gb.basis).is_zero()) {
        res.element = w.r0;
        res.immediate = true;
        return res;
    }

    IdealFamily fam = leading_family(gb, enc);
    TermOrderSpec xorder = TermOrderSpec::lex();

    // search bounds
    int ycap0 = poly_degree(w.r0);
    for (const SkewPoly& g : gb.basis)
        for (const auto& [u, c] : g.terms()) ycap0 = std::max(ycap0, static_cast<int>(u[0]));
    ycap0 += 4;

    std::vector<MultiIndex> stages = indices_up_to(enc.nvars, opts.degree_ceiling);
    std::sort(stages.begin(), stages.end(),
              [&](const MultiIndex& a, const MultiIndex& b) { return xorder.less(a, b); });
    if (opts.support_floor) {
        if (opts.support_floor->arity() != enc.nvars)
            throw InvalidConstruction("extraction: support floor arity mismatch");
        std::erase_if(stages,
                      [&](const MultiIndex& u) { return xorder.less(u, *opts.support_floor); });
    }

    SkewPoly one_big = SkewPoly::constant(enc.big, enc.big->domain()->one());

    // staged solve for Q with Q r0 - 1 in I, smallest skew lead first
    auto solve = [&](int ycap) -> std::optional<SkewPoly> {
        std::vector<std::pair<MultiIndex, uint32_t>> cands;
        std::vector<SkewPoly> rows;
        std::map<MultiIndex, size_t> col;
        auto intern = [&](const SkewPoly& p) {
            for (const auto& [u, c] : p.terms()) col.emplace(u, 0);
        };
        for (const MultiIndex& m : stages) {
            for (int d = 0; d <= ycap; ++d) {
                MultiIndex e = enc.x_embed(m);
                e.e[0] = static_cast<uint32_t>(d);
                SkewPoly cand = SkewPoly::monomial(enc.big, e, enc.big->domain()->one());
                SkewPoly nf = left_reduce(skew_mul(cand, r0big), gb.basis);
                intern(nf);
                rows.push_back(std::move(nf));
                cands.emplace_back(m, static_cast<uint32_t>(d));
            }
        }
        intern(one_big);
        size_t width = 0;
        for (auto& [u, idx] : col) idx = width++;

        AnyRowSpace rs(enc.big->domain(), width);
        std::vector<Scalar> target = poly_coords(one_big, col, width);
        size_t next = 0;
        for (size_t s = 0; s < stages.size(); ++s) {
            for (int d = 0; d <= ycap; ++d) rs.insert(poly_coords(rows[next++], col, width));
            auto expr = rs.express(target);
            if (!expr) continue;
            SkewPoly q(enc.big);
            for (size_t i = 0; i < expr->size(); ++i) {
                if (is_zero((*expr)[i])) continue;
                MultiIndex e = enc.x_embed(cands[i].first);
                e.e[0] = cands[i].second;
                q.add_term(e, (*expr)[i]);
            }
            return q;
        }
        return std::nullopt;
    };

    std::optional<SkewPoly> q = solve(opts.ydeg_cap < 0 ? ycap0 : opts.ydeg_cap);
    if (!q && opts.ydeg_cap < 0) q = solve(2 * ycap0);
    if (!q)
        throw SearchExhausted(
            "extraction: no multiplier with Q r0 - 1 in the ideal below skew degree " +
            std::to_string(opts.degree_ceiling) +
            "; the ideal may not be maximal or the witness may not apply");
    if (q->is_zero() ||
        !left_reduce(skew_sub(skew_mul(*q, r0big), one_big), gb.basis).is_zero())
        throw Error("extraction: the solved multiplier fails its defining membership");
    res.q = *q;

    // descent: cancel the skew lead of Q against the leading family until Q
    // is a coefficient
    SkewPoly cur = *q;
    while (true) {
        MultiIndex m = enc.le_x(cur);
        if (m.is_zero()) break;
        Scalar a = enc.lc_R(cur);
        Scalar shifted = fam.twist(m, w.r0);
        auto [b, brem] = pid_divmod(mul(a, shifted), w.r0);
        if (!is_zero(brem))
            throw Error("descent: the transporter inclusion fails at " + mi_to_string(m) +
                        "; the witness is not certified for this ideal");

        // P in I with R-leading term b x^m, combined from basis elements
        std::vector<size_t> applicable;
        std::vector<Scalar> gens;
        for (size_t j = 0; j < gb.basis.size(); ++j) {
            MultiIndex lej = enc.x_part(leading(gb.basis[j]).exp);
            if (!mi_divides(lej, m)) continue;
            applicable.push_back(j);
            gens.push_back(fam.twist(*mi_sub(m, lej), enc.lc_R(gb.basis[j])));
        }
        std::vector<Scalar> t = bezout_express(enc.pid, gens, b, "descent");
        SkewPoly p(enc.big);
        for (size_t j = 0; j < applicable.size(); ++j) {
            if (is_zero(t[j])) continue;
            MultiIndex lej = enc.x_part(leading(gb.basis[applicable[j]]).exp);
            SkewPoly shift = skew_mul(enc.x_monomial(*mi_sub(m, lej)), gb.basis[applicable[j]]);
            p = skew_add(p, skew_mul(enc.lift(t[j]), shift));
        }
        if (p.is_zero() || enc.le_x(p) != m || enc.lc_R(p) != b)
            throw Error("descent: the combined basis element misses its leading term");

        SkewPoly p1 = right_divide_by_r0(skew_mul(r0big, p), w.r0, fam, enc);
        if (p1.is_zero() || enc.le_x(p1) != m || enc.lc_R(p1) != a)
            throw Error("descent: the correction misses the lead of Q");

        SkewPoly next = skew_sub(cur, p1);
        if (next.is_zero() || !xorder.less(enc.le_x(next), m))
            throw Error("descent: le(Q) did not strictly decrease");
        res.trace.push_back({m, std::move(a), std::move(b), std::move(p1)});
        cur = std::move(next);
    }

    res.a_final = enc.project(cur);
    res.element = sub(mul(res.a_final, w.r0), enc.pid->one());
    if (is_zero(res.element))
        throw Error("extraction: the descent terminated at an invertible witness");
    if (!left_reduce(enc.lift(res.element), gb.basis).is_zero())
        throw Error("extraction: the extracted element fails the membership re-check");
    return res;
}

} // namespace skewpoly
