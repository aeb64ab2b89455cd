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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "skewpoly/amitsur.hpp"
#include "skewpoly/errors.hpp"
#include "skewpoly/pid.hpp"
#include "skewpoly/textio.hpp"
#include "support.hpp"

using namespace skewpoly;

namespace {

DomainPtr f2y() { return Domain::poly_over_prime(2); }
DomainPtr f3y() { return Domain::poly_over_prime(3); }
DomainPtr f5y() { return Domain::poly_over_prime(5); }

Scalar P(const DomainPtr& dom, const std::string& text) { return parse_scalar(dom, text); }

IdealFamily single_base_family(const DomainPtr& dom, const Scalar& gen) {
    return IdealFamily::make(dom, 1, {{MultiIndex{{0}}, gen}},
                             {EndoSpec::identity(dom)});
}

/// All monic polynomials of the given degree, coefficient-index order.
std::vector<Scalar> all_monic_polys(const DomainPtr& dom, uint32_t deg) {
    std::vector<Scalar> out;
    uint64_t p = dom->char_p();
    uint64_t span = 1;
    for (uint32_t i = 0; i < deg; ++i) span *= p;
    for (uint64_t idx = 0; idx < span; ++idx) {
        std::vector<Scalar> c(deg + 1, dom->base()->zero());
        uint64_t v = idx;
        for (uint32_t i = 0; i < deg; ++i) {
            c[i] = dom->base()->from_int(static_cast<long long>(v % p));
            v /= p;
        }
        c[deg] = dom->base()->one();
        out.push_back(poly_build(dom, c));
    }
    return out;
}

/// All polynomials of degree <= deg (including zero).
std::vector<Scalar> all_polys_up_to(const DomainPtr& dom, uint32_t deg) {
    std::vector<Scalar> out;
    uint64_t p = dom->char_p();
    uint64_t span = 1;
    for (uint32_t i = 0; i <= deg; ++i) span *= p;
    for (uint64_t idx = 0; idx < span; ++idx) {
        std::vector<Scalar> c(deg + 1, dom->base()->zero());
        uint64_t v = idx;
        for (uint32_t i = 0; i <= deg; ++i) {
            c[i] = dom->base()->from_int(static_cast<long long>(v % p));
            v /= p;
        }
        out.push_back(poly_build(dom, c));
    }
    return out;
}

PidEncoding enc_f2_one_var() { return PidEncoding::make(f2y(), {"x1"}); }

LeftIdeal lifted_ideal(const PidEncoding& enc, const std::vector<SkewPoly>& gens) {
    return LeftIdeal::make(enc.big, gens);
}

} // namespace

TEST_CASE("transporter: frozen examples over F2[y]") {
    DomainPtr dom = f2y();
    Scalar y = dom->gen();
    // s*y lies in (y) for every s
    CHECK(transporter(y, y) == dom->one());
    // s*(y+1) lies in (y) exactly when y divides s
    CHECK(transporter(y, P(dom, "y+1")) == y);
    CHECK(transporter(dom->zero(), y) == dom->zero());
    CHECK(transporter(dom->zero(), dom->zero()) == dom->one());
    CHECK(transporter(y, dom->zero()) == dom->one());
}

TEST_CASE("transporter: rejected domains") {
    DomainPtr gf = Domain::galois_field(2, 2, {1, 1, 1});
    CHECK_THROWS_AS(transporter(gf->one(), gf->gen()), UnsupportedRing);
    CHECK_THROWS_AS(transporter(f2y()->gen(), f3y()->gen()), DomainMismatch);
}

TEST_CASE("transporter: definitional soundness against brute force") {
    // s in (a : r) iff s r in (a), over every s of degree <= 3
    for (const DomainPtr& dom : {f2y(), f3y()}) {
        std::vector<Scalar> elts = all_polys_up_to(dom, 2);
        for (const Scalar& a : elts) {
            for (const Scalar& r : elts) {
                Scalar gen = transporter(a, r);
                for (const Scalar& s : all_polys_up_to(dom, 3)) {
                    bool in_ideal = is_zero(a) ? is_zero(mul(s, r))
                                               : pid_divides(a, mul(s, r));
                    bool by_gen = is_zero(gen) ? is_zero(s) : pid_divides(gen, s);
                    REQUIRE(in_ideal == by_gen);
                }
            }
        }
    }
}

TEST_CASE("transporter: soundness over Q[y]") {
    DomainPtr dom = Domain::poly_over_rationals();
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(dom, rng, 3);
        Scalar r = random_scalar(dom, rng, 3);
        Scalar s = random_scalar(dom, rng, 4);
        Scalar gen = transporter(a, r);
        bool in_ideal = is_zero(a) ? is_zero(mul(s, r)) : pid_divides(a, mul(s, r));
        bool by_gen = is_zero(gen) ? is_zero(s) : pid_divides(gen, s);
        CHECK(in_ideal == by_gen);
    }
}

TEST_CASE("ideal family: construction and the translation law") {
    DomainPtr dom = f2y();
    CHECK_THROWS_AS(IdealFamily::make(Domain::galois_field(2, 2, {1, 1, 1}), 1, {}, {}),
                    UnsupportedRing);
    CHECK_THROWS_AS(IdealFamily::make(dom, 2, {}, {EndoSpec::identity(dom)}),
                    InvalidConstruction);
    CHECK_THROWS_AS(
        IdealFamily::make(dom, 1, {{MultiIndex{{0, 0}}, dom->gen()}}, {EndoSpec::identity(dom)}),
        InvalidConstruction);
    CHECK_THROWS_AS(
        IdealFamily::make(dom, 1, {{MultiIndex{{0}}, f3y()->gen()}}, {EndoSpec::identity(dom)}),
        DomainMismatch);

    // two bases at distinct indices over F5[y] with a genuine twist
    DomainPtr d5 = f5y();
    IdealFamily fam = IdealFamily::make(
        d5, 2,
        {{MultiIndex{{1, 0}}, P(d5, "y^2+2")}, {MultiIndex{{0, 1}}, P(d5, "y+1")}},
        {EndoSpec::scale(P(d5, "2")), EndoSpec::identity(d5)});
    CHECK(fam.generator_at(MultiIndex{{0, 0}}) == d5->zero());
    CHECK(fam.generator_at(MultiIndex{{1, 0}}) == pid_monic(P(d5, "y^2+2")));
    // sigma^j(I_i) subset I_{i+j} on a grid: generator_at(i+j) divides the
    // twisted generator_at(i)
    for (uint32_t i1 = 0; i1 < 3; ++i1)
        for (uint32_t i2 = 0; i2 < 3; ++i2)
            for (uint32_t j1 = 0; j1 < 3; ++j1)
                for (uint32_t j2 = 0; j2 < 3; ++j2) {
                    MultiIndex i{{i1, i2}}, j{{j1, j2}};
                    Scalar gi = fam.generator_at(i);
                    Scalar gij = fam.generator_at(mi_add(i, j));
                    if (is_zero(gi)) continue;
                    REQUIRE_FALSE(is_zero(gij));
                    REQUIRE(pid_divides(gij, fam.twist(j, gi)));
                }
}

TEST_CASE("extension check: frozen examples") {
    DomainPtr dom = f2y();
    IdealFamily fam = single_base_family(dom, dom->gen());

    ASCheck ok = as_check(fam, P(dom, "y^2+y+1"));
    CHECK(ok.pass);
    CHECK(ok.nonunit_ok);
    CHECK(ok.normalizing_ok);
    CHECK(ok.transporters_ok);
    CHECK(ok.grid_bound == 2);
    CHECK(ok.indices_checked == 3); // |i| <= 2 in one variable

    // (y : y) = R is not inside (y^2 : y) = (y)
    ASCheck bad = as_check(fam, dom->gen());
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.transporters_ok);
    REQUIRE(bad.failed_index.has_value());
    CHECK(*bad.failed_index == MultiIndex{{0}});

    ASCheck unit = as_check(fam, dom->one());
    CHECK_FALSE(unit.pass);
    CHECK_FALSE(unit.nonunit_ok);

    ASCheck zero = as_check(fam, dom->zero());
    CHECK_FALSE(zero.pass);
    CHECK_FALSE(zero.nonzero_ok);

    CHECK_THROWS_AS(as_check(fam, f3y()->gen()), DomainMismatch);
}

TEST_CASE("extension check: normalizing filter sees twists and derivations") {
    DomainPtr dom = f5y();
    // twist y -> 2y: (y) is invariant, (y+1) is not
    IdealFamily fam = IdealFamily::make(dom, 1, {{MultiIndex{{0}}, dom->one()}},
                                        {EndoSpec::scale(P(dom, "2"))});
    CHECK(as_check(fam, dom->gen()).pass);
    ASCheck bad = as_check(fam, P(dom, "y+1"));
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.normalizing_ok);

    // derivation d/dy over F2[y]: (y^2+y+1) is not invariant
    DomainPtr d2 = f2y();
    IdealFamily famd = IdealFamily::make(d2, 1, {{MultiIndex{{0}}, d2->one()}},
                                         {EndoSpec::identity(d2)}, {DerSpec::formal_deriv(d2)});
    ASCheck badd = as_check(famd, P(d2, "y^2+y+1"));
    CHECK_FALSE(badd.pass);
    CHECK_FALSE(badd.normalizing_ok);
}

TEST_CASE("offenders: frozen examples") {
    DomainPtr dom = f2y();
    std::vector<Scalar> off = transporter_offenders(P(dom, "y^2+y"));
    REQUIRE(off.size() == 2);
    CHECK(off[0] == dom->gen());
    CHECK(off[1] == P(dom, "y+1"));

    CHECK(transporter_offenders(dom->one()).empty());

    std::vector<Scalar> off3 = transporter_offenders(P(f3y(), "y^2"));
    REQUIRE(off3.size() == 1);
    CHECK(off3[0] == f3y()->gen());

    CHECK_THROWS_AS(transporter_offenders(dom->zero()), InvalidConstruction);
    CHECK_THROWS_AS(transporter_offenders(Domain::rationals()->one()), UnsupportedRing);
}

TEST_CASE("offenders equal the irreducible factor set, exhaustively") {
    for (const DomainPtr& dom : {f2y(), f3y()}) {
        for (uint32_t deg = 1; deg <= 5; ++deg) {
            for (const Scalar& r0 : all_monic_polys(dom, deg)) {
                std::vector<Scalar> off = transporter_offenders(r0);
                std::vector<Scalar> expect;
                for (const auto& [f, m] : pid_factor(r0).factors) expect.push_back(f);
                REQUIRE(off.size() == expect.size());
                for (size_t i = 0; i < off.size(); ++i) REQUIRE(off[i] == expect[i]);
            }
        }
    }
}

TEST_CASE("witness search: commutative two-variable ring over F2[y]") {
    DomainPtr dom = f2y();
    RingPtr ring = RingDescriptor::make(
        dom, {"x1", "x2"}, {EndoSpec::identity(dom), EndoSpec::identity(dom)},
        {DerSpec::zero(dom), DerSpec::zero(dom)}, {}, TermOrderSpec::lex());
    IdealFamily fam = IdealFamily::make(
        dom, 2, {{MultiIndex{{1, 0}}, dom->gen()}, {MultiIndex{{0, 1}}, P(dom, "y+1")}},
        {EndoSpec::identity(dom), EndoSpec::identity(dom)});

    ASWitness w = as_witness(fam, ring);
    // first irreducible coprime to both base generators
    CHECK(w.r0 == P(dom, "y^2+y+1"));
    CHECK(w.stream_position == 2);
    CHECK(w.skipped_offenders == 2);
    CHECK(w.skipped_invariance == 0);
    CHECK(w.cert.pass);

    // a unit base generator contributes no offenders
    IdealFamily triv = IdealFamily::make(dom, 2, {{MultiIndex{{0, 0}}, dom->one()}},
                                         {EndoSpec::identity(dom), EndoSpec::identity(dom)});
    ASWitness wt = as_witness(triv, ring);
    CHECK(wt.r0 == dom->gen());
    CHECK(wt.stream_position == 0);
    CHECK(wt.skipped_offenders == 0);
}

TEST_CASE("witness search: d/dy leaves no invariant maximal ideal in char 2") {
    DomainPtr dom = f2y();
    OreRingPtr ore = OreRing::make(dom, EndoSpec::identity(dom), DerSpec::formal_deriv(dom));
    IdealFamily fam = single_base_family(dom, dom->gen());
    CHECK_THROWS_AS(as_witness(fam, ore, 5), SearchExhausted);
}

TEST_CASE("witness search: twisted positive case over F5[y]") {
    DomainPtr dom = f5y();
    EndoSpec tw = EndoSpec::scale(P(dom, "2"));
    OreRingPtr ore = OreRing::make(dom, tw, DerSpec::zero(dom));
    IdealFamily fam = IdealFamily::make(dom, 1, {{MultiIndex{{0}}, dom->gen()}}, {tw});

    ASWitness w = as_witness(fam, ore, 6);
    CHECK(w.r0 == P(dom, "y^4+2"));
    CHECK(w.cert.pass);
    CHECK(pid_irreducible(w.r0));

    // independent invariance re-check: x r0 == r0 x in the Ore ring
    OrePoly r0c = OrePoly::from_coeffs(ore, {w.r0});
    OrePoly x = OrePoly::monomial(ore, dom->one(), 1);
    CHECK(ore_mul(x, r0c) == ore_mul(r0c, x));
    // non-offender: coprime to the base generator
    CHECK(pid_gcd(w.r0, dom->gen()) == dom->one());
    // minimality: every earlier irreducible in the stream is an offender or
    // fails invariance
    MaximalIdealStream stream(dom);
    for (uint64_t pos = 0; pos < w.stream_position; ++pos) {
        Scalar r = stream.next();
        Scalar s = tw.apply(r);
        bool invariant = pid_divides(r, s) && pid_divides(s, r);
        bool offender = equal(r, dom->gen());
        CHECK((offender || !invariant));
    }
    CHECK(stream.next() == w.r0);
}

TEST_CASE("witness search: mismatches rejected") {
    DomainPtr dom = f2y();
    IdealFamily fam = single_base_family(dom, dom->gen());
    OreRingPtr wrongdom =
        OreRing::make(f3y(), EndoSpec::identity(f3y()), DerSpec::zero(f3y()));
    CHECK_THROWS_AS(as_witness(fam, wrongdom), DomainMismatch);
    RingPtr two = RingDescriptor::make(dom, {"x1", "x2"},
                                       {EndoSpec::identity(dom), EndoSpec::identity(dom)},
                                       {DerSpec::zero(dom), DerSpec::zero(dom)}, {},
                                       TermOrderSpec::lex());
    CHECK_THROWS_AS(as_witness(fam, two), InvalidConstruction);
}

TEST_CASE("encoding: ring shape and coefficient maps") {
    PidEncoding enc = enc_f2_one_var();
    CHECK(enc.big->arity() == 2);
    CHECK(enc.big->vars()[0] == "y");
    CHECK(enc.big->vars()[1] == "x1");
    CHECK(enc.big->domain()->kind() == DomainKind::PrimeField);

    Scalar r = P(enc.pid, "y^2+y+1");
    SkewPoly lifted = enc.lift(r);
    CHECK(lifted.term_count() == 3);
    CHECK(enc.project(lifted) == r);
    CHECK(enc.project(enc.lift(enc.pid->zero())) == enc.pid->zero());

    // y^2 x1 + y x1 + x1 + y: skew lead (1), R-lead y^2+y+1, constant part y
    SkewPoly f = lifted * SkewPoly::variable(enc.big, 1) + enc.lift(enc.pid->gen());
    CHECK(enc.le_x(f) == MultiIndex{{1}});
    CHECK(enc.lc_R(f) == r);
    CHECK(enc.coeff_at_x(f, MultiIndex{{0}}) == enc.pid->gen());
    CHECK(enc.coeff_at_x(f, MultiIndex{{2}}) == enc.pid->zero());
    CHECK_THROWS_AS(enc.project(f), InvalidConstruction);

    // commutator encoding: x1 y = y x1 + 1
    PidEncoding weyl = PidEncoding::make(f2y(), {"x1"}, {f2y()->base()->one()});
    SkewPoly prod = SkewPoly::variable(weyl.big, 1) * SkewPoly::variable(weyl.big, 0);
    SkewPoly expect = SkewPoly::variable(weyl.big, 0) * SkewPoly::variable(weyl.big, 1) +
                      SkewPoly::constant(weyl.big, weyl.big->domain()->one());
    CHECK(prod == expect);

    CHECK_THROWS_AS(PidEncoding::make(f2y(), {}), InvalidConstruction);
    CHECK_THROWS_AS(PidEncoding::make(f2y(), {"x1"}, {f2y()->gen()}), DomainMismatch);
}

TEST_CASE("leading family: frozen examples") {
    PidEncoding enc = enc_f2_one_var();
    Scalar y = enc.pid->gen();

    // the ideal of left multiples of y x1: leading ideals (y) at 1, zero at 0
    SkewPoly yx = enc.lift(y) * SkewPoly::variable(enc.big, 1);
    GroebnerBasis gb = buchberger(lifted_ideal(enc, {yx}));
    IdealFamily fam = leading_family(gb, enc);
    CHECK(fam.generator_at(MultiIndex{{0}}) == enc.pid->zero());
    CHECK(fam.generator_at(MultiIndex{{1}}) == y);
    CHECK(fam.generator_at(MultiIndex{{3}}) == y);

    // the whole ring: every leading ideal is R
    GroebnerBasis one = buchberger(
        lifted_ideal(enc, {SkewPoly::constant(enc.big, enc.big->domain()->one())}));
    IdealFamily famone = leading_family(one, enc);
    CHECK(famone.generator_at(MultiIndex{{0}}) == enc.pid->one());
    CHECK(famone.generator_at(MultiIndex{{2}}) == enc.pid->one());

    // an empty family is the zero family
    IdealFamily zero = IdealFamily::make(enc.pid, 1, {}, {EndoSpec::identity(enc.pid)});
    CHECK(zero.generator_at(MultiIndex{{0}}) == enc.pid->zero());
    CHECK(zero.generator_at(MultiIndex{{4}}) == enc.pid->zero());
}

TEST_CASE("extraction: witness already in the ideal returns immediately") {
    PidEncoding enc = enc_f2_one_var();
    Scalar p = P(enc.pid, "y^2+y+1");
    LeftIdeal I = lifted_ideal(enc, {SkewPoly::variable(enc.big, 1), enc.lift(p)});
    ASWitness w;
    w.r0 = p;
    ExtractResult res = extract_intersection(I, w, enc);
    CHECK(res.immediate);
    CHECK(res.element == p);
    CHECK(res.trace.empty());
}

TEST_CASE("extraction: minimal multiplier and the frozen output") {
    PidEncoding enc = enc_f2_one_var();
    Scalar y = enc.pid->gen();
    Scalar p = P(enc.pid, "y^2+y+1");
    // I = <x1 + y, y^2+y+1>; I cap R = (y^2+y+1)
    LeftIdeal I = lifted_ideal(
        enc, {SkewPoly::variable(enc.big, 1) + enc.lift(y), enc.lift(p)});
    GroebnerBasis gb = buchberger(I);
    ASWitness w = as_witness(leading_family(gb, enc), enc);
    CHECK(w.r0 == y);

    ExtractResult res = extract_intersection(I, w, enc);
    CHECK_FALSE(res.immediate);
    // minimal Q is constant in the skew variables: Q = y+1, (y+1) y - 1 = p
    CHECK(res.q == enc.lift(P(enc.pid, "y+1")));
    CHECK(res.a_final == P(enc.pid, "y+1"));
    CHECK(res.element == p);
    CHECK(res.trace.empty());

    // the eliminate oracle agrees that the result generates I cap R
    std::vector<SkewPoly> cut = eliminate(I, {0});
    REQUIRE(cut.size() == 1);
    CHECK(cut[0] == enc.lift(p));
}

TEST_CASE("extraction: support floor forces a genuine descent step") {
    PidEncoding enc = enc_f2_one_var();
    Scalar y = enc.pid->gen();
    Scalar p = P(enc.pid, "y^2+y+1");
    LeftIdeal I = lifted_ideal(
        enc, {SkewPoly::variable(enc.big, 1) + enc.lift(y), enc.lift(p)});
    GroebnerBasis gb = buchberger(I);
    ASWitness w = as_witness(leading_family(gb, enc), enc);

    ExtractOptions opts;
    opts.support_floor = MultiIndex{{1}};
    ExtractResult res = extract_intersection(I, w, enc, opts);
    CHECK_FALSE(res.immediate);
    // the solver is forced into Q = y x1 and one descent step to a = y^2
    CHECK(res.q == enc.lift(y) * SkewPoly::variable(enc.big, 1));
    REQUIRE(res.trace.size() == 1);
    CHECK(res.trace[0].le_q == MultiIndex{{1}});
    CHECK(res.trace[0].a == y);
    CHECK(res.trace[0].b == y);
    CHECK(res.a_final == P(enc.pid, "y^2"));
    CHECK(res.element == P(enc.pid, "y^3+1"));
    // still a nonzero member of I cap R = (y^2+y+1)
    CHECK(pid_divides(p, res.element));
}

TEST_CASE("extraction: guards") {
    PidEncoding enc = enc_f2_one_var();
    ASWitness w;
    w.r0 = enc.pid->gen();
    LeftIdeal whole =
        lifted_ideal(enc, {SkewPoly::constant(enc.big, enc.big->domain()->one())});
    CHECK_THROWS_AS(extract_intersection(whole, w, enc), NotProper);

    LeftIdeal I = lifted_ideal(enc, {SkewPoly::variable(enc.big, 1)});
    ASWitness wz;
    wz.r0 = enc.pid->zero();
    CHECK_THROWS_AS(extract_intersection(I, wz, enc), InvalidConstruction);

    // I = <x1> in the commutative encoding is proper with I cap R = 0 and is
    // not maximal: no multiplier exists and the bounded search reports it
    ASWitness wy;
    wy.r0 = enc.pid->gen();
    ExtractOptions tight;
    tight.degree_ceiling = 3;
    CHECK_THROWS_AS(extract_intersection(I, wy, enc, tight), SearchExhausted);
}

TEST_CASE("extraction: derivation encoding accepts a member witness") {
    // x1 y = y x1 + 1. An ideal <x1, p> stays proper only for p with zero
    // derivative: x1 p - p x1 = p' is a left multiple of p, so p' coprime to
    // p would pull in 1. In char 2, p = y^2 works.
    PidEncoding enc = PidEncoding::make(f2y(), {"x1"}, {f2y()->base()->one()});
    Scalar bad = P(enc.pid, "y^2+y+1");
    LeftIdeal blows = lifted_ideal(enc, {SkewPoly::variable(enc.big, 1), enc.lift(bad)});
    ASWitness wb;
    wb.r0 = bad;
    CHECK_THROWS_AS(extract_intersection(blows, wb, enc), NotProper);

    Scalar p = P(enc.pid, "y^2");
    LeftIdeal I = lifted_ideal(enc, {SkewPoly::variable(enc.big, 1), enc.lift(p)});
    ASWitness w;
    w.r0 = p;
    ExtractResult res = extract_intersection(I, w, enc);
    CHECK(res.immediate);
    CHECK(res.element == p);
}

TEST_CASE("extraction: random maximal ideals over F2[y] and F3[y]") {
    Rng rng(2026);
    for (const DomainPtr& dom : {f2y(), f3y()}) {
        PidEncoding enc = PidEncoding::make(dom, {"x1"});
        for (int trial = 0; trial < 25; ++trial) {
            // I = <x1 - u, p> with p irreducible is maximal: the quotient is
            // the field R/(p) with x1 acting as multiplication by u
            Scalar p;
            do {
                p = pid_monic(random_scalar(dom, rng, 3));
            } while (poly_degree(p) < 1 || !pid_irreducible(p));
            Scalar u = random_scalar(dom, rng, 2);
            LeftIdeal I = lifted_ideal(
                enc, {skew_sub(SkewPoly::variable(enc.big, 1), enc.lift(u)), enc.lift(p)});
            GroebnerBasis gb = buchberger(I);
            ASWitness w = as_witness(leading_family(gb, enc), enc);

            ExtractResult res = extract_intersection(I, w, enc);
            REQUIRE_FALSE(is_zero(res.element));
            CHECK(res.element.domain()->equals(*dom));
            CHECK(left_reduce(enc.lift(res.element), gb.basis).is_zero());
            // I cap R = (p): cross-check via divisibility
            CHECK(pid_divides(p, res.element));
            if (!res.immediate) {
                CHECK(left_reduce(skew_sub(skew_mul(res.q, enc.lift(w.r0)),
                                           SkewPoly::constant(enc.big,
                                                              enc.big->domain()->one())),
                                  gb.basis)
                          .is_zero());
            }
        }
    }
}

TEST_CASE("extraction: forced descent keeps all verifications green") {
    Rng rng(515);
    DomainPtr dom = f2y();
    PidEncoding enc = PidEncoding::make(dom, {"x1"});
    for (int trial = 0; trial < 10; ++trial) {
        Scalar p;
        do {
            p = pid_monic(random_scalar(dom, rng, 3));
        } while (poly_degree(p) < 2 || !pid_irreducible(p));
        // u must act invertibly mod p, otherwise no multiplier supported
        // above the floor can exist (x1 kills the quotient).
        Scalar u;
        do {
            u = random_scalar(dom, rng, 2);
        } while (is_zero(u) || pid_divides(p, u));
        LeftIdeal I = lifted_ideal(
            enc, {skew_sub(SkewPoly::variable(enc.big, 1), enc.lift(u)), enc.lift(p)});
        GroebnerBasis gb = buchberger(I);
        ASWitness w = as_witness(leading_family(gb, enc), enc);

        ExtractOptions opts;
        opts.support_floor = MultiIndex{{1}};
        ExtractResult res = extract_intersection(I, w, enc, opts);
        REQUIRE_FALSE(is_zero(res.element));
        CHECK(left_reduce(enc.lift(res.element), gb.basis).is_zero());
        CHECK(pid_divides(p, res.element));
        CHECK(res.trace.size() >= 1);
        // the recorded trace descends strictly
        TermOrderSpec xo = TermOrderSpec::lex();
        for (size_t i = 1; i < res.trace.size(); ++i)
            CHECK(xo.less(res.trace[i].le_q, res.trace[i - 1].le_q));
    }
}
