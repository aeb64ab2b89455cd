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

#include "skewpoly/leftideal.hpp"
#include "skewpoly/textio.hpp"
#include "support.hpp"

using namespace skewpoly;
using namespace testsupport;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex{std::move(e)}; }

LeftIdeal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<SkewPoly> g;
    for (const auto& s : gens) g.push_back(parse_skew_poly(r, s));
    return LeftIdeal::make(r, std::move(g));
}

SkewPoly pp(const RingPtr& r, const std::string& s) { return parse_skew_poly(r, s); }

// random polynomial with a bound on the total degree
SkewPoly random_capped(const RingPtr& r, Rng& rng, uint32_t maxdeg, uint32_t terms, bool nonzero) {
    std::vector<MultiIndex> monos = monomials_up_to(r, maxdeg);
    SkewPoly f(r);
    for (uint32_t i = 0; i < terms; ++i)
        f.add_term(monos[rng.below(monos.size())], random_scalar(r->domain(), rng));
    if (nonzero && f.is_zero()) f.add_term(monos[rng.below(monos.size())], r->domain()->one());
    return f;
}

} // namespace

TEST_CASE("left_reduce frozen examples") {
    RingPtr f2 = f2_comm_ring();
    std::vector<SkewPoly> G = {pp(f2, "x1")};
    CHECK(left_reduce(pp(f2, "x1 x2 + x2"), G) == pp(f2, "x2"));
    CHECK(left_reduce(SkewPoly(f2), G).is_zero());

    // univariate cross-check against Euclidean division
    OreRingPtr ore = gf4_ore_ring();
    RingPtr view = ring_of_ore(ore);
    OrePoly f = parse_ore_poly(ore, "x^2");
    OrePoly g = parse_ore_poly(ore, "x + w");
    SkewPoly red = left_reduce(from_ore(f, view), {from_ore(g, view)});
    CHECK(red.total_degree() <= 0);
    CHECK(red == from_ore(right_divmod(f, g).second, view));
}

TEST_CASE("left_reduce leaves no divisible terms and is idempotent") {
    Rng rng(3);
    RingPtr r = gf4_skew_ring();
    for (int t = 0; t < 100; ++t) {
        std::vector<SkewPoly> G = {random_skew_poly(r, rng, 2, 3, true),
                                   random_skew_poly(r, rng, 2, 3, true)};
        SkewPoly f = random_skew_poly(r, rng, 3, 4, false);
        SkewPoly red = left_reduce(f, G);
        for (const auto& [u, c] : red.terms()) {
            for (const SkewPoly& g : G) CHECK_FALSE(mi_divides(leading(g).exp, u));
        }
        CHECK(left_reduce(red, G) == red);
        // f - red lies in the ideal: check via a Groebner basis
        GroebnerBasis gb = buchberger(LeftIdeal::make(r, G));
        CHECK(member(skew_sub(f, red), gb));
    }
}

TEST_CASE("buchberger frozen examples") {
    RingPtr f2 = f2_comm_ring();
    SUBCASE("coprime leads stay untouched") {
        GroebnerBasis gb = buchberger(ideal(f2, {"x1 + 1", "x2 + 1"}));
        REQUIRE(gb.basis.size() == 2);
        CHECK(gb.basis[0] == pp(f2, "x1 + 1"));
        CHECK(gb.basis[1] == pp(f2, "x2 + 1"));
        CHECK_FALSE(gb.contains_one());
    }
    SUBCASE("hidden unit is found") {
        GroebnerBasis gb = buchberger(ideal(f2, {"x1 x2 + 1", "x1"}));
        CHECK(gb.contains_one());
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == pp(f2, "1"));
    }
    SUBCASE("Weyl principal ideal") {
        RingPtr wr = weyl_ring();
        GroebnerBasis gb = buchberger(ideal(wr, {"t"}));
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == pp(wr, "t"));
        CHECK_FALSE(member(pp(wr, "1"), gb));
    }
}

TEST_CASE("membership frozen examples") {
    RingPtr wr = weyl_ring();
    LeftIdeal st = ideal(wr, {"t"});
    CHECK_FALSE(member(pp(wr, "1"), st));
    CHECK(member(pp(wr, "t"), st));
    CHECK(member(pp(wr, "x^3 t + t^2"), st));

    RingPtr f2 = f2_comm_ring();
    LeftIdeal I = ideal(f2, {"x1 + 1", "x2 + 1"});
    for (const SkewPoly& g : I.gens) CHECK(member(g, I));
    // x1 x2 + 1 = x1 (x2 + 1) + (x1 + 1); verify the combination by expansion
    SkewPoly combo = skew_add(skew_mul(pp(f2, "x1"), pp(f2, "x2 + 1")), pp(f2, "x1 + 1"));
    CHECK(combo == pp(f2, "x1 x2 + 1"));
    CHECK(member(pp(f2, "x1 x2 + 1"), I));
}

TEST_CASE("member_bruteforce frozen examples") {
    RingPtr f2 = f2_comm_ring();
    LeftIdeal I = ideal(f2, {"x1 + 1", "x2 + 1"});
    SUBCASE("generator at cap 0") {
        MemberWitness w = member_bruteforce(I.gens[0], I, 0);
        CHECK(w.yes);
    }
    SUBCASE("Weyl unit stays out at any cap") {
        RingPtr wr = weyl_ring();
        LeftIdeal st = ideal(wr, {"t"});
        MemberWitness w = member_bruteforce(pp(wr, "1"), st, 4);
        CHECK_FALSE(w.yes);
    }
    SUBCASE("explicit witness at cap 1") {
        MemberWitness w = member_bruteforce(pp(f2, "x1 x2 + 1"), I, 1);
        REQUIRE(w.yes);
        REQUIRE(w.multipliers.size() == 2);
        SkewPoly acc(f2);
        for (size_t j = 0; j < 2; ++j) acc = skew_add(acc, skew_mul(w.multipliers[j], I.gens[j]));
        CHECK(acc == pp(f2, "x1 x2 + 1"));
    }
}

TEST_CASE("member agrees with the brute-force oracle on random ideals") {
    Rng rng(5);
    for (const RingPtr& r : {gf4_skew_ring(), f2_comm_ring(), weyl_ring()}) {
        CAPTURE(r->describe());
        int ideals = r->domain()->is_finite() ? 200 : 60;
        for (int t = 0; t < ideals; ++t) {
            std::vector<SkewPoly> gens = {random_capped(r, rng, 2, 2, true),
                                          random_capped(r, rng, 2, 2, true)};
            LeftIdeal I = LeftIdeal::make(r, gens);
            GroebnerBasis gb = buchberger(I);
            SkewPoly f = random_capped(r, rng, 3, 3, false);
            bool gb_member = member(f, gb);
            MemberWitness w = member_bruteforce(f, I, 6);
            if (w.yes) CHECK(gb_member);
            if (gb_member) CHECK(w.yes);
        }
    }
}

TEST_CASE("groebner invariants on random ideals") {
    Rng rng(6);
    for (const RingPtr& r : {gf4_skew_ring(), weyl_ring()}) {
        CAPTURE(r->describe());
        for (int t = 0; t < 40; ++t) {
            std::vector<SkewPoly> gens = {random_skew_poly(r, rng, 2, 2, true),
                                          random_skew_poly(r, rng, 2, 2, true)};
            LeftIdeal I = LeftIdeal::make(r, gens);
            GroebnerBasis gb = buchberger(I);
            // monic, sorted, inter-reduced
            for (size_t i = 0; i < gb.basis.size(); ++i) {
                CHECK(is_one(leading(gb.basis[i]).coeff));
                if (i + 1 < gb.basis.size())
                    CHECK(r->order().less(leading(gb.basis[i]).exp, leading(gb.basis[i + 1]).exp));
                for (size_t j = 0; j < gb.basis.size(); ++j) {
                    if (i == j) continue;
                    for (const auto& [u, c] : gb.basis[i].terms())
                        CHECK_FALSE(mi_divides(leading(gb.basis[j]).exp, u));
                }
            }
            // original generators reduce to zero
            for (const SkewPoly& g : I.gens) CHECK(member(g, gb));
            // additivity of reduction
            SkewPoly f = random_skew_poly(r, rng, 3, 3, false);
            SkewPoly g = random_skew_poly(r, rng, 3, 3, false);
            SkewPoly mix = skew_sub(skew_sub(left_reduce(skew_add(f, g), gb.basis),
                                             left_reduce(f, gb.basis)),
                                    left_reduce(g, gb.basis));
            CHECK(left_reduce(mix, gb.basis).is_zero());
        }
    }
}

TEST_CASE("elimination frozen examples") {
    SUBCASE("commutative model of F2[y] coefficients") {
        DomainPtr f2 = Domain::prime_field(2);
        RingPtr r = RingDescriptor::make_uniform(f2, {"y", "x1", "x2"}, EndoSpec::identity(f2),
                                                 DerSpec::zero(f2), {}, TermOrderSpec::lex());
        LeftIdeal I = ideal(r, {"x1 + y", "x2 + y + 1", "y^2 + y + 1"});
        std::vector<SkewPoly> cut = eliminate(I, {0});
        REQUIRE_FALSE(cut.empty());
        bool found = false;
        for (const SkewPoly& g : cut) {
            // supported on y only and a member of I
            for (const auto& [u, c] : g.terms()) {
                CHECK(u.e[1] == 0);
                CHECK(u.e[2] == 0);
            }
            CHECK(member(g, I));
            if (g == pp(r, "y^2 + y + 1")) found = true;
        }
        CHECK(found);
    }
    SUBCASE("Weyl t-ideal misses the x-axis") {
        RingPtr wr = weyl_ring();
        CHECK(eliminate(ideal(wr, {"t"}), {0}).empty());
    }
    SUBCASE("whole ring keeps the unit") {
        RingPtr f2 = f2_comm_ring();
        std::vector<SkewPoly> cut = eliminate(ideal(f2, {"1"}), {0});
        REQUIRE(cut.size() == 1);
        CHECK(cut[0] == pp(f2, "1"));
    }
}

TEST_CASE("elimination soundness on random ideals") {
    Rng rng(7);
    RingPtr r = gf4_skew_ring();
    for (int t = 0; t < 30; ++t) {
        std::vector<SkewPoly> gens = {random_skew_poly(r, rng, 2, 2, true),
                                      random_skew_poly(r, rng, 2, 2, true)};
        LeftIdeal I = LeftIdeal::make(r, gens);
        GroebnerBasis gb = buchberger(I);
        std::vector<SkewPoly> cut = eliminate(I, {0});
        for (const SkewPoly& g : cut) {
            for (const auto& [u, c] : g.terms()) CHECK(u.e[1] == 0);
            CHECK(member(g, gb));
        }
    }
}

TEST_CASE("slice_basis frozen examples") {
    SUBCASE("principal commutative ideal") {
        RingPtr f2 = f2_comm_ring();
        std::vector<SkewPoly> b = slice_basis(ideal(f2, {"x1"}), 2);
        REQUIRE(b.size() == 3);
        CHECK(b[0] == pp(f2, "x1"));
        CHECK(b[1] == pp(f2, "x1^2"));
        CHECK(b[2] == pp(f2, "x1 x2"));
    }
    SUBCASE("Weyl t-ideal slice") {
        RingPtr wr = weyl_ring();
        std::vector<SkewPoly> b = slice_basis(ideal(wr, {"t"}), 2);
        REQUIRE(b.size() == 3);
        CHECK(b[0] == pp(wr, "t"));
        CHECK(b[1] == pp(wr, "x t"));
        CHECK(b[2] == pp(wr, "t^2"));
    }
    SUBCASE("cap below generator degrees") {
        RingPtr f2 = f2_comm_ring();
        CHECK(slice_basis(ideal(f2, {"x1^2"}), 1).empty());
    }
}

TEST_CASE("slice_basis consistency on random ideals") {
    Rng rng(8);
    RingPtr r = gf4_skew_ring();
    for (int t = 0; t < 20; ++t) {
        std::vector<SkewPoly> gens = {random_skew_poly(r, rng, 2, 2, true),
                                      random_skew_poly(r, rng, 2, 2, true)};
        LeftIdeal I = LeftIdeal::make(r, gens);
        GroebnerBasis gb = buchberger(I);
        size_t prev = 0;
        for (uint32_t d = 1; d <= 4; ++d) {
            std::vector<SkewPoly> b = slice_basis(I, d);
            for (const SkewPoly& f : b) {
                CHECK(f.total_degree() <= static_cast<int64_t>(d));
                CHECK(member(f, gb));
            }
            CHECK(b.size() >= prev);
            prev = b.size();
        }
    }
}

TEST_CASE("staircase frozen examples") {
    SUBCASE("one-dimensional quotients") {
        RingPtr f2 = f2_comm_ring();
        StaircaseReport rep = staircase(ideal(f2, {"x1 + 1", "x2 + 1"}));
        CHECK(rep.finite);
        CHECK(rep.dimension == 1);
        REQUIRE(rep.std_monomials.size() == 1);
        CHECK(rep.std_monomials[0] == mi({0, 0}));

        RingPtr gf = gf4_skew_ring();
        StaircaseReport rep2 = staircase(ideal(gf, {"x1 + w", "x2 + w"}));
        CHECK(rep2.finite);
        CHECK(rep2.dimension == 1);
    }
    SUBCASE("Weyl t-ideal is infinite along x") {
        RingPtr wr = weyl_ring();
        StaircaseReport rep = staircase(ideal(wr, {"t"}));
        CHECK_FALSE(rep.finite);
        CHECK(rep.witness_axis == 0);
    }
    SUBCASE("whole ring has dimension zero") {
        RingPtr f2 = f2_comm_ring();
        StaircaseReport rep = staircase(ideal(f2, {"1"}));
        CHECK(rep.finite);
        CHECK(rep.dimension == 0);
    }
    SUBCASE("box ideal") {
        RingPtr f2 = f2_comm_ring();
        StaircaseReport rep = staircase(ideal(f2, {"x1^2", "x2^3"}));
        CHECK(rep.finite);
        CHECK(rep.dimension == 6);
    }
}

TEST_CASE("construction validation") {
    RingPtr f2 = f2_comm_ring();
    CHECK_THROWS_AS(LeftIdeal::make(f2, {SkewPoly(f2)}), InvalidConstruction);
    RingPtr wr = weyl_ring();
    CHECK_THROWS_AS(LeftIdeal::make(f2, {pp(wr, "t")}), DomainMismatch);
    // PID coefficients are rejected by the completion layer
    DomainPtr f2y = Domain::poly_over_prime(2);
    RingPtr enc = RingDescriptor::make_uniform(f2y, {"x1"}, EndoSpec::identity(f2y),
                                               DerSpec::zero(f2y), {}, TermOrderSpec::lex());
    SkewPoly g = SkewPoly::variable(enc, 0);
    CHECK_THROWS_AS(buchberger(LeftIdeal::make(enc, {g})), UnsupportedRing);
}
