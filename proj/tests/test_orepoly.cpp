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

#include <set>

#include "skewpoly/orepoly.hpp"
#include "skewpoly/textio.hpp"
#include "support.hpp"

using namespace skewpoly;
using namespace testsupport;

namespace {

OrePoly parse(const OreRingPtr& r, const std::string& s) { return parse_ore_poly(r, s); }

} // namespace

TEST_CASE("commutation rule x*w = (w+1)*x") {
    OreRingPtr r = gf4_ore_ring();
    DomainPtr d = r->domain();
    OrePoly x = OrePoly::monomial(r, d->one(), 1);
    OrePoly w = OrePoly::monomial(r, d->gen(), 0);
    OrePoly prod = ore_mul(x, w);
    CHECK(prod == OrePoly::monomial(r, add(d->gen(), d->one()), 1));
}

TEST_CASE("frozen product (x+w^2)(x+w) = x^2+1") {
    OreRingPtr r = gf4_ore_ring();
    OrePoly f = parse(r, "x + w^2");
    OrePoly g = parse(r, "x + w");
    OrePoly prod = ore_mul(f, g);
    CHECK(prod == parse(r, "x^2 + 1"));
    // independent single-step rewriting oracle, both scan directions
    CHECK(prod == oracle::ore_mul_by_steps(f, g, true));
    CHECK(prod == oracle::ore_mul_by_steps(f, g, false));
}

TEST_CASE("multiplicative identity") {
    Rng rng(3);
    OreRingPtr r = gf4_ore_ring();
    OrePoly one = OrePoly::monomial(r, r->domain()->one(), 0);
    for (int t = 0; t < 50; ++t) {
        OrePoly f = random_ore_poly(r, rng, 4, false);
        CHECK(ore_mul(f, one) == f);
        CHECK(ore_mul(one, f) == f);
    }
}

TEST_CASE("right_divmod frozen example") {
    OreRingPtr r = gf4_ore_ring();
    OrePoly f = parse(r, "x^2 + 1");
    OrePoly g = parse(r, "x + w");
    auto [q, rem] = right_divmod(f, g);
    CHECK(q == parse(r, "x + w^2"));
    CHECK(rem.is_zero());

    OrePoly small = parse(r, "w");
    auto [q2, r2] = right_divmod(small, g);
    CHECK(q2.is_zero());
    CHECK(r2 == small);

    CHECK_THROWS_AS(right_divmod(f, OrePoly(r)), DivisionByZero);
}

TEST_CASE("left_divmod frozen example") {
    OreRingPtr r = gf4_ore_ring();
    OrePoly f = parse(r, "x^2 + 1");
    OrePoly g = parse(r, "x + w");
    auto [q, rem] = left_divmod(f, g);
    CHECK(rem.degree() <= 0);
    CHECK(ore_add(ore_mul(g, q), rem) == f);
}

TEST_CASE("left and right division agree over a commutative ring") {
    Rng rng(4);
    OreRingPtr r = f2_comm_ore_ring();
    for (int t = 0; t < 200; ++t) {
        OrePoly f = random_ore_poly(r, rng, 5, true);
        OrePoly g = random_ore_poly(r, rng, 3, true);
        auto [qr, rr] = right_divmod(f, g);
        auto [ql, rl] = left_divmod(f, g);
        CHECK(qr == ql);
        CHECK(rr == rl);
    }
}

TEST_CASE("division round-trip on random pairs") {
    Rng rng(5);
    OreRingPtr r = gf4_ore_ring();
    for (int t = 0; t < 300; ++t) {
        OrePoly f = random_ore_poly(r, rng, 6, true);
        OrePoly g = random_ore_poly(r, rng, 3, true);
        auto [q, rem] = right_divmod(f, g);
        CHECK(rem.degree() < g.degree());
        CHECK(ore_add(ore_mul(q, g), rem) == f);
        auto [ql, rl] = left_divmod(f, g);
        CHECK(rl.degree() < g.degree());
        CHECK(ore_add(ore_mul(g, ql), rl) == f);
    }
}

TEST_CASE("irreducibility frozen examples") {
    OreRingPtr r = gf4_ore_ring();
    CHECK_FALSE(ore_irreducible(parse(r, "x^2 + 1"))); // right factor x+w
    CHECK(ore_irreducible(parse(r, "x + w")));
    OreRingPtr f2 = f2_comm_ore_ring();
    CHECK(ore_irreducible(parse(f2, "x^2 + x + 1")));
}

TEST_CASE("irreducibility agrees with exhaustive product enumeration, deg <= 3 over GF(4)") {
    // A monic f of degree d is reducible iff it is a product of monic factors
    // of degrees (1,d-1) or (d-1,1); enumerate every such product and compare.
    OreRingPtr r = gf4_ore_ring();
    auto key = [](const OrePoly& f) { return ore_poly_to_string(f); };
    for (uint32_t d : {2u, 3u}) {
        std::set<std::string> products;
        for (uint32_t dq = 1; dq < d; ++dq) {
            for (const OrePoly& q : all_monic(r, dq))
                for (const OrePoly& g : all_monic(r, d - dq)) products.insert(key(ore_mul(q, g)));
        }
        for (const OrePoly& f : all_monic(r, d)) {
            bool reducible = products.count(key(f)) > 0;
            CHECK(ore_irreducible(f) == !reducible);
        }
    }
}

TEST_CASE("all_monic enumerates q^d elements") {
    OreRingPtr r = gf4_ore_ring();
    CHECK(all_monic(r, 0).size() == 1);
    CHECK(all_monic(r, 1).size() == 4);
    CHECK(all_monic(r, 2).size() == 16);
    CHECK(all_monic(r, 3).size() == 64);
}

TEST_CASE("minimal invariant polynomial") {
    OreRingPtr r = gf4_ore_ring();
    auto q = minimal_invariant_poly(r, 3);
    REQUIRE(q.has_value());
    CHECK(*q == parse(r, "x"));

    OreRingPtr f2 = f2_comm_ore_ring();
    auto q2 = minimal_invariant_poly(f2, 3);
    REQUIRE(q2.has_value());
    CHECK(*q2 == parse(f2, "x"));

    DomainPtr qy = Domain::poly_over_rationals();
    OreRingPtr weyl = OreRing::make(qy, EndoSpec::identity(qy), DerSpec::formal_deriv(qy), "x");
    CHECK_THROWS_AS(minimal_invariant_poly(weyl, 3), UnsupportedRing);
}

TEST_CASE("degree additivity over a division ring") {
    Rng rng(6);
    OreRingPtr r = gf4_ore_ring();
    for (int t = 0; t < 10000; ++t) {
        OrePoly f = random_ore_poly(r, rng, 4, true);
        OrePoly g = random_ore_poly(r, rng, 4, true);
        OrePoly p = ore_mul(f, g);
        CHECK(p.degree() == f.degree() + g.degree());
    }
}

TEST_CASE("associativity on random triples") {
    Rng rng(7);
    for (const OreRingPtr& r : {gf4_ore_ring(), f2_comm_ore_ring()}) {
        for (int t = 0; t < 500; ++t) {
            OrePoly f = random_ore_poly(r, rng, 3, false);
            OrePoly g = random_ore_poly(r, rng, 3, false);
            OrePoly h = random_ore_poly(r, rng, 3, false);
            CHECK(ore_mul(ore_mul(f, g), h) == ore_mul(f, ore_mul(g, h)));
            CHECK(ore_mul(f, ore_add(g, h)) == ore_add(ore_mul(f, g), ore_mul(f, h)));
        }
    }
    // a ring with a derivation: Q[y][x; id, d/dy]
    DomainPtr qy = Domain::poly_over_rationals();
    OreRingPtr weyl = OreRing::make(qy, EndoSpec::identity(qy), DerSpec::formal_deriv(qy), "x");
    for (int t = 0; t < 100; ++t) {
        OrePoly f = random_ore_poly(weyl, rng, 2, false);
        OrePoly g = random_ore_poly(weyl, rng, 2, false);
        OrePoly h = random_ore_poly(weyl, rng, 2, false);
        CHECK(ore_mul(ore_mul(f, g), h) == ore_mul(f, ore_mul(g, h)));
    }
}

TEST_CASE("products agree with the single-step oracle") {
    Rng rng(8);
    DomainPtr qy = Domain::poly_over_rationals();
    OreRingPtr weyl = OreRing::make(qy, EndoSpec::identity(qy), DerSpec::formal_deriv(qy), "x");
    for (const OreRingPtr& r : {gf4_ore_ring(), weyl}) {
        for (int t = 0; t < 150; ++t) {
            OrePoly f = random_ore_poly(r, rng, 3, false);
            OrePoly g = random_ore_poly(r, rng, 3, false);
            OrePoly p = ore_mul(f, g);
            CHECK(p == oracle::ore_mul_by_steps(f, g, true));
            CHECK(p == oracle::ore_mul_by_steps(f, g, false));
        }
    }
}

TEST_CASE("text round-trip") {
    Rng rng(9);
    OreRingPtr r = gf4_ore_ring();
    CHECK(ore_poly_to_string(parse(r, "x^2 + (w)*x + 1")) == "x^2+w*x+1");
    CHECK(parse(r, "x^2 + (w+1)*x") == parse(r, "x^2 + w x + x"));
    for (int t = 0; t < 200; ++t) {
        OrePoly f = random_ore_poly(r, rng, 5, false);
        CHECK(parse(r, ore_poly_to_string(f)) == f);
    }
    DomainPtr qy = Domain::poly_over_rationals();
    OreRingPtr weyl = OreRing::make(qy, EndoSpec::identity(qy), DerSpec::formal_deriv(qy), "x");
    for (int t = 0; t < 200; ++t) {
        OrePoly f = random_ore_poly(weyl, rng, 4, false);
        CHECK(parse(weyl, ore_poly_to_string(f)) == f);
    }
}
