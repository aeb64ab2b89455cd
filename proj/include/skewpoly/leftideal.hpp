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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewpoly/skewring.hpp"

namespace skewpoly {

/// Finitely generated left ideal. Generators are nonzero and share one ring.
struct LeftIdeal {
    RingPtr ring;
    std::vector<SkewPoly> gens;

    static LeftIdeal make(RingPtr ring, std::vector<SkewPoly> gens);
};

struct GbStats {
    uint64_t pairs_considered = 0;
    uint64_t reductions_to_zero = 0;
    uint64_t basis_additions = 0;
};

/// Completed left Groebner basis: monic leading coefficients, inter-reduced,
/// sorted by leading exponent ascending under the ring order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<SkewPoly> basis;
    GbStats stats;

    bool contains_one() const;
};

/// Normal form of f modulo left multiples of G: no term of the result has an
/// exponent divisible by a leading exponent of G. Requires division-ring
/// coefficients and automorphism twists; each cancellation uses the cofactor
/// lc(h) * sigma^u(lc(g))^{-1} on x^u * g.
SkewPoly left_reduce(const SkewPoly& f, const std::vector<SkewPoly>& G);

/// Buchberger completion for left ideals under the supported relations
/// (commuting twists, scalar variable commutators). S-polynomials carry
/// sigma-twisted cofactors; no commutative pair-skipping criteria are used.
GroebnerBasis buchberger(const LeftIdeal& I);

bool member(const SkewPoly& f, const GroebnerBasis& gb);
bool member(const SkewPoly& f, const LeftIdeal& I);

/// Explicit membership certificate: f == sum_j multiplier[j] * gens[j].
struct MemberWitness {
    bool yes = false;
    uint32_t cap = 0; // multiplier degree bound that was searched
    std::vector<SkewPoly> multipliers;
};

/// Degree-capped linear search for a left combination expressing f, solved
/// exactly over the coefficient domain; a Yes answer is re-verified by
/// expansion. cap < 0 selects 2 * (max input degree) + 2.
MemberWitness member_bruteforce(const SkewPoly& f, const LeftIdeal& I, int cap = -1);

/// Generators of I intersected with the subring generated by the kept
/// variables, via a lex block order ranking eliminated variables above all
/// kept ones. Scalar commutators keep every variable subring closed under
/// the ring relations.
std::vector<SkewPoly> eliminate(const LeftIdeal& I, const std::vector<uint32_t>& keep);

/// Vector-space basis of {f in I : total degree <= d}, reduced and sorted;
/// computed from a deglex basis, under which left multiples never exceed the
/// degree budget of their product.
std::vector<SkewPoly> slice_basis(const LeftIdeal& I, uint32_t d);

struct StaircaseReport {
    std::vector<MultiIndex> leads; // GB leading exponents
    bool finite = false;
    int witness_axis = -1; // axis with no pure-power lead when infinite
    uint64_t dimension = 0;
    std::vector<MultiIndex> std_monomials; // quotient basis when finite
};

/// Finiteness of S/I as a left vector space via the pure-power criterion on
/// the leading-exponent staircase.
StaircaseReport staircase(const LeftIdeal& I);
StaircaseReport staircase_of(const GroebnerBasis& gb);

/// All exponents of total degree <= d in ascending ring order.
std::vector<MultiIndex> monomials_up_to(const RingPtr& ring, uint32_t d);

} // namespace skewpoly
