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
#include <string>
#include <vector>

#include "skewpoly/endo.hpp"
#include "skewpoly/leftideal.hpp"
#include "skewpoly/monomial.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/scalar.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

// Amitsur-Small machinery over a commutative principal ideal domain R
// (the univariate polynomial domains): twist-translated families of
// principal left ideals, the transporter-inclusion condition certifying a
// candidate r (nonzero, not a unit, normalizing, transporter inclusions at
// every index), a witness search over the maximal ideals of F_p[y], and the
// constructive descent turning a certified witness into a nonzero element
// of I intersect R for a left ideal I of the encoded skew polynomial ring.

/// Monic generator of the transporter {s in R : s*r in (a)} of principal
/// ideals in a commutative PID: a / gcd(a, r), with (0 : r) = (0) for
/// nonzero r and (a : 0) the whole ring.
Scalar transporter(const Scalar& a, const Scalar& r);

struct FamilyBase {
    MultiIndex index;
    Scalar gen;
};

/// N^n-indexed family of principal ideals of R, finitely presented by base
/// indices: the ideal at index i is generated by the gcd of
/// sigma^(i - b.index)(b.gen) over every base b whose index divides i
/// componentwise, and is zero when no base applies. With this generation
/// rule the translation law sigma^j(I_i) subset I_{i+j} holds by
/// construction. Derivations ride along for the normalizing checks only.
struct IdealFamily {
    DomainPtr dom;
    uint32_t arity = 0;
    std::vector<FamilyBase> bases;
    std::vector<EndoSpec> sigma;
    std::vector<DerSpec> delta;

    /// Validates domains and arities; an empty delta list means all zero.
    static IdealFamily make(DomainPtr dom, uint32_t arity, std::vector<FamilyBase> bases,
                            std::vector<EndoSpec> sigma, std::vector<DerSpec> delta = {});

    /// sigma^j with the highest-index twist applied innermost.
    Scalar twist(const MultiIndex& j, const Scalar& a) const;
    /// Monic generator of the ideal at index i (zero ideal: zero).
    Scalar generator_at(const MultiIndex& i) const;
    /// Largest total degree among the base indices (0 when empty).
    uint32_t max_base_norm() const;
};

/// Outcome of checking one candidate r against a family. The laws are
/// checked in order and the first failure is recorded; pass means all hold.
struct ASCheck {
    bool pass = false;
    bool nonzero_ok = false;
    bool nonunit_ok = false;
    bool normalizing_ok = false;
    bool transporters_ok = false;
    std::string failure;
    std::optional<MultiIndex> failed_index;
    uint64_t indices_checked = 0;
    long grid_bound = 0;
};

/// Verifies the extension-condition laws for r: nonzero, not a unit,
/// normalizing for the family's per-variable twists and derivations
/// (sigma_k(r) an associate of r and delta_k(r) in (r)), and the transporter
/// inclusion (I_i : sigma^i(r)) subset (r I_i : sigma^i(r)) for every index
/// with |i| <= grid. grid < 0 selects max base norm + 2, past which the
/// translation rule only repeats shifted copies of the base data.
ASCheck as_check(const IdealFamily& fam, const Scalar& r, long grid = -1);

/// Monic irreducibles r of degree <= deg r0 violating the principal-family
/// inclusion (R r0 : r) subset (r R r0 : r). Over a commutative PID these
/// are exactly the monic irreducible factors of r0; both sets are computed
/// and compared, and a disagreement throws. Requires F_p[y] (the candidate
/// enumeration needs a finite coefficient field) and nonzero r0.
std::vector<Scalar> transporter_offenders(const Scalar& r0);

/// A candidate surviving the witness search, with its certification and
/// bookkeeping about how much of the maximal-ideal stream was skipped.
struct ASWitness {
    Scalar r0;
    ASCheck cert;
    uint64_t stream_position = 0;
    uint64_t skipped_offenders = 0;
    uint64_t skipped_invariance = 0;
    uint64_t skipped_certification = 0;
};

/// Streams the monic irreducible generators of the maximal ideals of
/// F_p[y], skipping offenders of any base generator and candidates not
/// invariant under the ring's twists and derivations, and returns the first
/// survivor with full certification against the family. Throws
/// SearchExhausted once the stream passes max_degree, which signals that
/// the ring has no (or too few) invariant maximal ideals in range.
ASWitness as_witness(const IdealFamily& fam, const RingPtr& ring, uint32_t max_degree = 8);
ASWitness as_witness(const IdealFamily& fam, const OreRingPtr& ring, uint32_t max_degree = 8);

/// Skew polynomials over R = F_p[y] or Q[y] realized inside the flat ring
/// over the base field with y adjoined as variable 0 under plain lex, so
/// the skew block dominates comparisons and y-degrees break ties. A nonzero
/// base-field commutator d_k = [x_k, y] encodes the coefficient derivation
/// d_k * d/dy; the skew variables commute with each other and act on R with
/// identity twists. This is the shape whose Groebner machinery is available
/// (base-field coefficients), while the R-linear view is recovered through
/// the projections below.
struct PidEncoding {
    DomainPtr pid;
    RingPtr big;
    uint32_t nvars = 0;

    static PidEncoding make(const DomainPtr& pid, const std::vector<std::string>& xvars,
                            const std::vector<Scalar>& comm = {});

    /// R into the flat ring (powers of variable 0).
    SkewPoly lift(const Scalar& r) const;
    /// Inverse of lift; throws when f has support outside R.
    Scalar project(const SkewPoly& f) const;
    /// Drops the y coordinate.
    MultiIndex x_part(const MultiIndex& e) const;
    /// Embeds a skew exponent with y-degree zero.
    MultiIndex x_embed(const MultiIndex& u) const;
    /// x^u as a flat-ring monomial.
    SkewPoly x_monomial(const MultiIndex& u) const;
    /// Leading skew exponent of f viewed over R; throws on zero.
    MultiIndex le_x(const SkewPoly& f) const;
    /// R-coefficient of x^u in f (zero when absent).
    Scalar coeff_at_x(const SkewPoly& f, const MultiIndex& u) const;
    /// R-leading coefficient: coeff_at_x at le_x.
    Scalar lc_R(const SkewPoly& f) const;
};

/// Witness search against the encoding's coefficient action (identity
/// twists, commutator-induced derivations).
ASWitness as_witness(const IdealFamily& fam, const PidEncoding& enc, uint32_t max_degree = 8);

/// The family of R-leading-coefficient ideals of a left ideal, read off a
/// Groebner basis of its encoding: one base per basis element, at its skew
/// leading exponent, generated by its R-leading coefficient. A nonzero
/// commutator contributes a formal-derivative entry; the constant factor is
/// irrelevant to the divisibility checks the family performs.
IdealFamily leading_family(const GroebnerBasis& gb, const PidEncoding& enc);

struct DescentStep {
    MultiIndex le_q; // skew lead of Q entering the step
    Scalar a;        // R-leading coefficient of Q
    Scalar b;        // solution of a * sigma^m(r0) = r0 * b
    SkewPoly p1;     // correction with R-leading term a x^m; Q drops to Q - p1
};

struct ExtractOptions {
    uint32_t degree_ceiling = 8; // largest |le_x(Q)| searched
    int ydeg_cap = -1;           // -1: max y-degree over basis and r0 plus 4, doubled once
    std::optional<MultiIndex> support_floor; // restrict Q's skew support to indices >= floor
};

struct ExtractResult {
    Scalar element;  // nonzero member of I intersect R
    bool immediate = false; // r0 itself was a member
    SkewPoly q;      // solved Q with Q r0 - 1 in I (zero when immediate)
    Scalar a_final;  // the coefficient Q descends to (element = a_final r0 - 1)
    std::vector<DescentStep> trace;
};

/// Constructive intersection: throws NotProper when I is the whole ring;
/// returns r0 when r0 in I; otherwise finds the Q of smallest skew lead
/// with Q r0 - 1 in I by term-order-increasing linear solves against the
/// Groebner normal form, then repeatedly cancels the lead of Q through the
/// leading family until Q is a coefficient a, and returns a r0 - 1. Every
/// step re-verifies its divisions and the strict drop of le(Q); the result
/// is re-verified for membership. Throws SearchExhausted when no Q exists
/// within the configured bounds (the ideal may not be maximal, or the
/// witness may not certify against the ideal's leading family).
ExtractResult extract_intersection(const LeftIdeal& I, const ASWitness& w, const PidEncoding& enc,
                                   const ExtractOptions& opts = {});

} // namespace skewpoly
