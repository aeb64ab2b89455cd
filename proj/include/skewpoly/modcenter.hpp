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

#include "skewpoly/leftideal.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

// Centers of skew polynomial rings, the invariant subfield of the coefficient
// domain, central maximal two-sided ideals, and finite-dimensional modules
// carried by semilinear operator matrices. Supported coefficient domains are
// those of finite dimension over their prime subfield: F_p, GF(p^k), Q, and
// the rational quaternions.

/// The subfield {a in D : sigma(a) = a, delta(a) = 0, ab = ba for all b},
/// presented by a vector-space basis over the prime subfield (F_p or Q).
/// The basis is echelonized and starts with 1; closure under products is
/// re-verified on construction.
struct InvariantField {
    DomainPtr dom;             // ambient coefficient domain D
    DomainPtr prime;           // prime subfield
    std::vector<Scalar> basis; // elements of D, linearly independent over prime
    uint32_t ambient_dim = 0;  // dim of D over the prime subfield

    bool whole_domain() const { return basis.size() == ambient_dim; }
    /// Number of elements, for finite D.
    uint64_t size() const;
    /// All elements, for finite D (prime-subfield combinations of the basis).
    std::vector<Scalar> elements() const;
    /// Membership of an element of D.
    bool contains(const Scalar& a) const;
};

/// Exact solution set of the linear conditions sigma(a) = a, delta(a) = 0,
/// and ab = ba for the domain generators b, over the prime subfield.
InvariantField invariant_field(const DomainPtr& dom, const EndoSpec& sigma, const DerSpec& delta);

/// Central elements of a skew ring up to a degree cap.
struct CenterReport {
    RingPtr ring;
    uint32_t cap = 0;
    /// Echelonized basis over the prime subfield of the space of elements of
    /// total degree <= cap commuting with every variable and every
    /// coefficient-domain generator; each element is monic with distinct
    /// leading terms, sorted ascending.
    std::vector<SkewPoly> basis;
    /// A least-total-degree nonconstant central element (monic), when one
    /// exists within the cap.
    std::optional<SkewPoly> h0;
};

/// Solves f*x_k = x_k*f and f*a = a*f (domain generators a) as linear
/// systems over the prime subfield in the coefficients of f, one unknown per
/// (monomial of total degree <= cap) x (coordinate of D). Every reported
/// element is re-verified central by multiplication.
CenterReport center_upto(const RingPtr& ring, uint32_t cap);
CenterReport center_upto(const OreRingPtr& ring, uint32_t cap);

/// A central generator of a maximal two-sided ideal, with its certificate.
struct TwoSidedCert {
    OrePoly gen;                  // G = g(h0)
    uint32_t dim_over_domain = 0; // deg G = dimension of S/SG over D
    uint64_t elements_checked = 0;
    bool central = false; // G commutes with x and the domain generators
    bool maximal = false; // every nonzero coset generates S/SG two-sidedly
};

/// Builds G = g(h0) from a polynomial g (ascending coefficients, each lying
/// in the invariant subfield, deg >= 1, irreducible over that subfield) and
/// a central nonconstant h0, then certifies that the two-sided ideal S*G is
/// maximal by exhaustive two-sided generation from every nonzero element of
/// the quotient. Finite coefficient domains only.
/// Throws InvalidConstruction when g is reducible or malformed, and
/// SearchExhausted when the quotient exceeds element_bound elements.
TwoSidedCert maximal_twosided_gen(const OreRingPtr& ring, const std::vector<Scalar>& g,
                                  const OrePoly& h0, const InvariantField& inv,
                                  uint64_t element_bound = uint64_t(1) << 16);

/// Finite-dimensional left module over an n-variable skew ring, carried by
/// one action matrix per variable. A vector is a left-coefficient column
/// over D; the variable action is
///   x_k . v  =  sum_i sigma_k(v_i) * column_i(T_k)  +  delta_k(v),
/// the matrix-level translation of x_k * (a * m) = sigma_k(a) x_k m +
/// delta_k(a) m on a basis m_1, ..., m_d.
struct SemilinearModule {
    RingPtr ring;
    uint32_t dim = 0;
    std::vector<MultiIndex> basis_labels; // standard monomials when known
    std::vector<Mat> action;              // per variable; column i = x_k . e_i

    /// Validating constructor: checks shapes and module laws, throws
    /// InvalidConstruction on violation.
    static SemilinearModule make(RingPtr ring, std::vector<Mat> action,
                                 std::vector<MultiIndex> labels = {});
};

/// The action of x_k on coordinates.
std::vector<Scalar> module_apply(const SemilinearModule& M, uint32_t k,
                                 const std::vector<Scalar>& v);

struct ModuleLawReport {
    bool ok = true;
    std::string failure;
};

/// Verifies the semilinear law x_k.(a v) = sigma_k(a) (x_k.v) + delta_k(a) v
/// on basis vectors and domain generators, and the exchange law
/// x_l.(x_k.v) = x_k.(x_l.v) + d_{kl} v matching the ring's variable
/// commutators, on all basis vectors.
ModuleLawReport module_check_laws(const SemilinearModule& M);

/// S/I for an ideal with a finite staircase: basis = standard monomials,
/// action matrices = normal forms of x_k * (standard monomial). The matrix
/// action is cross-checked against reduction on domain generators.
/// Throws InfiniteDimension when the staircase is infinite.
SemilinearModule quotient_module(const LeftIdeal& I);
SemilinearModule quotient_module(const GroebnerBasis& gb);

struct SimplicityReport {
    enum class Verdict { Simple, NotSimple, Unknown };
    Verdict verdict = Verdict::Unknown;
    uint64_t vectors_checked = 0;
    /// Basis of a proper nonzero invariant subspace when NotSimple (dim >= 1).
    std::vector<std::vector<Scalar>> witness;

    bool simple() const { return verdict == Verdict::Simple; }
};

/// Exhaustive simplicity test over a finite coefficient domain: the module is
/// simple iff every nonzero vector generates it under the variable actions
/// and scalar multiplications. Vectors are enumerated up to left scalar
/// multiples. Infinite domains yield Unknown; enumeration past element_bound
/// representatives throws SearchExhausted.
SimplicityReport is_simple(const SemilinearModule& M, uint64_t element_bound = uint64_t(1) << 16);

/// A Galois field GF(p^k) over the first monic irreducible modulus of degree
/// k in the ascending enumeration order (prime field when k = 1).
DomainPtr galois_field_default(uint64_t p, uint32_t k, const std::string& gen = "w");

/// One candidate ideal examined by the finite-field pipeline.
struct PipelineCase {
    std::vector<SkewPoly> gens;
    bool proper = false;
    bool finite = false;
    uint64_t dim = 0; // over the coefficient field, when finite
    SimplicityReport::Verdict verdict = SimplicityReport::Verdict::Unknown;
    /// For simple (= maximal) cases: per variable j, the least total degree
    /// of a nonzero element of I intersected with F[x_j]; -1 when empty.
    std::vector<int64_t> univariate_member_degree;
};

struct PipelineReport {
    RingPtr ring;
    uint64_t p = 0;
    uint32_t k = 0, n = 0, bound = 0;
    /// x^k is a least-degree nonconstant central element of the univariate
    /// ring, and x_j^k is central in the n-variable ring for every j.
    bool power_central = false;
    std::string h0_text;
    std::vector<PipelineCase> cases;
    uint64_t simple_count = 0;          // cases certified simple
    uint64_t distinct_maximal = 0;      // distinct ideals among those
    uint64_t max_simple_dim = 0;        // largest simple-module dimension
    bool all_simple_finite = true;      // every simple case finite-dimensional
    bool all_intersections_nonzero = true; // per-variable eliminations nonzero
};

/// Desk-scale verification over F = GF(p^k) with the Frobenius twist and no
/// derivation: (1) certifies x^k central and minimal via center_upto;
/// (2) enumerates candidate maximal left ideals of F[x_1,...,x_n; sigma] from
/// per-variable irreducible seeds and linear-substitution seeds up to the
/// degree bound; (3) builds each quotient module and decides simplicity
/// exhaustively; (4) for each simple quotient, checks that the ideal meets
/// F[x_j] nontrivially for every variable j via elimination.
PipelineReport frobenius_pipeline(uint64_t p, uint32_t k, uint32_t n, uint32_t bound,
                                  uint64_t element_bound = uint64_t(1) << 16);

} // namespace skewpoly
