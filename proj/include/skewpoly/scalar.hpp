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
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewpoly/errors.hpp"

namespace skewpoly {

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

enum class DomainKind {
    PrimeField,    // F_p
    GaloisField,   // F_p[w]/(m(w))
    Rationals,     // Q
    Quaternions,   // rational quaternions, i^2 = j^2 = -1, ij = k = -ji
    PolyPrime,     // F_p[y]
    PolyRational,  // Q[y]
};

/// One exact coefficient. Payload layout depends on the domain kind:
///   PrimeField    u = {v},              v in [0,p)
///   GaloisField   u = k residues mod p, ascending powers of the generator
///   Rationals     r = {q},              canonical
///   Quaternions   r = {a,b,c,d}         for a + b i + c j + d k, canonical
///   PolyPrime     u = residues mod p,   ascending powers, no trailing zeros
///   PolyRational  r = rationals,        ascending powers, no trailing zeros
class Scalar {
public:
    Scalar() = default;

    const DomainPtr& domain() const { return dom; }

    DomainPtr dom;
    std::vector<uint64_t> u;
    std::vector<mpq_class> r;
};

/// Immutable descriptor of a coefficient domain. Constructed through the
/// static factories; finite fields of size at most 256 carry dense
/// operation tables used by the flat linear-algebra kernels.
class Domain : public std::enable_shared_from_this<Domain> {
public:
    static DomainPtr prime_field(uint64_t p);
    /// modulus: ascending coefficients of a monic irreducible of degree k over F_p
    /// (length k+1, leading entry 1). Irreducibility is verified.
    static DomainPtr galois_field(uint64_t p, uint32_t k, std::vector<uint64_t> modulus,
                                  std::string gen = "w");
    static DomainPtr rationals();
    static DomainPtr quaternions();
    static DomainPtr poly_over_prime(uint64_t p, std::string var = "y");
    static DomainPtr poly_over_rationals(std::string var = "y");

    DomainKind kind() const { return kind_; }
    uint64_t char_p() const { return p_; }
    uint32_t ext_degree() const { return ext_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }
    const std::string& gen_name() const { return gen_; }

    bool is_field() const;
    bool is_division_ring() const;
    bool is_commutative() const { return kind_ != DomainKind::Quaternions; }
    bool is_finite() const;
    bool is_poly() const;
    /// Number of elements; finite kinds only.
    uint64_t size() const;
    /// Coefficient domain of a polynomial or quaternion domain
    /// (F_p for PolyPrime and GaloisField, Q for PolyRational and Quaternions),
    /// the domain itself otherwise.
    DomainPtr base() const;

    bool equals(const Domain& o) const;
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    /// Embed a rational: exact in characteristic zero, reduced mod p otherwise
    /// (throws DivisionByZero when the denominator vanishes mod p).
    Scalar from_mpq(const mpq_class& q) const;
    /// The distinguished generator: w for a Galois field, y for a polynomial
    /// domain. Throws InvalidConstruction for other kinds.
    Scalar gen() const;
    Scalar quat(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                const mpq_class& d) const;
    /// Polynomial with the given ascending integer coefficients.
    Scalar poly_from_ints(const std::vector<long long>& coeffs) const;
    /// A finite generating set of the domain over its prime ring: {1} plus
    /// the generator(s). Used by homomorphism probes.
    std::vector<Scalar> generators() const;

    /// Enumeration of a finite field: index_of(element_at(i)) == i, with
    /// element_at(0) == 0 and element_at(1) == 1.
    Scalar element_at(uint64_t idx) const;
    uint64_t index_of(const Scalar& a) const;

    bool has_tables() const { return has_tables_; }
    const std::vector<uint16_t>& add_table() const { return tab_add_; }
    const std::vector<uint16_t>& mul_table() const { return tab_mul_; }
    const std::vector<uint16_t>& inv_table() const { return tab_inv_; }
    const std::vector<uint16_t>& frob_table() const { return tab_frob_; }

private:
    Domain() = default;
    void build_tables();

    DomainKind kind_ = DomainKind::Rationals;
    uint64_t p_ = 0;
    uint32_t ext_ = 1;
    std::vector<uint64_t> modulus_;
    std::string gen_;
    DomainPtr base_;
    bool has_tables_ = false;
    std::vector<uint16_t> tab_add_, tab_mul_, tab_inv_, tab_frob_;
};

bool same_domain(const Scalar& a, const Scalar& b);
void require_same_domain(const Scalar& a, const Scalar& b, const char* op);

bool is_zero(const Scalar& a);
bool is_one(const Scalar& a);
/// Units: every nonzero element in a division ring, nonzero constants in a
/// polynomial domain.
bool is_unit(const Scalar& a);

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar mul(const Scalar& a, const Scalar& b);
/// Multiplicative inverse. Throws DivisionByZero on zero and NonUnit on a
/// nonzero non-unit.
Scalar inv(const Scalar& a);
Scalar pow_u(const Scalar& a, uint64_t e);

bool equal(const Scalar& a, const Scalar& b);
/// Structural order (not compatible with arithmetic); used for canonical
/// sorting of result sets.
bool structural_less(const Scalar& a, const Scalar& b);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline bool operator==(const Scalar& a, const Scalar& b) { return equal(a, b); }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !equal(a, b); }

/// Degree of a polynomial-domain element (-1 for zero). Throws for
/// non-polynomial domains.
int poly_degree(const Scalar& a);
/// Coefficient of y^i as an element of base(); zero beyond the degree.
Scalar poly_coeff(const Scalar& a, uint32_t i);
/// Assemble a polynomial-domain element from base-domain coefficients.
Scalar poly_build(const DomainPtr& dom, const std::vector<Scalar>& coeffs);
/// Leading coefficient as a base element; throws on zero.
Scalar poly_lead(const Scalar& a);

} // namespace skewpoly
