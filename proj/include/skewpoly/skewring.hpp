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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewpoly/endo.hpp"
#include "skewpoly/monomial.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/scalar.hpp"

namespace skewpoly {

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// Skew polynomial ring in n variables over a coefficient domain D:
/// basis monomials x^u = x_1^{u_1} ... x_n^{u_n} with left coefficients,
/// relations x_k * a = sigma_k(a) x_k + delta_k(a) for a in D and
/// x_j * x_i = x_i * x_j + d_{ij} for i < j (scalar commutators).
class RingDescriptor : public std::enable_shared_from_this<RingDescriptor> {
public:
    static RingPtr make(DomainPtr dom, std::vector<std::string> vars, std::vector<EndoSpec> sigma,
                        std::vector<DerSpec> delta,
                        std::map<std::pair<uint32_t, uint32_t>, Scalar> commutators,
                        TermOrderSpec order);
    /// All variables share one twist and one derivation.
    static RingPtr make_uniform(DomainPtr dom, std::vector<std::string> vars, const EndoSpec& sigma,
                                const DerSpec& delta,
                                std::map<std::pair<uint32_t, uint32_t>, Scalar> commutators,
                                TermOrderSpec order);

    uint32_t arity() const { return static_cast<uint32_t>(vars_.size()); }
    const DomainPtr& domain() const { return dom_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const EndoSpec& sigma(uint32_t k) const { return sigma_[k]; }
    const DerSpec& delta(uint32_t k) const { return delta_[k]; }
    /// d_{ij} for i < j; zero when unset.
    Scalar commutator(uint32_t i, uint32_t j) const;
    bool commutators_all_zero() const { return comm_.empty(); }
    const TermOrderSpec& order() const { return order_; }
    int var_index(const std::string& name) const; // -1 when absent

    /// Same ring presented under a different term order.
    RingPtr with_order(TermOrderSpec order) const;

    bool equals(const RingDescriptor& o) const;
    std::string describe() const;

    struct Validation {
        bool ok = true;
        std::string failure;
        std::vector<std::string> notes;
    };
    /// Descriptor-level law checks: twist/derivation compatibility per
    /// variable, pairwise commutation of the twist maps, cross commutation
    /// of twists with derivations, automorphism availability, and sampled
    /// associativity / leading-exponent additivity of the product.
    Validation validate(Rng& rng, int samples = 50) const;

private:
    RingDescriptor() = default;
    DomainPtr dom_;
    std::vector<std::string> vars_;
    std::vector<EndoSpec> sigma_;
    std::vector<DerSpec> delta_;
    std::map<std::pair<uint32_t, uint32_t>, Scalar> comm_;
    TermOrderSpec order_;
};

/// Comparator making maps iterate terms in ascending ring order.
struct TermLess {
    TermOrderSpec order;
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return order.less(a, b); }
};

struct LeadingData {
    bool zero = true; // sentinel: the zero polynomial has no leading data
    MultiIndex exp;   // le
    Scalar coeff;     // lc
};

/// Element in left-coefficient normal form: finite map from exponents to
/// nonzero coefficients, iterated in ascending term order.
class SkewPoly {
public:
    using TermMap = std::map<MultiIndex, Scalar, TermLess>;

    SkewPoly() = default;
    explicit SkewPoly(RingPtr ring);
    static SkewPoly constant(RingPtr ring, const Scalar& c);
    static SkewPoly monomial(RingPtr ring, const MultiIndex& u, const Scalar& c);
    static SkewPoly variable(RingPtr ring, uint32_t k);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Scalar coeff(const MultiIndex& u) const; // zero when absent
    int64_t total_degree() const;            // -1 for zero

    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    void add_term(const MultiIndex& u, const Scalar& c); // merges, drops zeros

private:
    RingPtr ring_;
    TermMap terms_;
};

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_neg(const SkewPoly& f);
SkewPoly skew_scalar_mul(const Scalar& c, const SkewPoly& f); // left scale
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_pow(const SkewPoly& f, uint32_t e);
inline SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, g); }
inline SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return skew_sub(f, g); }
inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return skew_mul(f, g); }

LeadingData leading(const SkewPoly& f);
LeadingData leading(const SkewPoly& f, const TermOrderSpec& order);
/// le(fg) == le(f) + le(g) under the ring order; inputs nonzero.
bool le_additivity(const SkewPoly& f, const SkewPoly& g);

/// Recovers sigma_k from products x_k * r for domain generators r, as the
/// closed endomorphism whose generator images match the extracted leading
/// coefficients.
EndoSpec structural_endo(const RingPtr& ring, uint32_t k);

/// The composite twist sigma_1^{i_1} ... sigma_n^{i_n} as one closed
/// endomorphism; requires the configured twists to commute pairwise.
EndoSpec sigma_power(const RingPtr& ring, const MultiIndex& i);
/// Applies the composite twist directly (x_n twist innermost), without the
/// commutation requirement.
Scalar sigma_apply_ordered(const RingPtr& ring, const MultiIndex& i, const Scalar& a);

std::string skew_poly_to_string(const SkewPoly& f);
SkewPoly parse_skew_poly(const RingPtr& ring, const std::string& text);

SkewPoly random_skew_poly(const RingPtr& ring, Rng& rng, uint32_t max_exp, uint32_t max_terms,
                          bool force_nonzero);

/// Views between the univariate and n-variable representations.
RingPtr ring_of_ore(const OreRingPtr& ring, TermOrderSpec order = TermOrderSpec::lex());
OreRingPtr ore_of_ring(const RingPtr& ring); // arity 1, no commutators
OrePoly to_ore(const SkewPoly& f, const OreRingPtr& target);
SkewPoly from_ore(const OrePoly& f, const RingPtr& target);

} // namespace skewpoly
