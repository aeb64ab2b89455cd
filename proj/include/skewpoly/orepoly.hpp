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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewpoly/endo.hpp"
#include "skewpoly/scalar.hpp"

namespace skewpoly {

class OreRing;
using OreRingPtr = std::shared_ptr<const OreRing>;

/// Univariate twisted polynomial ring over a coefficient domain, with the
/// commutation rule x*a = sigma(a)*x + delta(a).
class OreRing : public std::enable_shared_from_this<OreRing> {
public:
    static OreRingPtr make(DomainPtr dom, EndoSpec sigma, DerSpec delta, std::string var = "x");

    const DomainPtr& domain() const { return dom_; }
    const EndoSpec& sigma() const { return sigma_; }
    const DerSpec& delta() const { return delta_; }
    const std::string& var() const { return var_; }

    bool equals(const OreRing& o) const;
    std::string describe() const;

private:
    OreRing() = default;
    DomainPtr dom_;
    EndoSpec sigma_ = EndoSpec::identity(Domain::rationals());
    DerSpec delta_ = DerSpec::zero(Domain::rationals());
    std::string var_;
};

/// Element in left-coefficient normal form: ascending coefficient list,
/// highest entry nonzero (empty list = zero).
class OrePoly {
public:
    OrePoly() = default;
    explicit OrePoly(OreRingPtr ring) : ring_(std::move(ring)) {}
    static OrePoly from_coeffs(OreRingPtr ring, std::vector<Scalar> ascending);
    static OrePoly monomial(OreRingPtr ring, const Scalar& c, uint32_t k);

    const OreRingPtr& ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(uint32_t i) const;
    Scalar lead() const;

    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

private:
    friend OrePoly ore_normalize(OreRingPtr ring, std::vector<Scalar> c);
    OreRingPtr ring_;
    std::vector<Scalar> c_;
};

OrePoly ore_add(const OrePoly& f, const OrePoly& g);
OrePoly ore_sub(const OrePoly& f, const OrePoly& g);
OrePoly ore_neg(const OrePoly& f);
OrePoly ore_scalar_mul(const Scalar& c, const OrePoly& f); // left scale
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);
OrePoly ore_monic(const OrePoly& f);
OrePoly ore_pow(const OrePoly& f, uint32_t e);

/// Euclidean division with the quotient on the left: f = q*g + r,
/// deg r < deg g. The required inverses are of sigma-power images of the
/// leading coefficient of g.
std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g);
/// Quotient on the right: f = g*q + r, deg r < deg g. Needs sigma invertible.
std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g);

/// Enumerates all monic elements of the given degree over a finite
/// coefficient field, in coefficient-index order.
std::vector<OrePoly> all_monic(const OreRingPtr& ring, uint32_t deg);

/// True iff f (monic, degree >= 1, finite coefficient field) has no monic
/// right factor of intermediate degree; exhaustive search.
bool ore_irreducible(const OrePoly& f);

/// Least-degree monic q with q*S = S*q (two-sided invariance), searched
/// degree by degree up to degcap over a finite coefficient field. Invariance
/// is decided by divisibility of the finitely many products q*x, q*a, x*q,
/// a*q for domain generators a.
std::optional<OrePoly> minimal_invariant_poly(const OreRingPtr& ring, uint32_t degcap);

std::string ore_poly_to_string(const OrePoly& f);
OrePoly parse_ore_poly(const OreRingPtr& ring, const std::string& text);

} // namespace skewpoly
