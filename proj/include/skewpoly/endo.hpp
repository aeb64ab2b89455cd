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

#include "skewpoly/rng.hpp"
#include "skewpoly/scalar.hpp"

namespace skewpoly {

enum class EndoKind {
    Identity,
    Frobenius, // a -> a^(p^j) on a finite field
    Inner,     // a -> u a u^-1 for a unit u (quaternions)
    Scale,     // y -> c y on a polynomial domain, c a nonzero constant
};

/// A ring endomorphism given by closed-form data. The represented map is
/// always a ring homomorphism fixing 1; whether it is bijective is reported
/// by is_automorphism().
class EndoSpec {
public:
    static EndoSpec identity(DomainPtr dom);
    static EndoSpec frobenius(DomainPtr dom, uint32_t j);
    static EndoSpec inner(Scalar u);
    static EndoSpec scale(Scalar c);

    EndoKind kind() const { return kind_; }
    const DomainPtr& domain() const { return dom_; }
    uint32_t frob_power() const { return frob_; }
    const Scalar& unit() const { return data_.value(); }

    Scalar apply(const Scalar& a) const;
    bool is_identity_map() const;
    bool is_automorphism() const;
    EndoSpec inverse() const;
    /// (f.compose(g))(a) == f(g(a))
    EndoSpec compose(const EndoSpec& g) const;
    EndoSpec power(uint64_t e) const;
    /// Exact equality as maps for the supported closed forms.
    bool same_map(const EndoSpec& o) const;
    std::string describe() const;

private:
    EndoKind kind_ = EndoKind::Identity;
    DomainPtr dom_;
    uint32_t frob_ = 0;
    std::optional<Scalar> data_;
};

enum class DerKind {
    Zero,
    Inner,       // a -> b a - sigma(a) b
    FormalDeriv, // d/dy on a polynomial domain
};

/// A sigma-derivation in closed form: delta(ab) = sigma(a) delta(b) + delta(a) b.
class DerSpec {
public:
    static DerSpec zero(DomainPtr dom);
    static DerSpec inner(Scalar b, EndoSpec sigma);
    static DerSpec formal_deriv(DomainPtr dom);

    DerKind kind() const { return kind_; }
    const DomainPtr& domain() const { return dom_; }
    const Scalar& element() const { return data_.value(); }
    const EndoSpec& twist() const { return sigma_.value(); }

    Scalar apply(const Scalar& a) const;
    bool is_zero_map() const;
    bool same_map(const DerSpec& o) const;
    std::string describe() const;

private:
    DerKind kind_ = DerKind::Zero;
    DomainPtr dom_;
    std::optional<Scalar> data_;
    std::optional<EndoSpec> sigma_;
};

struct CompatReport {
    bool ok = true;
    // failed law and a concrete witness element/pair when not ok
    std::string failure;
    std::vector<std::string> witnesses;
};

/// Checks that sigma is a homomorphism, delta satisfies the sigma-Leibniz
/// rule, and the two commute (sigma(delta(a)) == delta(sigma(a))), on the
/// domain generators plus random samples.
CompatReport check_compat(const EndoSpec& sigma, const DerSpec& delta, Rng& rng,
                          int samples = 200);

/// Probe set used for exact map comparisons and law checks: generators,
/// products of generators, and small library elements. For finite fields of
/// size at most 256 it contains every element.
std::vector<Scalar> probe_elements(const DomainPtr& dom);

/// Random element for property checks; height bounds degrees/numerators.
Scalar random_scalar(const DomainPtr& dom, Rng& rng, unsigned height = 4);

} // namespace skewpoly
